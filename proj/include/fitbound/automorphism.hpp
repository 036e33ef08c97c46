#ifndef FITBOUND_AUTOMORPHISM_HPP
#define FITBOUND_AUTOMORPHISM_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fitbound/group.hpp"
#include "fitbound/poly_identity.hpp"

namespace fitbound {

// Automorphism of a fixed group, stored as the index permutation of the
// element list. Validated as a bijective homomorphism at construction; the
// group must outlive the automorphism.
class Automorphism {
  public:
    // validates bijectivity and the homomorphism property (all pairs for
    // |G| <= 5000, generator pairs above, which is already a complete proof)
    Automorphism(const Group& G, std::vector<std::int32_t> image_map);

    static Automorphism identity(const Group& G);
    // g -> h g h^-1
    static Automorphism inner(const Group& G, std::int32_t h);
    // g -> g^k
    static Automorphism power_map(const Group& G, const Int& k);
    // extend images of a generating set by closure; rejects maps that do not
    // extend to an automorphism, with a witness
    static Automorphism from_generator_images(
        const Group& G, const std::vector<std::pair<std::int32_t, std::int32_t>>& images);
    // caller guarantees the map is an automorphism
    static Automorphism trusted(const Group& G, std::vector<std::int32_t> image_map);

    const Group& group() const { return *group_; }
    std::int32_t apply(std::int32_t g) const {
        return map_[static_cast<std::size_t>(g)];
    }
    const std::vector<std::int32_t>& image_map() const { return map_; }
    std::vector<std::int32_t> inverse_map() const;

    std::int64_t order() const;  // lcm of cycle lengths of the index map
    Subgroup fixed_points() const;
    std::int64_t fixed_point_count() const;
    bool is_coprime() const;

    bool operator==(const Automorphism& other) const { return map_ == other.map_; }

    // empty state, only as a placeholder inside result structs
    Automorphism() = default;

  private:
    const Group* group_ = nullptr;
    std::vector<std::int32_t> map_;
};

struct IdentityCheck {
    bool holds = false;
    std::int32_t witness = -1;  // smallest element index violating the identity
    explicit operator bool() const { return holds; }
};

// g^(a_0) phi(g)^(a_1) ... phi^d(g)^(a_d) = 1 for every g, factors multiplied
// left to right; negative coefficients act as inverse powers
IdentityCheck satisfies_ordered(const Automorphism& phi, const IntPolynomial& f,
                                bool parallel = true);
IdentityCheck satisfies_ordered_serial(const Automorphism& phi, const IntPolynomial& f);

// product of phi^(m_i)(g)^(b_i) in the given term order
IdentityCheck satisfies_unordered(const Automorphism& phi, const UnorderedIdentity& u,
                                  bool parallel = true);
IdentityCheck satisfies_unordered_serial(const Automorphism& phi,
                                         const UnorderedIdentity& u);

// gamma . phi . gamma^-1
Automorphism conjugate(const Automorphism& phi, const Automorphism& gamma);

struct RestrictionResult {
    std::shared_ptr<Group> sub;
    std::vector<std::int32_t> to_parent;
    Automorphism aut;
};

// restriction to a phi-invariant subgroup; throws with a witness element when
// H is not invariant
RestrictionResult restrict_to(const Automorphism& phi, const Subgroup& H);

struct InducedQuotientResult {
    std::shared_ptr<Group> quot;
    std::vector<std::int32_t> projection;
    Automorphism aut;
};

// automorphism induced on G/N; N must be normal and phi-invariant
InducedQuotientResult induce_on_quotient(const Automorphism& phi, const Subgroup& N);

struct SectionResult {
    std::shared_ptr<Group> gbar;     // G / O_{q',q}(G)
    std::shared_ptr<Group> section;  // gbar / F(gbar)
    Automorphism aut;                // induced automorphism of the section
    std::int64_t induced_order = 1;
    int klen = 0;
};

// the section Gbar/F(Gbar) with Gbar = G/O_{q',q}(G), together with the
// induced automorphism, its order and the order's composition length
SectionResult section_data(const Group& G, const Automorphism& phi, std::int64_t q);

}  // namespace fitbound

#endif
