#ifndef FITBOUND_GROUP_HPP
#define FITBOUND_GROUP_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fitbound {

class Group;

// Permutation of {0..degree-1} stored as the image list.
struct Permutation {
    std::vector<std::uint16_t> images;

    static Permutation identity(int degree);
    int degree() const { return static_cast<int>(images.size()); }
    int apply(int point) const { return images[static_cast<std::size_t>(point)]; }
    bool is_identity() const;
    Permutation inverse() const;
    // cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"
    std::string to_cycles() const;

    bool operator==(const Permutation& other) const = default;
};

// apply a first, then b
Permutation compose(const Permutation& a, const Permutation& b);

inline constexpr std::int64_t kDefaultElementCap = 100000;
inline constexpr std::int64_t kDefaultCayleyCap = 4096;

// A subgroup of a fixed parent group: the member set plus a small cached
// generating list. The parent must outlive the subgroup.
struct Subgroup {
    const Group* parent = nullptr;
    std::vector<std::int32_t> members;  // ascending element indices
    std::vector<std::uint8_t> mask;     // size |parent|
    std::vector<std::int32_t> gens;     // small generating set (may be empty)

    std::int64_t order() const { return static_cast<std::int64_t>(members.size()); }
    bool contains(std::int32_t g) const { return mask[static_cast<std::size_t>(g)] != 0; }
    bool is_trivial() const { return members.size() == 1; }
    bool same_members(const Subgroup& other) const { return members == other.members; }
};

namespace detail {
struct GroupCaches;

struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
        return std::hash<std::string_view>{}(s);
    }
};
}  // namespace detail

// A finite group with full element enumeration. Two backends: `permutation`
// (elements enumerated by breadth-first closure from the generators, which
// fixes the canonical element order) and `cayley` (explicit multiplication
// table). Immutable after construction; queries are safe concurrently.
class Group {
  public:
    enum class Backend { permutation, cayley };

    Backend backend() const { return backend_; }
    std::int64_t order() const { return n_; }
    std::int32_t identity() const { return id_; }
    std::int32_t mul(std::int32_t a, std::int32_t b) const;
    std::int32_t inv(std::int32_t a) const { return inv_[static_cast<std::size_t>(a)]; }
    std::int32_t power(std::int32_t a, std::int64_t k) const;
    std::int32_t conj(std::int32_t g, std::int32_t by) const;  // by^-1 g by
    const std::vector<std::int32_t>& generator_indices() const { return gens_; }

    // permutation backend only
    int degree() const { return degree_; }
    Permutation permutation_of(std::int32_t i) const;
    std::optional<std::int32_t> index_of(const Permutation& p) const;

    // cayley backend only
    const std::vector<std::int32_t>& table() const { return table_; }

    std::int64_t element_order(std::int32_t g) const;
    std::int64_t exponent() const;  // lcm of element orders

    // conjugacy classes (computed lazily): id per element and ascending reps
    const std::vector<std::int32_t>& class_ids() const;
    const std::vector<std::int32_t>& class_reps() const;

    std::string element_name(std::int32_t i) const;

    // shared analysis scratch used by the structure module
    detail::GroupCaches& caches() const { return *caches_; }

    static Group from_permutation_elements(int degree, std::vector<Permutation> gens,
                                           std::int64_t element_cap);
    // trusted table: caller guarantees the group axioms
    static Group from_validated_table(std::vector<std::int32_t> table, std::int64_t n,
                                      std::int32_t identity,
                                      std::vector<std::int32_t> gens);

    // empty placeholder; use the factory functions to build real groups
    Group() = default;

  private:
    Backend backend_ = Backend::permutation;
    std::int64_t n_ = 0;
    std::int32_t id_ = 0;
    std::vector<std::int32_t> inv_;
    std::vector<std::int32_t> gens_;

    // permutation backend
    int degree_ = 0;
    std::vector<std::uint16_t> elems_;  // n_ x degree_
    std::unordered_map<std::string, std::int32_t, detail::StringHash, std::equal_to<>>
        index_;

    // cayley backend
    std::vector<std::int32_t> table_;

    mutable std::shared_ptr<detail::GroupCaches> caches_;

    std::string key_of(const Permutation& p) const;
    void finish_common();
};

namespace detail {
struct GroupCaches {
    std::mutex mu;
    std::vector<std::int64_t> element_orders;  // 0 = unknown
    std::int64_t exponent = 0;
    std::vector<std::int32_t> class_ids;
    std::vector<std::int32_t> class_reps;
    // slot for the structure module's memoization
    std::shared_ptr<void> analysis;
};
}  // namespace detail

Group from_permutations(int degree, const std::vector<Permutation>& generators,
                        std::int64_t element_cap = kDefaultElementCap);

// 0-based table; validates Latin square, two-sided identity, inverses and
// associativity, reporting a witness on violation
Group from_cayley_table(const std::vector<std::vector<std::int32_t>>& table,
                        std::int64_t cayley_cap = kDefaultCayleyCap);

Subgroup subgroup_generated(const Group& G, const std::vector<std::int32_t>& seeds);
Subgroup normal_closure(const Group& G, const std::vector<std::int32_t>& seeds);
Subgroup trivial_subgroup(const Group& G);
Subgroup full_subgroup(const Group& G);

// smallest deterministic generating list for a member set (ascending scan)
std::vector<std::int32_t> small_generating_set(const Group& G,
                                               const std::vector<std::int32_t>& members);

// same scan over a raw multiplication table, for use before a Group exists
std::vector<std::int32_t> small_generating_set_table(const std::vector<std::int32_t>& flat,
                                                     std::int64_t n, std::int32_t id);

// subgroup generated by commutators [a,b], a in A, b in B, normalized under
// the generators of <A, B>
Subgroup commutator_subgroup(const Group& G, const Subgroup& A, const Subgroup& B);

std::vector<Subgroup> derived_series(const Group& G);
bool is_soluble(const Group& G);
std::vector<Subgroup> lower_central_series(const Group& G);
bool is_nilpotent(const Group& G);

// the same series run on a subgroup without materializing it as a Group
bool is_soluble_subgroup(const Subgroup& H);
bool is_nilpotent_subgroup(const Subgroup& H);

bool is_normal(const Group& G, const Subgroup& N, std::string* witness = nullptr);

struct QuotientResult {
    Group group;
    std::vector<std::int32_t> projection;  // parent index -> coset index
    std::vector<std::int32_t> section;     // coset index -> representative
};

// coset group of a normal subgroup; cosets are ordered by their smallest
// parent index, so the result is canonical
QuotientResult quotient(const Group& G, const Subgroup& N,
                        std::int64_t cayley_cap = kDefaultCayleyCap);

struct ProductResult {
    Group group;
    // injections[k][i] = product index of factor-k element i
    std::vector<std::vector<std::int32_t>> injections;
};

ProductResult direct_product(const std::vector<const Group*>& factors,
                             std::int64_t element_cap = kDefaultElementCap);

std::int64_t exponent(const Group& G);

struct SubgroupGroup {
    Group group;
    std::vector<std::int32_t> to_parent;                    // sub index -> parent index
    std::unordered_map<std::int32_t, std::int32_t> to_sub;  // parent index -> sub index
};

// materialize a subgroup as a standalone Group (permutation backend keeps the
// parent's degree; cayley backend reindexes the table)
SubgroupGroup subgroup_as_group(const Subgroup& H);

}  // namespace fitbound

#endif
