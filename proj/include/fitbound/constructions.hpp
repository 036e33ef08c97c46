#ifndef FITBOUND_CONSTRUCTIONS_HPP
#define FITBOUND_CONSTRUCTIONS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fitbound/automorphism.hpp"
#include "fitbound/finite_field.hpp"
#include "fitbound/group.hpp"
#include "fitbound/poly_identity.hpp"

namespace fitbound {

// Named stock groups: trivial, Cn, Dn (n = order, n >= 6 even), Sn (n <= 7),
// An (n <= 7), V4. Underscores are accepted ("C_7").
Group stock(const std::string& name, std::int64_t element_cap = kDefaultElementCap);

// The group on pairs (s,u) in K x K with u + u^q = -N s s^q, K = GF(q^2),
// under (s,u)*(t,v) = (s+t, u+v - N s^q t); a special group of order q^3
// stable under the coordinatewise Frobenius.
struct DDomainGroup {
    std::shared_ptr<FiniteField> field;  // K = GF(q^2)
    std::int64_t q = 0;                  // subfield order p^e
    Int N;                               // structure constant, reduced mod p
    std::shared_ptr<Group> group;        // cayley backend
    std::vector<std::pair<Felem, Felem>> elements;  // index -> (s, u)
    Automorphism frobenius;              // (s,u) -> (s^p, u^p)
};

DDomainGroup build_ddomain(std::int64_t p, int e, const Int& N,
                           std::int64_t cayley_cap = kDefaultCayleyCap);

struct ProjectionCheck {
    bool surjective = false;
    std::vector<Felem> witness_u;  // for each s (by element index), some partner u
    std::vector<std::int64_t> fiber_sizes;
};

// first-coordinate projection of D_{N,K} is all of K
ProjectionCheck projection_surjective(const DDomainGroup& D);

// PSL(2,q) acting on the q+1 points of the projective line; point i < q is
// the field element with index i, point q is infinity.
struct Psl2Group {
    std::shared_ptr<FiniteField> field;
    std::shared_ptr<Group> group;

    // automorphism induced by t -> t^(p^k) on homogeneous coordinates
    Automorphism frobenius_action(int k) const;
};

Psl2Group build_psl2(std::int64_t q, std::int64_t element_cap = kDefaultElementCap,
                     int degree_cap = 2048);

struct ShiftPowerResult {
    std::shared_ptr<Group> group;  // S^n
    Automorphism shift;            // (g_1,...,g_n) -> (g_n, g_1, ..., g_{n-1})
    std::vector<std::vector<std::int32_t>> injections;
};

ShiftPowerResult shift_power(const Group& S, int n,
                             std::int64_t element_cap = kDefaultElementCap);

struct CompanionActionResult {
    std::shared_ptr<Group> group;  // elementary abelian (Z/p)^d
    Automorphism aut;              // companion matrix of f mod p
};

// f must be monic mod p with f(0) nonzero mod p; the returned pair satisfies
// the ordered identity f by construction
CompanionActionResult companion_action(std::int64_t p, const IntPolynomial& f,
                                       std::int64_t cayley_cap = kDefaultCayleyCap);

}  // namespace fitbound

#endif
