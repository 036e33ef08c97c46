#ifndef FITBOUND_STRUCTURE_HPP
#define FITBOUND_STRUCTURE_HPP

#include <cstdint>
#include <vector>

#include "fitbound/group.hpp"

namespace fitbound {

// Largest normal nilpotent subgroup, as the product of the normal closures
// <g>^G that are nilpotent (elementwise brute force; closures are shared per
// conjugacy class since conjugate elements have equal closures).
Subgroup fitting_subgroup(const Group& G);

// Largest normal soluble subgroup, same elementwise characterization.
Subgroup soluble_radical(const Group& G);

// Largest normal subgroup of order coprime to q.
Subgroup o_qprime(const Group& G, std::int64_t q);

// Inverse image of the largest normal q-subgroup of G/O_{q'}(G). Computed
// without materializing the quotient: g qualifies when the image of <g>^G in
// G/O_{q'}(G) is a q-group, i.e. |<g>^G . O_{q'}| / |O_{q'}| is a power of q.
Subgroup o_qprime_q(const Group& G, std::int64_t q);

struct FittingSeries {
    // ascending terms 1 = F_0 <= F_1 <= ... as subgroups of G; the last term
    // is G itself when G is soluble
    std::vector<Subgroup> terms;
    int height = 0;
};

// ascending Fitting series via iterated quotients; G must be soluble
FittingSeries fitting_series(const Group& G);
int fitting_height(const Group& G);
int fitting_height(const Subgroup& H);

// normal closure of a single element, memoized per conjugacy class
Subgroup class_normal_closure(const Group& G, std::int32_t g);

}  // namespace fitbound

#endif
