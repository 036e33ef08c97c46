#ifndef FITBOUND_FROBENIUS_IDENTITY_HPP
#define FITBOUND_FROBENIUS_IDENTITY_HPP

#include <cstdint>
#include <vector>

#include "fitbound/bigint.hpp"
#include "fitbound/finite_field.hpp"

namespace fitbound {

// Does a_0 s + a_1 s^(q0) + ... + a_d s^(q0^d) vanish for every s in K?
// q0 must be a power of the characteristic.
struct AdditiveIdentityProblem {
    const FiniteField* field = nullptr;
    std::int64_t q0 = 0;
    std::vector<Int> coeffs;
};

struct AdditiveCheck {
    bool holds = false;
    Felem witness = -1;  // smallest s violating the identity
};

AdditiveCheck check_additive_identity(const AdditiveIdentityProblem& prob,
                                      bool parallel = true);
AdditiveCheck check_additive_identity_serial(const AdditiveIdentityProblem& prob);

// Determinant of the (d+1)x(d+1) matrix M_ij = omega^(i (q0^j - 1)), computed
// by Gaussian elimination and by the Vandermonde product formula
// prod_{i<j} (x_j - x_i) with x_j = omega^(q0^j - 1); the two routes must
// agree or the call throws.
Felem vandermonde_det(const FiniteField& K, std::int64_t q0, int d);

// Vanishing criterion: det = 0 iff q0^i = q0^j mod (q-1) for some i < j <= d.
bool vandermonde_vanishing_expected(const FiniteField& K, std::int64_t q0, int d);

struct MinimalIdentity {
    bool found = false;
    int degree = 0;
    std::vector<Int> coeffs;  // primitive integer lift of the witness vector
    bool degenerate = false;  // the Frobenius t -> t^q0 is trivial on K
};

// Least d >= 1 admitting a primitive integer identity of degree d for the
// Frobenius t -> t^(q0), by exhaustive search over coefficient vectors mod p
// with a primitive lift. When the Frobenius is trivial the result degenerates
// to -1 + x and is flagged rather than folded into the order-bound check.
MinimalIdentity min_primitive_identity_degree(const FiniteField& K, std::int64_t q0,
                                              int max_degree = -1, bool parallel = true);

// primitive integer vector congruent to v mod p (v nonzero mod p)
std::vector<Int> primitive_lift(const std::vector<std::int64_t>& v, std::int64_t p);

}  // namespace fitbound

#endif
