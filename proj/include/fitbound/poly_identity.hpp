#ifndef FITBOUND_POLY_IDENTITY_HPP
#define FITBOUND_POLY_IDENTITY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fitbound/bigint.hpp"

namespace fitbound {

// Integer polynomial a_0 + a_1 x + ... + a_d x^d. The zero polynomial is the
// empty coefficient vector and has no degree; constants have degree 0.
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);
    static IntPolynomial from_ints(const std::vector<long>& coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const;  // throws on the zero polynomial
    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(int i) const;  // 0 beyond the stored range

    Int evaluate(const Int& x) const;
    Int content() const;  // 0 for the zero polynomial
    bool is_primitive() const;

    std::string to_string() const;

    bool operator==(const IntPolynomial& other) const = default;

  private:
    std::vector<Int> coeffs_;  // normalized: last entry nonzero
};

// f_{n,j}: coefficients a_i with i = j mod n, compressed so that
// sum_j f_{n,j}(x^n) * x^j = f(x).
IntPolynomial partial_sum(const IntPolynomial& f, int n, int j);

// least j in 0..n-1 with f_{n,j} primitive; f itself must be primitive
int primitive_partial_exists(const IntPolynomial& f, int n);

// Identity with explicit term order: product of (exponent m_i, coefficient b_i)
// terms evaluated left to right.
struct UnorderedIdentity {
    std::vector<std::pair<Int, Int>> terms;  // (m_i, b_i), m_i >= 0

    // collapse equal exponents; may cancel to the zero polynomial
    IntPolynomial underlying_polynomial() const;
    Int max_exponent() const;  // the invariant d of the unordered theorem
    bool is_primitive() const { return underlying_polynomial().is_primitive(); }
};

// Value of one of the bound functions: either an exact integer or a product
// of factorials (base^exp)! standing in for a value too large to materialize.
// Certificates support ">= x" comparisons without expanding the factorials.
class BigBound {
  public:
    struct Factor {
        Int base;
        unsigned long exp = 1;
        bool factorial = false;  // value is (base^exp)! rather than base^exp
    };

    static BigBound exact(Int v);

    bool is_exact() const { return factors_.empty(); }
    const Int& exact_value() const;  // throws when inexact
    const Int& exact_part() const { return exact_part_; }
    const std::vector<Factor>& factors() const { return factors_; }

    void push_factor(Factor f);

    // decide "this >= x" (x materialized); exact when possible, otherwise via
    // a lower bound that is always sufficient for desk-scale x
    bool at_least(const Int& x) const;

    // decide "this >= other" for the certificate chains produced by b2;
    // throws when the comparison cannot be decided
    bool at_least(const BigBound& other) const;

    std::string to_string() const;

  private:
    Int exact_part_ = 1;
    std::vector<Factor> factors_;  // value = exact_part * prod factors
};

// B1(d,m) = 8d + m + 2
Int b1(const Int& d, const Int& m);

// B3(d,m) = m + m^(1000 d); m >= 1
Int b3(unsigned long d, const Int& m);

// B2(d,1) = 1, B2(d,m) = (B3(d,m)^(m d))! * B2(d, floor(m/2)); m >= 1
BigBound b2(unsigned long d, const Int& m);

// 8 deg(f) + 2|f(1)| + 2; requires f(1) != 0
Int corollary_bound(const IntPolynomial& f);

Int content_of(const std::vector<Int>& v);

}  // namespace fitbound

#endif
