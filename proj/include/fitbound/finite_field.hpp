#ifndef FITBOUND_FINITE_FIELD_HPP
#define FITBOUND_FINITE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fitbound/bigint.hpp"

namespace fitbound {

// A field element is its index in 0..q-1: the base-p encoding of its
// coordinate vector in the power basis of the modulus (coeff 0 least
// significant digit).
using Felem = std::int32_t;

inline constexpr std::int64_t kDefaultFieldCap = 1 << 20;

// GF(p^e) with exact table-backed arithmetic. The modulus is the
// lexicographically smallest monic irreducible of degree e (encoding order),
// omega the smallest element of full multiplicative order. Immutable after
// construction.
class FiniteField {
  public:
    FiniteField(std::int64_t p, int e, std::int64_t size_cap = kDefaultFieldCap);

    std::int64_t p() const { return p_; }
    int e() const { return e_; }
    std::int64_t q() const { return q_; }

    // modulus coefficients c_0..c_e with c_e = 1
    const std::vector<std::int32_t>& modulus() const { return modulus_; }
    Felem omega() const { return omega_; }

    Felem zero() const { return 0; }
    Felem one() const { return 1; }

    Felem add(Felem a, Felem b) const;
    Felem neg(Felem a) const;
    Felem sub(Felem a, Felem b) const { return add(a, neg(b)); }
    Felem mul(Felem a, Felem b) const;
    Felem inv(Felem a) const;
    Felem pow(Felem a, Int k) const;

    // t -> t^(p^power); power is taken mod e
    Felem frobenius_apply(Felem a, int power) const;

    // multiplicative order; a must be nonzero
    std::int64_t multiplicative_order(Felem a) const;

    // discrete log base omega; a must be nonzero
    std::int64_t log(Felem a) const;
    // omega^k (k arbitrary, reduced mod q-1)
    Felem omega_pow(std::int64_t k) const;

    std::vector<std::int32_t> coeffs(Felem a) const;
    Felem from_coeffs(const std::vector<std::int32_t>& c) const;

    // multiply an integer scalar into a field element (scalar reduced mod p)
    Felem scalar_mul(const Int& n, Felem a) const;
    Felem scalar_mul(std::int64_t n, Felem a) const;

    std::string to_string(Felem a) const;

  private:
    std::int64_t p_;
    int e_;
    std::int64_t q_;
    std::vector<std::int32_t> modulus_;
    Felem omega_ = 0;
    std::vector<Felem> exp_;          // exp_[k] = omega^k, k in 0..q-2
    std::vector<std::int32_t> log_;   // inverse of exp_ (log_[0] unused)
    std::vector<std::pair<std::int64_t, int>> unit_group_factors_;

    std::vector<std::int32_t> poly_of(Felem a) const;
    Felem elem_of(std::vector<std::int32_t> poly) const;
    Felem mul_slow(Felem a, Felem b) const;
    Felem pow_slow(Felem a, std::int64_t k) const;
};

// The map t -> t^(p^power) as a value; a field automorphism of K.
struct FrobeniusMap {
    const FiniteField* field;
    int power;
    Felem operator()(Felem a) const { return field->frobenius_apply(a, power); }
};

FiniteField make_field(std::int64_t p, int e, std::int64_t size_cap = kDefaultFieldCap);

FrobeniusMap frobenius(const FiniteField& K, int power);

// For K2 = GF(q^2): the smallest (in element order) beta outside the
// q-element subfield L with alpha := beta + beta^q nonzero; then alpha lies in
// L \ {0} and (beta + beta^q)/alpha = 1. Throws if |K2| != q^2.
std::pair<Felem, Felem> trace_pair_witness(const FiniteField& K2, std::int64_t q);

// Exhaustive field-axiom check (associativity, commutativity, distributivity,
// neutral elements, inverses) over all pairs/triples. Intended for q <= 625.
// Returns true when every axiom holds; on failure `what` names the violated
// axiom and witness.
bool validate_field_axioms(const FiniteField& K, std::string* what = nullptr,
                           bool parallel = true);
bool validate_field_axioms_serial(const FiniteField& K, std::string* what = nullptr);

}  // namespace fitbound

#endif
