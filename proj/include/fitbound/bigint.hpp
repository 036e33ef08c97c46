#ifndef FITBOUND_BIGINT_HPP
#define FITBOUND_BIGINT_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace fitbound {

// Arbitrary-precision integers are GMP throughout; Int is the only spelling
// used outside this header.
using Int = mpz_class;

inline Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// Least nonnegative residue of a mod m (m > 0), safe for negative a.
inline Int int_mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline std::size_t bit_length(const Int& a) {
    return mpz_sizeinbase(a.get_mpz_t(), 2);
}

inline std::string to_decimal(const Int& a) { return a.get_str(10); }

}  // namespace fitbound

#endif
