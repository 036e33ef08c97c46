#ifndef FITBOUND_NUMBERS_HPP
#define FITBOUND_NUMBERS_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace fitbound {

bool is_prime(std::int64_t n);

// Prime factorization by trial division, pairs (prime, exponent) ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// Number of prime divisors counted with multiplicity (0 for n = 1).
int composition_length(std::int64_t n);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// a^e with overflow guard: returns -1 if the result would exceed `cap`.
std::int64_t checked_pow(std::int64_t a, int e, std::int64_t cap);

}  // namespace fitbound

#endif
