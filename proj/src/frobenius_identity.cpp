#include "fitbound/frobenius_identity.hpp"

#include <algorithm>
#include <stdexcept>

#include "fitbound/kernels.hpp"
#include "fitbound/numbers.hpp"
#include "fitbound/poly_identity.hpp"

namespace fitbound {

namespace {

void require_char_power(const FiniteField& K, std::int64_t q0) {
    std::int64_t v = q0;
    if (v < 1) throw std::invalid_argument("q0 must be a positive power of p");
    while (v % K.p() == 0) v /= K.p();
    if (v != 1) throw std::invalid_argument("q0 must be a power of the characteristic");
}

// evaluate sum a_i s^(q0^i) with coefficients already reduced mod p
Felem eval_additive(const FiniteField& K, const std::vector<std::int64_t>& a,
                    const std::vector<std::int64_t>& frob_exp, Felem s) {
    Felem acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        Felem term = (s == 0) ? 0 : K.omega_pow(K.log(s) * frob_exp[i] % (K.q() - 1));
        acc = K.add(acc, K.scalar_mul(a[i], term));
    }
    return acc;
}

// frob_exp[i] = q0^i mod (q-1), the discrete-log multiplier of s -> s^(q0^i)
std::vector<std::int64_t> frobenius_exponents(const FiniteField& K, std::int64_t q0,
                                              std::size_t count) {
    std::int64_t mod = K.q() - 1 > 0 ? K.q() - 1 : 1;
    std::vector<std::int64_t> out(count);
    std::int64_t cur = 1 % mod;
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = cur;
        cur = cur * (q0 % mod) % mod;
    }
    return out;
}

AdditiveCheck additive_impl(const AdditiveIdentityProblem& prob, bool parallel) {
    const FiniteField& K = *prob.field;
    require_char_power(K, prob.q0);
    std::vector<std::int64_t> a;
    for (const Int& c : prob.coeffs) a.push_back(int_mod(c, Int(K.p())).get_si());
    std::vector<std::int64_t> fe = frobenius_exponents(K, prob.q0, a.size());

    std::int64_t w = -1;
    auto ok = [&](std::int64_t s) {
        return eval_additive(K, a, fe, static_cast<Felem>(s)) == 0;
    };
    if (kernels::all_of(K.q(), ok, &w, parallel)) return {true, -1};
    return {false, static_cast<Felem>(w)};
}

}  // namespace

AdditiveCheck check_additive_identity(const AdditiveIdentityProblem& prob,
                                      bool parallel) {
    return additive_impl(prob, parallel);
}

AdditiveCheck check_additive_identity_serial(const AdditiveIdentityProblem& prob) {
    return additive_impl(prob, false);
}

Felem vandermonde_det(const FiniteField& K, std::int64_t q0, int d) {
    require_char_power(K, q0);
    if (d < 0) throw std::invalid_argument("vandermonde_det: d must be >= 0");
    const int n = d + 1;
    std::vector<std::int64_t> fe = frobenius_exponents(K, q0, static_cast<std::size_t>(n));

    // x_j = omega^(q0^j - 1)
    std::vector<Felem> x(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        x[static_cast<std::size_t>(j)] = K.omega_pow(fe[static_cast<std::size_t>(j)] - 1);

    // route 1: Gaussian elimination on M_ij = x_j^i
    std::vector<Felem> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i * n + j)] =
                K.pow(x[static_cast<std::size_t>(j)], Int(i));
    Felem det = K.one();
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n && pivot < 0; ++row)
            if (m[static_cast<std::size_t>(row * n + col)] != 0) pivot = row;
        if (pivot < 0) {
            det = 0;
            break;
        }
        if (pivot != col) {
            for (int j = 0; j < n; ++j)
                std::swap(m[static_cast<std::size_t>(pivot * n + j)],
                          m[static_cast<std::size_t>(col * n + j)]);
            det = K.neg(det);
        }
        Felem pv = m[static_cast<std::size_t>(col * n + col)];
        det = K.mul(det, pv);
        Felem pv_inv = K.inv(pv);
        for (int row = col + 1; row < n; ++row) {
            Felem factor = K.mul(m[static_cast<std::size_t>(row * n + col)], pv_inv);
            if (factor == 0) continue;
            for (int j = col; j < n; ++j)
                m[static_cast<std::size_t>(row * n + j)] =
                    K.sub(m[static_cast<std::size_t>(row * n + j)],
                          K.mul(factor, m[static_cast<std::size_t>(col * n + j)]));
        }
    }

    // route 2: product formula
    Felem prod = K.one();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            prod = K.mul(prod, K.sub(x[static_cast<std::size_t>(j)],
                                     x[static_cast<std::size_t>(i)]));

    if (det != prod)
        throw std::logic_error("vandermonde_det: elimination and product formula disagree");
    return det;
}

bool vandermonde_vanishing_expected(const FiniteField& K, std::int64_t q0, int d) {
    require_char_power(K, q0);
    std::vector<std::int64_t> fe =
        frobenius_exponents(K, q0, static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            if (fe[static_cast<std::size_t>(i)] == fe[static_cast<std::size_t>(j)])
                return true;
    return false;
}

std::vector<Int> primitive_lift(const std::vector<std::int64_t>& v, std::int64_t p) {
    std::vector<Int> lift(v.begin(), v.end());
    if (content_of(lift) == 1) return lift;
    // subtract a multiple of p from one entry; some small multiple always
    // reaches content 1 because p is invertible modulo every other divisor
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        for (std::int64_t t = 1; t <= p; ++t) {
            std::vector<Int> w(v.begin(), v.end());
            w[k] -= Int(p) * t;
            if (content_of(w) == 1) return w;
        }
    }
    throw std::logic_error("primitive_lift: no primitive lift found");
}

MinimalIdentity min_primitive_identity_degree(const FiniteField& K, std::int64_t q0,
                                              int max_degree, bool parallel) {
    require_char_power(K, q0);
    const std::int64_t p = K.p();
    const std::int64_t q = K.q();
    std::int64_t mod = q - 1 > 0 ? q - 1 : 1;
    bool trivial_frobenius = (q0 % mod == 1 % mod) || q == 2;
    // order of the Frobenius bounds the search
    int limit = max_degree > 0 ? max_degree : K.e();

    for (int d = 1; d <= limit; ++d) {
        std::vector<std::int64_t> fe =
            frobenius_exponents(K, q0, static_cast<std::size_t>(d) + 1);
        std::int64_t space = 1;
        for (int i = 0; i <= d; ++i) space *= p;

        auto decode = [&](std::int64_t code) {
            std::vector<std::int64_t> a(static_cast<std::size_t>(d) + 1);
            for (int i = 0; i <= d; ++i) {
                a[static_cast<std::size_t>(i)] = code % p;
                code /= p;
            }
            return a;
        };
        auto is_identity = [&](std::int64_t code) {
            if (code == 0) return false;  // nonzero vectors only
            std::int64_t digits[64];
            std::int64_t c = code;
            for (int i = 0; i <= d; ++i) {
                digits[i] = c % p;
                c /= p;
            }
            const std::int64_t mod = q - 1;
            for (Felem s = 1; s < q; ++s) {  // s = 0 holds trivially
                std::int64_t lg = K.log(s);
                Felem acc = 0;
                for (int i = 0; i <= d; ++i) {
                    if (digits[i] == 0) continue;
                    Felem term = K.omega_pow(lg * fe[static_cast<std::size_t>(i)] % mod);
                    acc = K.add(acc, K.scalar_mul(digits[i], term));
                }
                if (acc != 0) return false;
            }
            return true;
        };
        std::int64_t found = -1;
        if (parallel) {
            std::vector<std::int64_t> hits = kernels::collect_parallel(space, is_identity);
            if (!hits.empty()) found = hits.front();
        } else {
            for (std::int64_t code = 0; code < space && found < 0; ++code)
                if (is_identity(code)) found = code;
        }
        if (found >= 0) {
            MinimalIdentity out;
            out.found = true;
            out.degree = d;
            out.coeffs = primitive_lift(decode(found), p);
            out.degenerate = trivial_frobenius;
            return out;
        }
    }
    MinimalIdentity none;
    none.degenerate = trivial_frobenius;
    return none;
}

}  // namespace fitbound
