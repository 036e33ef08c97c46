#include "fitbound/finite_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "fitbound/kernels.hpp"
#include "fitbound/numbers.hpp"

namespace fitbound {

namespace {

using Poly = std::vector<std::int32_t>;  // coefficients mod p, index = degree

int degree_of(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

// remainder of f by monic g, in place
void mod_by(Poly& f, const Poly& g, std::int64_t p) {
    int dg = degree_of(g);
    for (int i = degree_of(f); i >= dg; i = degree_of(f)) {
        std::int64_t c = f[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j <= dg; ++j) {
            std::int64_t v = f[static_cast<std::size_t>(i - dg + j)] -
                             c * g[static_cast<std::size_t>(j)] % p;
            f[static_cast<std::size_t>(i - dg + j)] =
                static_cast<std::int32_t>(((v % p) + p) % p);
        }
    }
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::int32_t>(
                (r[i + j] + static_cast<std::int64_t>(a[i]) * b[j]) % p);
    }
    return r;
}

bool is_irreducible(const Poly& f, std::int64_t p) {
    int d = degree_of(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    // trial division against every monic polynomial of degree 1..d/2
    for (int dd = 1; 2 * dd <= d; ++dd) {
        std::int64_t count = 1;
        for (int i = 0; i < dd; ++i) count *= p;
        for (std::int64_t code = 0; code < count; ++code) {
            Poly g(static_cast<std::size_t>(dd) + 1, 0);
            std::int64_t c = code;
            for (int i = 0; i < dd; ++i) {
                g[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(c % p);
                c /= p;
            }
            g[static_cast<std::size_t>(dd)] = 1;
            Poly r = f;
            mod_by(r, g, p);
            if (degree_of(r) < 0) return false;
        }
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(std::int64_t p, int e, std::int64_t size_cap) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("make_field: p is not prime");
    if (e < 1) throw std::invalid_argument("make_field: e must be >= 1");
    q_ = checked_pow(p, e, size_cap);
    if (q_ < 0)
        throw std::invalid_argument("make_field: p^e exceeds the field size cap");

    // lexicographically smallest monic irreducible of degree e, by encoding
    std::int64_t ncodes = 1;
    for (int i = 0; i < e; ++i) ncodes *= p;
    modulus_.assign(static_cast<std::size_t>(e) + 1, 0);
    bool found = false;
    for (std::int64_t code = 0; code < ncodes && !found; ++code) {
        std::int64_t c = code;
        for (int i = 0; i < e; ++i) {
            modulus_[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(c % p);
            c /= p;
        }
        modulus_[static_cast<std::size_t>(e)] = 1;
        found = is_irreducible(modulus_, p);
    }
    if (!found) throw std::logic_error("make_field: no irreducible modulus found");

    unit_group_factors_ = factorize(q_ - 1 > 0 ? q_ - 1 : 1);
    if (q_ - 1 == 1) unit_group_factors_.clear();

    // omega: smallest element (encoding order) of multiplicative order q-1
    for (Felem a = 1; a < q_; ++a) {
        bool full = true;
        for (const auto& [r, mult] : unit_group_factors_) {
            if (pow_slow(a, (q_ - 1) / r) == 1) {
                full = false;
                break;
            }
        }
        if (full) {
            omega_ = a;
            break;
        }
    }
    if (omega_ == 0) throw std::logic_error("make_field: no generator found");

    exp_.assign(static_cast<std::size_t>(q_ - 1), 0);
    log_.assign(static_cast<std::size_t>(q_), 0);
    Felem cur = 1;
    for (std::int64_t k = 0; k < q_ - 1; ++k) {
        exp_[static_cast<std::size_t>(k)] = cur;
        log_[static_cast<std::size_t>(cur)] = static_cast<std::int32_t>(k);
        cur = mul_slow(cur, omega_);
    }
    if (cur != 1) throw std::logic_error("make_field: generator order mismatch");
}

std::vector<std::int32_t> FiniteField::poly_of(Felem a) const {
    Poly c(static_cast<std::size_t>(e_), 0);
    std::int64_t v = a;
    for (int i = 0; i < e_; ++i) {
        c[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(v % p_);
        v /= p_;
    }
    return c;
}

Felem FiniteField::elem_of(Poly poly) const {
    mod_by(poly, modulus_, p_);
    std::int64_t v = 0;
    for (int i = e_ - 1; i >= 0; --i) {
        std::int32_t c = (static_cast<std::size_t>(i) < poly.size())
                             ? poly[static_cast<std::size_t>(i)]
                             : 0;
        v = v * p_ + c;
    }
    return static_cast<Felem>(v);
}

Felem FiniteField::mul_slow(Felem a, Felem b) const {
    if (a == 0 || b == 0) return 0;
    return elem_of(poly_mul(poly_of(a), poly_of(b), p_));
}

Felem FiniteField::pow_slow(Felem a, std::int64_t k) const {
    Felem r = 1;
    Felem base = a;
    while (k > 0) {
        if (k & 1) r = mul_slow(r, base);
        base = mul_slow(base, base);
        k >>= 1;
    }
    return r;
}

Felem FiniteField::add(Felem a, Felem b) const {
    if (p_ == 2) return a ^ b;
    std::int64_t r = 0, mult = 1, x = a, y = b;
    for (int i = 0; i < e_; ++i) {
        r += (x % p_ + y % p_) % p_ * mult;
        x /= p_;
        y /= p_;
        mult *= p_;
    }
    return static_cast<Felem>(r);
}

Felem FiniteField::neg(Felem a) const {
    if (p_ == 2) return a;
    std::int64_t r = 0, mult = 1, x = a;
    for (int i = 0; i < e_; ++i) {
        std::int64_t d = x % p_;
        r += (d == 0 ? 0 : p_ - d) * mult;
        x /= p_;
        mult *= p_;
    }
    return static_cast<Felem>(r);
}

Felem FiniteField::mul(Felem a, Felem b) const {
    if (a == 0 || b == 0) return 0;
    std::int64_t k = log_[static_cast<std::size_t>(a)] +
                     static_cast<std::int64_t>(log_[static_cast<std::size_t>(b)]);
    if (k >= q_ - 1) k -= q_ - 1;
    return exp_[static_cast<std::size_t>(k)];
}

Felem FiniteField::inv(Felem a) const {
    if (a == 0) throw std::domain_error("field inverse of zero");
    std::int64_t k = (q_ - 1 - log_[static_cast<std::size_t>(a)]) % (q_ - 1);
    return exp_[static_cast<std::size_t>(k)];
}

Felem FiniteField::pow(Felem a, Int k) const {
    if (a == 0) {
        if (k == 0) return 1;
        if (k < 0) throw std::domain_error("negative power of zero");
        return 0;
    }
    Int r = int_mod(Int(log_[static_cast<std::size_t>(a)]) * k, Int(q_ - 1));
    return exp_[r.get_ui()];
}

Felem FiniteField::frobenius_apply(Felem a, int power) const {
    if (a == 0) return 0;
    int k = power % e_;
    std::int64_t m = 1;
    for (int i = 0; i < k; ++i) m = m * p_ % (q_ - 1 == 0 ? 1 : q_ - 1);
    if (q_ - 1 == 0) return a;
    std::int64_t idx = static_cast<std::int64_t>(log_[static_cast<std::size_t>(a)]) *
                       m % (q_ - 1);
    return exp_[static_cast<std::size_t>(idx)];
}

std::int64_t FiniteField::multiplicative_order(Felem a) const {
    if (a == 0) throw std::domain_error("multiplicative order of zero");
    std::int64_t ord = q_ - 1;
    for (const auto& [r, mult] : unit_group_factors_) {
        for (int i = 0; i < mult; ++i) {
            if (pow(a, Int(ord / r)) == 1)
                ord /= r;
            else
                break;
        }
    }
    return ord;
}

std::int64_t FiniteField::log(Felem a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return log_[static_cast<std::size_t>(a)];
}

Felem FiniteField::omega_pow(std::int64_t k) const {
    if (q_ == 2) return 1;
    std::int64_t m = k % (q_ - 1);
    if (m < 0) m += q_ - 1;
    return exp_[static_cast<std::size_t>(m)];
}

std::vector<std::int32_t> FiniteField::coeffs(Felem a) const { return poly_of(a); }

Felem FiniteField::from_coeffs(const std::vector<std::int32_t>& c) const {
    Poly cc(c.begin(), c.end());
    for (auto& v : cc) v = static_cast<std::int32_t>(((v % p_) + p_) % p_);
    return elem_of(std::move(cc));
}

Felem FiniteField::scalar_mul(const Int& n, Felem a) const {
    return scalar_mul(int_mod(n, Int(p_)).get_si(), a);
}

Felem FiniteField::scalar_mul(std::int64_t n, Felem a) const {
    n %= p_;
    if (n < 0) n += p_;
    std::int64_t r = 0, mult = 1, x = a;
    for (int i = 0; i < e_; ++i) {
        r += (x % p_) * n % p_ * mult;
        x /= p_;
        mult *= p_;
    }
    return static_cast<Felem>(r);
}

std::string FiniteField::to_string(Felem a) const {
    auto c = coeffs(a);
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < e_; ++i) {
        if (c[static_cast<std::size_t>(i)] == 0) continue;
        if (!first) os << "+";
        if (i == 0 || c[static_cast<std::size_t>(i)] != 1)
            os << c[static_cast<std::size_t>(i)];
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

FiniteField make_field(std::int64_t p, int e, std::int64_t size_cap) {
    return FiniteField(p, e, size_cap);
}

FrobeniusMap frobenius(const FiniteField& K, int power) { return {&K, power}; }

std::pair<Felem, Felem> trace_pair_witness(const FiniteField& K2, std::int64_t q) {
    if (q < 2 || q * q != K2.q())
        throw std::invalid_argument(
            "trace_pair_witness: field order is not q^2 for the given q");
    for (Felem beta = 0; beta < K2.q(); ++beta) {
        Felem beta_q = K2.pow(beta, Int(q));
        if (beta_q == beta) continue;  // beta in the q-element subfield
        Felem alpha = K2.add(beta, beta_q);
        if (alpha == 0) continue;
        if (K2.pow(alpha, Int(q)) != alpha)
            throw std::logic_error("trace_pair_witness: trace left the subfield");
        return {alpha, beta};
    }
    throw std::logic_error("trace_pair_witness: no witness found");
}

namespace {

bool axioms_impl(const FiniteField& K, std::string* what, bool parallel) {
    const std::int64_t q = K.q();
    std::int64_t w = -1;
    auto fail = [&](const std::string& msg) {
        if (what) *what = msg;
        return false;
    };

    // pairwise: commutativity of + and *, neutral elements, inverses
    auto pair_ok = [&](std::int64_t idx) {
        Felem a = static_cast<Felem>(idx / q), b = static_cast<Felem>(idx % q);
        if (K.add(a, b) != K.add(b, a)) return false;
        if (K.mul(a, b) != K.mul(b, a)) return false;
        return true;
    };
    if (!kernels::all_of(q * q, pair_ok, &w, parallel))
        return fail("commutativity fails at pair index " + std::to_string(w));

    for (Felem a = 0; a < q; ++a) {
        if (K.add(a, K.zero()) != a) return fail("0 is not additive neutral");
        if (K.mul(a, K.one()) != a) return fail("1 is not multiplicative neutral");
        if (K.add(a, K.neg(a)) != K.zero()) return fail("additive inverse fails");
        if (a != 0 && K.mul(a, K.inv(a)) != K.one())
            return fail("multiplicative inverse fails");
    }

    // triples: associativity of + and *, distributivity
    auto triple_ok = [&](std::int64_t idx) {
        Felem a = static_cast<Felem>(idx / (q * q));
        Felem b = static_cast<Felem>(idx / q % q);
        Felem c = static_cast<Felem>(idx % q);
        if (K.add(K.add(a, b), c) != K.add(a, K.add(b, c))) return false;
        if (K.mul(K.mul(a, b), c) != K.mul(a, K.mul(b, c))) return false;
        if (K.mul(a, K.add(b, c)) != K.add(K.mul(a, b), K.mul(a, c))) return false;
        return true;
    };
    if (!kernels::all_of(q * q * q, triple_ok, &w, parallel))
        return fail("associativity/distributivity fails at triple index " +
                    std::to_string(w));
    return true;
}

}  // namespace

bool validate_field_axioms(const FiniteField& K, std::string* what, bool parallel) {
    return axioms_impl(K, what, parallel);
}

bool validate_field_axioms_serial(const FiniteField& K, std::string* what) {
    return axioms_impl(K, what, false);
}

}  // namespace fitbound
