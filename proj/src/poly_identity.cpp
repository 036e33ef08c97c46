#include "fitbound/poly_identity.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fitbound {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::from_ints(const std::vector<long>& coeffs) {
    std::vector<Int> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

int IntPolynomial::degree() const {
    if (coeffs_.empty())
        throw std::domain_error("degree of the zero polynomial is undefined");
    return static_cast<int>(coeffs_.size()) - 1;
}

Int IntPolynomial::coeff(int i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= coeffs_.size()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Int content_of(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& c : v) g = int_gcd(g, c);
    return g;
}

Int IntPolynomial::content() const { return content_of(coeffs_); }

bool IntPolynomial::is_primitive() const { return !is_zero() && content() == 1; }

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = int_abs(c);
        if (a != 1 || i == 0) os << to_decimal(a);
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

IntPolynomial partial_sum(const IntPolynomial& f, int n, int j) {
    if (n < 1) throw std::invalid_argument("partial_sum: n must be positive");
    if (j < 0 || j >= n) throw std::invalid_argument("partial_sum: j out of range");
    std::vector<Int> out;
    const auto& c = f.coeffs();
    for (std::size_t i = static_cast<std::size_t>(j); i < c.size();
         i += static_cast<std::size_t>(n))
        out.push_back(c[i]);
    return IntPolynomial(std::move(out));
}

int primitive_partial_exists(const IntPolynomial& f, int n) {
    if (!f.is_primitive())
        throw std::invalid_argument("primitive_partial_exists: f is not primitive");
    if (n < 1) throw std::invalid_argument("primitive_partial_exists: n must be positive");
    for (int j = 0; j < n; ++j)
        if (partial_sum(f, n, j).is_primitive()) return j;
    throw std::logic_error("primitive_partial_exists: no primitive partial sum");
}

IntPolynomial UnorderedIdentity::underlying_polynomial() const {
    std::map<unsigned long, Int> collapsed;
    for (const auto& [m, b] : terms) {
        if (m < 0)
            throw std::invalid_argument("unordered identity: negative exponent");
        collapsed[m.get_ui()] += b;
    }
    std::vector<Int> coeffs;
    for (const auto& [m, b] : collapsed) {
        if (coeffs.size() <= m) coeffs.resize(m + 1, Int(0));
        coeffs[m] = b;
    }
    return IntPolynomial(std::move(coeffs));
}

Int UnorderedIdentity::max_exponent() const {
    Int d = 0;
    for (const auto& [m, b] : terms) d = std::max(d, m);
    return d;
}

BigBound BigBound::exact(Int v) {
    BigBound b;
    b.exact_part_ = std::move(v);
    return b;
}

const Int& BigBound::exact_value() const {
    if (!is_exact())
        throw std::domain_error("BigBound: exact value of a certificate");
    return exact_part_;
}

void BigBound::push_factor(Factor f) { factors_.push_back(std::move(f)); }

namespace {

Int materialize_power(const BigBound::Factor& f) {
    // desk-scale factors stay far below this guard
    if (f.exp > 0 && bit_length(f.base) * f.exp > 8u * 1000u * 1000u)
        throw std::overflow_error("BigBound: factor too large to materialize");
    return int_pow(f.base, f.exp);
}

}  // namespace

bool BigBound::at_least(const Int& x) const {
    Int lb = exact_part_;
    if (lb >= x) return true;
    bool lower_bound_only = false;
    for (const Factor& f : factors_) {
        Int v = materialize_power(f);
        if (f.factorial) {
            // multiply 2*3*...*t into lb, stopping as soon as x is cleared
            Int t = 2;
            while (t <= v) {
                lb *= t;
                if (lb >= x) return true;
                t += 1;
                if (t > 1000000) {  // factorial argument is effectively unbounded
                    lower_bound_only = true;
                    break;
                }
            }
        } else {
            lb *= v;
        }
        if (lb >= x) return true;
    }
    if (lower_bound_only)
        throw std::domain_error("BigBound: comparison undecided by lower bound");
    return lb >= x;
}

bool BigBound::at_least(const BigBound& other) const {
    if (is_exact() && other.is_exact()) return exact_part_ >= other.exact_part_;
    // compare factorial arguments pairwise, largest first; (a)! >= (b)! iff
    // a >= b for a, b >= 1
    auto args = [](const BigBound& b) {
        std::vector<Int> v;
        for (const Factor& f : b.factors_) {
            if (!f.factorial)
                throw std::domain_error("BigBound: unsupported certificate shape");
            v.push_back(materialize_power(f));
        }
        std::sort(v.rbegin(), v.rend());
        return v;
    };
    std::vector<Int> a = args(*this), b = args(other);
    if (exact_part_ < other.exact_part_ || a.size() < b.size())
        throw std::domain_error("BigBound: certificate comparison undecided");
    for (std::size_t i = 0; i < b.size(); ++i)
        if (a[i] < b[i])
            throw std::domain_error("BigBound: certificate comparison undecided");
    return true;
}

std::string BigBound::to_string() const {
    if (is_exact()) return to_decimal(exact_part_);
    std::ostringstream os;
    os << to_decimal(exact_part_);
    for (const Factor& f : factors_) {
        os << " * ";
        if (f.factorial) os << "(";
        os << to_decimal(f.base) << "^" << f.exp;
        if (f.factorial) os << ")!";
    }
    return os.str();
}

Int b1(const Int& d, const Int& m) {
    if (d < 0 || m < 0) throw std::invalid_argument("b1: arguments must be >= 0");
    return 8 * d + m + 2;
}

Int b3(unsigned long d, const Int& m) {
    if (m < 1) throw std::invalid_argument("b3: m must be >= 1");
    return m + int_pow(m, 1000 * d);
}

BigBound b2(unsigned long d, const Int& m) {
    if (m < 1) throw std::invalid_argument("b2: m must be >= 1");
    if (m == 1) return BigBound::exact(1);
    BigBound tail = b2(d, m / 2);
    BigBound::Factor f{b3(d, m), Int(m * d).get_ui(), true};
    Int arg = materialize_power(f);
    if (arg <= 1000) {
        // small enough to fold in exactly
        Int fact;
        mpz_fac_ui(fact.get_mpz_t(), arg.get_ui());
        BigBound out = BigBound::exact(tail.exact_part() * fact);
        for (const auto& g : tail.factors()) out.push_factor(g);
        return out;
    }
    BigBound out = BigBound::exact(tail.exact_part());
    out.push_factor(std::move(f));
    for (const auto& g : tail.factors()) out.push_factor(g);
    return out;
}

Int corollary_bound(const IntPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("corollary_bound: zero polynomial");
    Int f1 = f.evaluate(1);
    if (f1 == 0)
        throw std::invalid_argument("corollary_bound: f(1) = 0, bound inapplicable");
    return 8 * Int(f.degree()) + 2 * int_abs(f1) + 2;
}

}  // namespace fitbound
