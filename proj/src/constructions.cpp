#include "fitbound/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "fitbound/numbers.hpp"

namespace fitbound {

namespace {

Permutation cycle(int degree, const std::vector<int>& pts) {
    Permutation p = Permutation::identity(degree);
    for (std::size_t i = 0; i < pts.size(); ++i)
        p.images[static_cast<std::size_t>(pts[i] - 1)] =
            static_cast<std::uint16_t>(pts[(i + 1) % pts.size()] - 1);
    return p;
}

}  // namespace

Group stock(const std::string& name, std::int64_t element_cap) {
    std::string s;
    for (char c : name)
        if (c != '_') s.push_back(c);
    if (s == "trivial") return from_permutations(1, {}, element_cap);
    if (s == "V4")
        return from_permutations(4,
                                 {compose(cycle(4, {1, 2}), cycle(4, {3, 4})),
                                  compose(cycle(4, {1, 3}), cycle(4, {2, 4}))},
                                 element_cap);
    if (s.size() >= 2 && (s[0] == 'C' || s[0] == 'S' || s[0] == 'A' || s[0] == 'D')) {
        int n = 0;
        try {
            n = std::stoi(s.substr(1));
        } catch (...) {
            throw std::invalid_argument("stock: unknown group name '" + name + "'");
        }
        switch (s[0]) {
            case 'C': {
                if (n < 1) throw std::invalid_argument("stock: bad cyclic order");
                std::vector<int> pts(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = i + 1;
                if (n == 1) return from_permutations(1, {}, element_cap);
                return from_permutations(n, {cycle(n, pts)}, element_cap);
            }
            case 'D': {
                // Dn is the dihedral group of order n
                if (n < 6 || n % 2 != 0)
                    throw std::invalid_argument(
                        "stock: Dn needs even order n >= 6 (use V4 for order 4)");
                int m = n / 2;
                std::vector<int> rot(static_cast<std::size_t>(m));
                for (int i = 0; i < m; ++i) rot[static_cast<std::size_t>(i)] = i + 1;
                Permutation refl = Permutation::identity(m);
                for (int i = 0; i < m; ++i)
                    refl.images[static_cast<std::size_t>(i)] =
                        static_cast<std::uint16_t>((m - i) % m);
                return from_permutations(m, {cycle(m, rot), refl}, element_cap);
            }
            case 'S': {
                if (n < 1 || n > 7)
                    throw std::invalid_argument("stock: Sn supported for 1 <= n <= 7");
                if (n == 1) return from_permutations(1, {}, element_cap);
                std::vector<int> pts(static_cast<std::size_t>(n));
                for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = i + 1;
                return from_permutations(n, {cycle(n, {1, 2}), cycle(n, pts)},
                                         element_cap);
            }
            case 'A': {
                if (n < 3 || n > 7)
                    throw std::invalid_argument("stock: An supported for 3 <= n <= 7");
                if (n == 3) return from_permutations(3, {cycle(3, {1, 2, 3})}, element_cap);
                std::vector<int> pts;
                if (n % 2 == 1)
                    for (int i = 1; i <= n; ++i) pts.push_back(i);
                else
                    for (int i = 2; i <= n; ++i) pts.push_back(i);
                return from_permutations(n, {cycle(n, {1, 2, 3}), cycle(n, pts)},
                                         element_cap);
            }
        }
    }
    throw std::invalid_argument("stock: unknown group name '" + name + "'");
}

DDomainGroup build_ddomain(std::int64_t p, int e, const Int& N, std::int64_t cayley_cap) {
    if (!is_prime(p)) throw std::invalid_argument("build_ddomain: p must be prime");
    if (e < 1) throw std::invalid_argument("build_ddomain: e must be >= 1");
    std::int64_t q = checked_pow(p, e, 1 << 20);
    if (q < 0 || checked_pow(q, 3, cayley_cap) < 0)
        throw std::invalid_argument("build_ddomain: q^3 exceeds the cayley cap");

    DDomainGroup D;
    D.field = std::make_shared<FiniteField>(p, 2 * e);
    D.q = q;
    D.N = int_mod(N, Int(p));
    const FiniteField& K = *D.field;
    const std::int64_t qq = K.q();  // q^2

    // partition K by the value of u + u^q, then walk s in element order
    std::vector<std::vector<Felem>> fiber(static_cast<std::size_t>(qq));
    for (Felem u = 0; u < qq; ++u)
        fiber[static_cast<std::size_t>(K.add(u, K.pow(u, Int(q))))].push_back(u);

    std::unordered_map<std::int64_t, std::int32_t> index;
    for (Felem s = 0; s < qq; ++s) {
        Felem rhs = K.neg(K.scalar_mul(D.N, K.mul(s, K.pow(s, Int(q)))));
        for (Felem u : fiber[static_cast<std::size_t>(rhs)]) {
            index.emplace(static_cast<std::int64_t>(s) * qq + u,
                          static_cast<std::int32_t>(D.elements.size()));
            D.elements.emplace_back(s, u);
        }
    }
    const std::int64_t n = static_cast<std::int64_t>(D.elements.size());
    if (n != q * q * q)
        throw std::logic_error("build_ddomain: element count is not q^3");

    std::vector<std::int32_t> table(static_cast<std::size_t>(n * n));
    bool closed = true;
#pragma omp parallel for schedule(static) reduction(&& : closed)
    for (std::int64_t i = 0; i < n; ++i) {
        auto [s, u] = D.elements[static_cast<std::size_t>(i)];
        Felem sq = K.pow(s, Int(q));
        for (std::int64_t j = 0; j < n; ++j) {
            auto [t, v] = D.elements[static_cast<std::size_t>(j)];
            Felem rs = K.add(s, t);
            Felem ru = K.sub(K.add(u, v), K.scalar_mul(D.N, K.mul(sq, t)));
            auto it = index.find(static_cast<std::int64_t>(rs) * qq + ru);
            if (it == index.end()) {
                closed = false;
                continue;
            }
            table[static_cast<std::size_t>(i * n + j)] = it->second;
        }
    }
    if (!closed) throw std::logic_error("build_ddomain: product left the set");

    std::vector<std::int32_t> gens = small_generating_set_table(table, n, 0);
    D.group = std::make_shared<Group>(
        Group::from_validated_table(std::move(table), n, 0, std::move(gens)));

    // coordinatewise Frobenius t -> t^p
    std::vector<std::int32_t> fmap(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        auto [s, u] = D.elements[static_cast<std::size_t>(i)];
        auto it = index.find(
            static_cast<std::int64_t>(K.frobenius_apply(s, 1)) * qq +
            K.frobenius_apply(u, 1));
        if (it == index.end())
            throw std::logic_error("build_ddomain: Frobenius left the set");
        fmap[static_cast<std::size_t>(i)] = it->second;
    }
    D.frobenius = Automorphism(*D.group, std::move(fmap));
    return D;
}

ProjectionCheck projection_surjective(const DDomainGroup& D) {
    const std::int64_t qq = D.field->q();
    ProjectionCheck pc;
    pc.witness_u.assign(static_cast<std::size_t>(qq), -1);
    pc.fiber_sizes.assign(static_cast<std::size_t>(qq), 0);
    for (const auto& [s, u] : D.elements) {
        if (pc.witness_u[static_cast<std::size_t>(s)] < 0)
            pc.witness_u[static_cast<std::size_t>(s)] = u;
        ++pc.fiber_sizes[static_cast<std::size_t>(s)];
    }
    pc.surjective = std::all_of(pc.witness_u.begin(), pc.witness_u.end(),
                                [](Felem u) { return u >= 0; });
    return pc;
}

Psl2Group build_psl2(std::int64_t q, std::int64_t element_cap, int degree_cap) {
    auto fs = factorize(q);
    if (fs.size() != 1)
        throw std::invalid_argument("build_psl2: q must be a prime power");
    std::int64_t p = fs[0].first;
    int e = fs[0].second;
    if (q + 1 > degree_cap)
        throw std::invalid_argument("build_psl2: q+1 exceeds the degree cap");

    Psl2Group P;
    P.field = std::make_shared<FiniteField>(p, e);
    const FiniteField& K = *P.field;
    const int deg = static_cast<int>(q) + 1;
    const int inf = static_cast<int>(q);

    std::vector<Permutation> gens;
    // unipotent translations t -> t + x^i for a basis of K over GF(p)
    std::int64_t c = 1;
    for (int i = 0; i < e; ++i) {
        Permutation u = Permutation::identity(deg);
        for (Felem t = 0; t < q; ++t)
            u.images[static_cast<std::size_t>(t)] =
                static_cast<std::uint16_t>(K.add(t, static_cast<Felem>(c)));
        gens.push_back(std::move(u));
        c *= p;
    }
    // t -> -1/t
    Permutation s = Permutation::identity(deg);
    s.images[0] = static_cast<std::uint16_t>(inf);
    s.images[static_cast<std::size_t>(inf)] = 0;
    for (Felem t = 1; t < q; ++t)
        s.images[static_cast<std::size_t>(t)] =
            static_cast<std::uint16_t>(K.neg(K.inv(t)));
    gens.push_back(std::move(s));

    P.group = std::make_shared<Group>(from_permutations(deg, gens, element_cap));
    return P;
}

Automorphism Psl2Group::frobenius_action(int k) const {
    const FiniteField& K = *field;
    const Group& G = *group;
    const int deg = G.degree();
    const int inf = deg - 1;

    Permutation sigma = Permutation::identity(deg);
    for (Felem t = 0; t < K.q(); ++t)
        sigma.images[static_cast<std::size_t>(t)] =
            static_cast<std::uint16_t>(K.frobenius_apply(t, k));
    sigma.images[static_cast<std::size_t>(inf)] = static_cast<std::uint16_t>(inf);
    Permutation sigma_inv = sigma.inverse();

    std::vector<std::int32_t> map(static_cast<std::size_t>(G.order()));
    for (std::int32_t i = 0; i < G.order(); ++i) {
        Permutation img = compose(compose(sigma_inv, G.permutation_of(i)), sigma);
        auto idx = G.index_of(img);
        if (!idx)
            throw std::logic_error("psl2 frobenius: conjugate left the group");
        map[static_cast<std::size_t>(i)] = *idx;
    }
    return Automorphism(G, std::move(map));
}

ShiftPowerResult shift_power(const Group& S, int n, std::int64_t element_cap) {
    if (n < 1) throw std::invalid_argument("shift_power: n must be >= 1");
    if (S.backend() != Group::Backend::permutation)
        throw std::invalid_argument("shift_power: factor must use the permutation backend");
    std::vector<const Group*> factors(static_cast<std::size_t>(n), &S);
    ProductResult pr = direct_product(factors, element_cap);

    ShiftPowerResult out;
    out.group = std::make_shared<Group>(std::move(pr.group));
    out.injections = std::move(pr.injections);
    const Group& G = *out.group;

    // conjugation by the block rotation sending block i to block i+1
    const int d = S.degree();
    const int deg = G.degree();
    Permutation tau = Permutation::identity(deg);
    for (int i = 0; i < deg; ++i)
        tau.images[static_cast<std::size_t>(i)] =
            static_cast<std::uint16_t>((i + d) % deg);
    Permutation tau_inv = tau.inverse();

    std::vector<std::int32_t> map(static_cast<std::size_t>(G.order()));
    for (std::int32_t i = 0; i < G.order(); ++i) {
        Permutation img = compose(compose(tau_inv, G.permutation_of(i)), tau);
        auto idx = G.index_of(img);
        if (!idx) throw std::logic_error("shift_power: conjugate left the group");
        map[static_cast<std::size_t>(i)] = *idx;
    }
    out.shift = Automorphism(G, std::move(map));
    return out;
}

CompanionActionResult companion_action(std::int64_t p, const IntPolynomial& f,
                                       std::int64_t cayley_cap) {
    if (!is_prime(p)) throw std::invalid_argument("companion_action: p must be prime");
    if (f.is_zero() || f.degree() < 1)
        throw std::invalid_argument("companion_action: f must have degree >= 1");
    const int d = f.degree();
    if (int_mod(f.coeff(d), Int(p)) != 1)
        throw std::invalid_argument("companion_action: f is not monic mod p");
    if (int_mod(f.coeff(0), Int(p)) == 0)
        throw std::invalid_argument(
            "companion_action: f(0) = 0 mod p, the companion matrix is singular");
    std::int64_t n = checked_pow(p, d, cayley_cap);
    if (n < 0) throw std::invalid_argument("companion_action: p^d exceeds the cap");

    std::vector<std::int64_t> c(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        c[static_cast<std::size_t>(i)] = int_mod(f.coeff(i), Int(p)).get_si();

    auto digits = [&](std::int64_t v) {
        std::vector<std::int64_t> out(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            out[static_cast<std::size_t>(i)] = v % p;
            v /= p;
        }
        return out;
    };
    auto pack = [&](const std::vector<std::int64_t>& v) {
        std::int64_t out = 0;
        for (int i = d - 1; i >= 0; --i) out = out * p + v[static_cast<std::size_t>(i)];
        return out;
    };

    std::vector<std::int32_t> table(static_cast<std::size_t>(n * n));
    for (std::int64_t a = 0; a < n; ++a) {
        auto va = digits(a);
        for (std::int64_t b = 0; b < n; ++b) {
            auto vb = digits(b);
            for (int i = 0; i < d; ++i)
                vb[static_cast<std::size_t>(i)] =
                    (vb[static_cast<std::size_t>(i)] + va[static_cast<std::size_t>(i)]) % p;
            table[static_cast<std::size_t>(a * n + b)] =
                static_cast<std::int32_t>(pack(vb));
        }
    }
    std::vector<std::int32_t> gens;
    std::int64_t unit = 1;
    for (int i = 0; i < d; ++i) {
        gens.push_back(static_cast<std::int32_t>(unit));
        unit *= p;
    }

    CompanionActionResult out;
    out.group = std::make_shared<Group>(
        Group::from_validated_table(std::move(table), n, 0, std::move(gens)));

    // companion matrix: C e_i = e_{i+1} for i < d-1, C e_{d-1} = -(c_0..c_{d-1})
    std::vector<std::int32_t> map(static_cast<std::size_t>(n));
    for (std::int64_t v = 0; v < n; ++v) {
        auto x = digits(v);
        std::vector<std::int64_t> w(static_cast<std::size_t>(d), 0);
        for (int j = 0; j < d; ++j) {
            std::int64_t val = (j > 0 ? x[static_cast<std::size_t>(j - 1)] : 0) -
                               c[static_cast<std::size_t>(j)] *
                                   x[static_cast<std::size_t>(d - 1)] % p;
            w[static_cast<std::size_t>(j)] = ((val % p) + p) % p;
        }
        map[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(pack(w));
    }
    out.aut = Automorphism(*out.group, std::move(map));
    return out;
}

}  // namespace fitbound
