#include "fitbound/automorphism.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "fitbound/kernels.hpp"
#include "fitbound/numbers.hpp"
#include "fitbound/structure.hpp"

namespace fitbound {

namespace {

// power without touching the element-order cache, safe inside parallel loops
std::int32_t pow_nolock(const Group& G, std::int32_t a, std::int64_t k) {
    std::int32_t r = G.identity(), base = a;
    while (k > 0) {
        if (k & 1) r = G.mul(r, base);
        base = G.mul(base, base);
        k >>= 1;
    }
    return r;
}

void validate_automorphism(const Group& G, const std::vector<std::int32_t>& map) {
    const std::int64_t n = G.order();
    if (static_cast<std::int64_t>(map.size()) != n)
        throw std::invalid_argument("automorphism: image map has wrong size");
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
    for (std::int32_t v : map) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("automorphism: image map is not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    if (map[static_cast<std::size_t>(G.identity())] != G.identity())
        throw std::invalid_argument("automorphism: identity is not fixed");

    std::int64_t witness = -1;
    if (n <= 5000) {
        auto ok = [&](std::int64_t idx) {
            std::int32_t a = static_cast<std::int32_t>(idx / n);
            std::int32_t b = static_cast<std::int32_t>(idx % n);
            return map[static_cast<std::size_t>(G.mul(a, b))] ==
                   G.mul(map[static_cast<std::size_t>(a)],
                         map[static_cast<std::size_t>(b)]);
        };
        if (!kernels::all_of(n * n, ok, &witness))
            throw std::invalid_argument(
                "automorphism: product not preserved at pair (" +
                G.element_name(static_cast<std::int32_t>(witness / n)) + ", " +
                G.element_name(static_cast<std::int32_t>(witness % n)) + ")");
    } else {
        // generator pairs; by induction on word length this already proves
        // the homomorphism property on every pair
        const auto& gens = G.generator_indices();
        const std::int64_t m = static_cast<std::int64_t>(gens.size());
        auto ok = [&](std::int64_t idx) {
            std::int32_t a = static_cast<std::int32_t>(idx / m);
            std::int32_t s = gens[static_cast<std::size_t>(idx % m)];
            return map[static_cast<std::size_t>(G.mul(a, s))] ==
                   G.mul(map[static_cast<std::size_t>(a)],
                         map[static_cast<std::size_t>(s)]);
        };
        if (!kernels::all_of(n * m, ok, &witness))
            throw std::invalid_argument(
                "automorphism: product not preserved at pair (" +
                G.element_name(static_cast<std::int32_t>(witness / m)) + ", " +
                G.element_name(gens[static_cast<std::size_t>(witness % m)]) + ")");
    }
}

}  // namespace

Automorphism::Automorphism(const Group& G, std::vector<std::int32_t> image_map)
    : group_(&G), map_(std::move(image_map)) {
    validate_automorphism(G, map_);
}

Automorphism Automorphism::trusted(const Group& G, std::vector<std::int32_t> image_map) {
    Automorphism a;
    a.group_ = &G;
    a.map_ = std::move(image_map);
    return a;
}

Automorphism Automorphism::identity(const Group& G) {
    std::vector<std::int32_t> m(static_cast<std::size_t>(G.order()));
    for (std::int32_t i = 0; i < G.order(); ++i) m[static_cast<std::size_t>(i)] = i;
    return trusted(G, std::move(m));
}

Automorphism Automorphism::inner(const Group& G, std::int32_t h) {
    std::vector<std::int32_t> m(static_cast<std::size_t>(G.order()));
    std::int32_t hi = G.inv(h);
    for (std::int32_t g = 0; g < G.order(); ++g)
        m[static_cast<std::size_t>(g)] = G.mul(G.mul(h, g), hi);
    return trusted(G, std::move(m));
}

Automorphism Automorphism::power_map(const Group& G, const Int& k) {
    std::int64_t e = G.exponent();
    std::int64_t kk = int_mod(k, Int(e)).get_si();
    std::vector<std::int32_t> m(static_cast<std::size_t>(G.order()));
    for (std::int32_t g = 0; g < G.order(); ++g)
        m[static_cast<std::size_t>(g)] = pow_nolock(G, g, kk);
    return Automorphism(G, std::move(m));
}

Automorphism Automorphism::from_generator_images(
    const Group& G, const std::vector<std::pair<std::int32_t, std::int32_t>>& images) {
    const std::int64_t n = G.order();
    std::vector<std::int32_t> map(static_cast<std::size_t>(n), -1);
    map[static_cast<std::size_t>(G.identity())] = G.identity();

    // breadth-first closure over the provided generators, defining images as
    // we go; a partial map that fails to extend is rejected with a witness
    std::deque<std::int32_t> work{G.identity()};
    std::vector<std::uint8_t> visited(static_cast<std::size_t>(n), 0);
    visited[static_cast<std::size_t>(G.identity())] = 1;
    while (!work.empty()) {
        std::int32_t x = work.front();
        work.pop_front();
        for (const auto& [g, img] : images) {
            std::int32_t y = G.mul(x, g);
            std::int32_t yimg = G.mul(map[static_cast<std::size_t>(x)], img);
            if (map[static_cast<std::size_t>(y)] >= 0 &&
                map[static_cast<std::size_t>(y)] != yimg)
                throw std::invalid_argument(
                    "automorphism: generator images are inconsistent at " +
                    G.element_name(y));
            map[static_cast<std::size_t>(y)] = yimg;
            if (!visited[static_cast<std::size_t>(y)]) {
                visited[static_cast<std::size_t>(y)] = 1;
                work.push_back(y);
            }
        }
    }
    for (std::int32_t g = 0; g < n; ++g)
        if (map[static_cast<std::size_t>(g)] < 0)
            throw std::invalid_argument(
                "automorphism: given elements do not generate the group (no image for " +
                G.element_name(g) + ")");
    return Automorphism(G, std::move(map));
}

std::vector<std::int32_t> Automorphism::inverse_map() const {
    std::vector<std::int32_t> inv(map_.size());
    for (std::size_t i = 0; i < map_.size(); ++i)
        inv[static_cast<std::size_t>(map_[i])] = static_cast<std::int32_t>(i);
    return inv;
}

std::int64_t Automorphism::order() const {
    std::vector<std::uint8_t> seen(map_.size(), 0);
    std::int64_t ord = 1;
    for (std::size_t i = 0; i < map_.size(); ++i) {
        if (seen[i]) continue;
        std::int64_t len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = 1;
            ++len;
            j = static_cast<std::size_t>(map_[j]);
        }
        ord = lcm64(ord, len);
    }
    return ord;
}

Subgroup Automorphism::fixed_points() const {
    std::vector<std::int32_t> members;
    for (std::int32_t g = 0; g < group_->order(); ++g)
        if (apply(g) == g) members.push_back(g);
    Subgroup H;
    H.parent = group_;
    H.gens = small_generating_set(*group_, members);
    H.members = std::move(members);
    H.mask.assign(static_cast<std::size_t>(group_->order()), 0);
    for (std::int32_t m : H.members) H.mask[static_cast<std::size_t>(m)] = 1;
    return H;
}

std::int64_t Automorphism::fixed_point_count() const {
    std::int64_t m = 0;
    for (std::int32_t g = 0; g < group_->order(); ++g)
        if (apply(g) == g) ++m;
    return m;
}

bool Automorphism::is_coprime() const {
    return gcd64(group_->order(), order()) == 1;
}

namespace {

// multiply pm(g)^e into the per-element accumulator
void fold_term(const Group& G, std::vector<std::int32_t>& acc,
               const std::vector<std::int32_t>& pm, std::int64_t e, bool parallel) {
    const std::int64_t n = G.order();
    if (e == 0) return;
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t g = 0; g < n; ++g)
        acc[static_cast<std::size_t>(g)] =
            G.mul(acc[static_cast<std::size_t>(g)],
                  pow_nolock(G, pm[static_cast<std::size_t>(g)], e));
}

IdentityCheck acc_verdict(const Group& G, const std::vector<std::int32_t>& acc) {
    for (std::int64_t g = 0; g < G.order(); ++g)
        if (acc[static_cast<std::size_t>(g)] != G.identity())
            return {false, static_cast<std::int32_t>(g)};
    return {true, -1};
}

IdentityCheck ordered_impl(const Automorphism& phi, const IntPolynomial& f,
                           bool parallel) {
    const Group& G = phi.group();
    if (f.is_zero()) return {true, -1};
    const std::int64_t E = G.exponent();
    const int d = f.degree();
    const std::int64_t n = G.order();

    std::vector<std::int32_t> acc(static_cast<std::size_t>(n), G.identity());
    std::vector<std::int32_t> cur(static_cast<std::size_t>(n));
    for (std::int32_t g = 0; g < n; ++g) cur[static_cast<std::size_t>(g)] = g;
    for (int i = 0; i <= d; ++i) {
        fold_term(G, acc, cur, int_mod(f.coeff(i), Int(E)).get_si(), parallel);
        if (i < d)
            for (std::int32_t g = 0; g < n; ++g)
                cur[static_cast<std::size_t>(g)] =
                    phi.apply(cur[static_cast<std::size_t>(g)]);
    }
    return acc_verdict(G, acc);
}

IdentityCheck unordered_impl(const Automorphism& phi, const UnorderedIdentity& u,
                             bool parallel) {
    const Group& G = phi.group();
    const std::int64_t E = G.exponent();
    const std::int64_t aut_order = phi.order();
    const std::int64_t n = G.order();

    // phi^m depends only on m mod |phi|; build just the maps the terms need
    std::vector<std::int64_t> residues;
    for (const auto& [m, b] : u.terms) {
        if (m < 0) throw std::invalid_argument("unordered identity: negative exponent");
        residues.push_back(int_mod(m, Int(aut_order)).get_si());
    }
    std::vector<std::int64_t> wanted = residues;
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

    std::unordered_map<std::int64_t, std::vector<std::int32_t>> maps;
    std::vector<std::int32_t> cur(static_cast<std::size_t>(n));
    for (std::int32_t g = 0; g < n; ++g) cur[static_cast<std::size_t>(g)] = g;
    std::int64_t at = 0;
    for (std::int64_t r : wanted) {
        while (at < r) {
            for (std::int32_t g = 0; g < n; ++g)
                cur[static_cast<std::size_t>(g)] =
                    phi.apply(cur[static_cast<std::size_t>(g)]);
            ++at;
        }
        maps.emplace(r, cur);
    }

    std::vector<std::int32_t> acc(static_cast<std::size_t>(n), G.identity());
    for (std::size_t t = 0; t < u.terms.size(); ++t)
        fold_term(G, acc, maps.at(residues[t]),
                  int_mod(u.terms[t].second, Int(E)).get_si(), parallel);
    return acc_verdict(G, acc);
}

}  // namespace

IdentityCheck satisfies_ordered(const Automorphism& phi, const IntPolynomial& f,
                                bool parallel) {
    return ordered_impl(phi, f, parallel);
}

IdentityCheck satisfies_ordered_serial(const Automorphism& phi, const IntPolynomial& f) {
    return ordered_impl(phi, f, false);
}

IdentityCheck satisfies_unordered(const Automorphism& phi, const UnorderedIdentity& u,
                                  bool parallel) {
    return unordered_impl(phi, u, parallel);
}

IdentityCheck satisfies_unordered_serial(const Automorphism& phi,
                                         const UnorderedIdentity& u) {
    return unordered_impl(phi, u, false);
}

Automorphism conjugate(const Automorphism& phi, const Automorphism& gamma) {
    if (&phi.group() != &gamma.group())
        throw std::invalid_argument("conjugate: automorphisms of different groups");
    const Group& G = phi.group();
    std::vector<std::int32_t> ginv = gamma.inverse_map();
    std::vector<std::int32_t> m(static_cast<std::size_t>(G.order()));
    for (std::int32_t g = 0; g < G.order(); ++g)
        m[static_cast<std::size_t>(g)] =
            gamma.apply(phi.apply(ginv[static_cast<std::size_t>(g)]));
    return Automorphism::trusted(G, std::move(m));
}

RestrictionResult restrict_to(const Automorphism& phi, const Subgroup& H) {
    const Group& G = phi.group();
    for (std::int32_t m : H.members)
        if (!H.contains(phi.apply(m)))
            throw std::invalid_argument("restrict: subgroup is not invariant, image of " +
                                        G.element_name(m) + " leaves it");
    SubgroupGroup sg = subgroup_as_group(H);
    RestrictionResult out;
    out.sub = std::make_shared<Group>(std::move(sg.group));
    out.to_parent = std::move(sg.to_parent);
    std::vector<std::int32_t> map(static_cast<std::size_t>(out.sub->order()));
    for (std::int32_t i = 0; i < out.sub->order(); ++i)
        map[static_cast<std::size_t>(i)] =
            sg.to_sub.at(phi.apply(out.to_parent[static_cast<std::size_t>(i)]));
    out.aut = Automorphism::trusted(*out.sub, std::move(map));
    return out;
}

InducedQuotientResult induce_on_quotient(const Automorphism& phi, const Subgroup& N) {
    const Group& G = phi.group();
    for (std::int32_t m : N.members)
        if (!N.contains(phi.apply(m)))
            throw std::invalid_argument(
                "induce_on_quotient: subgroup is not invariant, image of " +
                G.element_name(m) + " leaves it");
    QuotientResult qr = quotient(G, N);
    InducedQuotientResult out;
    out.quot = std::make_shared<Group>(std::move(qr.group));
    out.projection = std::move(qr.projection);
    std::vector<std::int32_t> map(static_cast<std::size_t>(out.quot->order()));
    for (std::int32_t c = 0; c < out.quot->order(); ++c)
        map[static_cast<std::size_t>(c)] = out.projection[static_cast<std::size_t>(
            phi.apply(qr.section[static_cast<std::size_t>(c)]))];
    out.aut = Automorphism(*out.quot, std::move(map));
    return out;
}

SectionResult section_data(const Group& G, const Automorphism& phi, std::int64_t q) {
    if (G.order() % q != 0)
        throw std::invalid_argument("section_data: q does not divide the group order");
    Subgroup oqq = o_qprime_q(G, q);
    InducedQuotientResult bar = induce_on_quotient(phi, oqq);
    Subgroup fbar = fitting_subgroup(*bar.quot);
    InducedQuotientResult sect = induce_on_quotient(bar.aut, fbar);

    SectionResult out;
    out.gbar = bar.quot;
    out.section = sect.quot;
    out.aut = sect.aut;
    out.induced_order = out.aut.order();
    out.klen = composition_length(out.induced_order);
    return out;
}

}  // namespace fitbound
