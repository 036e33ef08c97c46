#include "fitbound/group.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "fitbound/kernels.hpp"
#include "fitbound/numbers.hpp"

namespace fitbound {

Permutation Permutation::identity(int degree) {
    Permutation p;
    p.images.resize(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) p.images[static_cast<std::size_t>(i)] =
        static_cast<std::uint16_t>(i);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images.size(); ++i)
        if (images[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images.resize(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        r.images[images[i]] = static_cast<std::uint16_t>(i);
    return r;
}

std::string Permutation::to_cycles() const {
    std::vector<bool> seen(images.size(), false);
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (seen[i] || images[i] == i) continue;
        os << "(";
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) os << " ";
            os << (j + 1);
            first = false;
            j = images[j];
        }
        os << ")";
        any = true;
    }
    if (!any) return "()";
    return os.str();
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation r;
    r.images.resize(a.images.size());
    for (std::size_t i = 0; i < a.images.size(); ++i)
        r.images[i] = b.images[a.images[i]];
    return r;
}

std::string Group::key_of(const Permutation& p) const {
    return std::string(reinterpret_cast<const char*>(p.images.data()),
                       p.images.size() * sizeof(std::uint16_t));
}

void Group::finish_common() {
    caches_ = std::make_shared<detail::GroupCaches>();
    inv_.assign(static_cast<std::size_t>(n_), -1);
    if (backend_ == Backend::permutation) {
        for (std::int32_t a = 0; a < n_; ++a) {
            auto it = index_.find(key_of(permutation_of(a).inverse()));
            if (it == index_.end())
                throw std::logic_error("group: inverse permutation missing");
            inv_[static_cast<std::size_t>(a)] = it->second;
        }
        return;
    }
    for (std::int32_t a = 0; a < n_; ++a) {
        for (std::int32_t b = 0; b < n_; ++b) {
            if (table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                       static_cast<std::size_t>(b)] == id_) {
                inv_[static_cast<std::size_t>(a)] = b;
                break;
            }
        }
        if (inv_[static_cast<std::size_t>(a)] < 0)
            throw std::logic_error("group: element without inverse");
    }
}

std::int32_t Group::mul(std::int32_t a, std::int32_t b) const {
    if (backend_ == Backend::cayley)
        return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
                      static_cast<std::size_t>(b)];
    const std::uint16_t* pa = elems_.data() + static_cast<std::size_t>(a) * degree_;
    const std::uint16_t* pb = elems_.data() + static_cast<std::size_t>(b) * degree_;
    std::uint16_t buf[2048];
    for (int i = 0; i < degree_; ++i) buf[i] = pb[pa[i]];
    std::string_view key(reinterpret_cast<const char*>(buf),
                         static_cast<std::size_t>(degree_) * sizeof(std::uint16_t));
    auto it = index_.find(key);
    if (it == index_.end()) throw std::logic_error("group: product escaped the element set");
    return it->second;
}

std::int32_t Group::power(std::int32_t a, std::int64_t k) const {
    std::int64_t ord = element_order(a);
    k %= ord;
    if (k < 0) k += ord;
    std::int32_t r = id_, base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

std::int32_t Group::conj(std::int32_t g, std::int32_t by) const {
    return mul(mul(inv(by), g), by);
}

Permutation Group::permutation_of(std::int32_t i) const {
    if (backend_ != Backend::permutation)
        throw std::logic_error("permutation_of: cayley backend");
    Permutation p;
    p.images.assign(elems_.begin() + static_cast<std::ptrdiff_t>(i) * degree_,
                    elems_.begin() + static_cast<std::ptrdiff_t>(i + 1) * degree_);
    return p;
}

std::optional<std::int32_t> Group::index_of(const Permutation& p) const {
    if (backend_ != Backend::permutation)
        throw std::logic_error("index_of: cayley backend");
    if (p.degree() != degree_) return std::nullopt;
    auto it = index_.find(key_of(p));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::int64_t Group::element_order(std::int32_t g) const {
    auto& c = *caches_;
    {
        std::lock_guard<std::mutex> lock(c.mu);
        if (c.element_orders.empty())
            c.element_orders.assign(static_cast<std::size_t>(n_), 0);
        if (c.element_orders[static_cast<std::size_t>(g)] > 0)
            return c.element_orders[static_cast<std::size_t>(g)];
    }
    std::int64_t ord = 1;
    std::int32_t x = g;
    while (x != id_) {
        x = mul(x, g);
        ++ord;
    }
    std::lock_guard<std::mutex> lock(c.mu);
    c.element_orders[static_cast<std::size_t>(g)] = ord;
    return ord;
}

std::int64_t Group::exponent() const {
    auto& c = *caches_;
    {
        std::lock_guard<std::mutex> lock(c.mu);
        if (c.exponent > 0) return c.exponent;
    }
    std::int64_t e = 1;
    for (std::int32_t g = 0; g < n_; ++g) e = lcm64(e, element_order(g));
    std::lock_guard<std::mutex> lock(c.mu);
    c.exponent = e;
    return e;
}

const std::vector<std::int32_t>& Group::class_ids() const {
    auto& c = *caches_;
    std::lock_guard<std::mutex> lock(c.mu);
    if (!c.class_ids.empty()) return c.class_ids;
    c.class_ids.assign(static_cast<std::size_t>(n_), -1);
    for (std::int32_t g = 0; g < n_; ++g) {
        if (c.class_ids[static_cast<std::size_t>(g)] >= 0) continue;
        std::int32_t cid = static_cast<std::int32_t>(c.class_reps.size());
        c.class_reps.push_back(g);
        std::deque<std::int32_t> work{g};
        c.class_ids[static_cast<std::size_t>(g)] = cid;
        while (!work.empty()) {
            std::int32_t x = work.front();
            work.pop_front();
            for (std::int32_t s : gens_) {
                std::int32_t y = conj(x, s);
                if (c.class_ids[static_cast<std::size_t>(y)] < 0) {
                    c.class_ids[static_cast<std::size_t>(y)] = cid;
                    work.push_back(y);
                }
            }
        }
    }
    return c.class_ids;
}

const std::vector<std::int32_t>& Group::class_reps() const {
    class_ids();
    return caches_->class_reps;
}

std::string Group::element_name(std::int32_t i) const {
    if (backend_ == Backend::permutation) return permutation_of(i).to_cycles();
    return "#" + std::to_string(i);
}

Group Group::from_permutation_elements(int degree, std::vector<Permutation> gens,
                                       std::int64_t element_cap) {
    if (degree < 1 || degree > 2048)
        throw std::invalid_argument("from_permutations: degree must be in 1..2048");
    for (const auto& g : gens) {
        if (g.degree() != degree)
            throw std::invalid_argument("from_permutations: generator degree mismatch");
        std::vector<bool> seen(static_cast<std::size_t>(degree), false);
        for (auto v : g.images) {
            if (v >= degree || seen[v])
                throw std::invalid_argument(
                    "from_permutations: generator is not a bijection");
            seen[v] = true;
        }
    }

    Group G;
    G.backend_ = Backend::permutation;
    G.degree_ = degree;

    // breadth-first closure from the identity fixes the canonical order
    auto push_elem = [&](const Permutation& p) {
        G.elems_.insert(G.elems_.end(), p.images.begin(), p.images.end());
        std::int32_t idx = static_cast<std::int32_t>(G.n_);
        G.index_.emplace(G.key_of(p), idx);
        ++G.n_;
        return idx;
    };
    push_elem(Permutation::identity(degree));
    G.id_ = 0;

    std::vector<std::int32_t> gen_idx;
    std::deque<std::int32_t> work{0};
    auto elem_at = [&](std::int32_t i) {
        Permutation p;
        p.images.assign(G.elems_.begin() + static_cast<std::ptrdiff_t>(i) * degree,
                        G.elems_.begin() + static_cast<std::ptrdiff_t>(i + 1) * degree);
        return p;
    };
    while (!work.empty()) {
        std::int32_t cur = work.front();
        work.pop_front();
        Permutation pc = elem_at(cur);
        for (const auto& g : gens) {
            Permutation np = compose(pc, g);
            auto it = G.index_.find(G.key_of(np));
            if (it == G.index_.end()) {
                if (G.n_ >= element_cap)
                    throw std::invalid_argument(
                        "from_permutations: element cap exceeded");
                work.push_back(push_elem(np));
            }
        }
    }
    for (const auto& g : gens) {
        auto it = G.index_.find(G.key_of(g));
        gen_idx.push_back(it->second);
    }
    G.gens_ = std::move(gen_idx);
    if (G.gens_.empty()) G.gens_.push_back(G.id_);
    G.finish_common();
    return G;
}

Group Group::from_validated_table(std::vector<std::int32_t> table, std::int64_t n,
                                  std::int32_t identity, std::vector<std::int32_t> gens) {
    Group G;
    G.backend_ = Backend::cayley;
    G.n_ = n;
    G.id_ = identity;
    G.table_ = std::move(table);
    G.gens_ = std::move(gens);
    if (G.gens_.empty()) {
        for (std::int32_t i = 0; i < n; ++i)
            if (i != identity) G.gens_.push_back(i);
        if (G.gens_.empty()) G.gens_.push_back(identity);
    }
    G.finish_common();
    return G;
}

Group from_permutations(int degree, const std::vector<Permutation>& generators,
                        std::int64_t element_cap) {
    return Group::from_permutation_elements(degree, generators, element_cap);
}

Group from_cayley_table(const std::vector<std::vector<std::int32_t>>& table,
                        std::int64_t cayley_cap) {
    std::int64_t n = static_cast<std::int64_t>(table.size());
    if (n < 1) throw std::invalid_argument("from_cayley_table: empty table");
    if (n > cayley_cap)
        throw std::invalid_argument("from_cayley_table: table exceeds the cayley cap");
    std::vector<std::int32_t> flat;
    flat.reserve(static_cast<std::size_t>(n * n));
    for (const auto& row : table) {
        if (static_cast<std::int64_t>(row.size()) != n)
            throw std::invalid_argument("from_cayley_table: ragged table");
        for (auto v : row) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("from_cayley_table: entry out of range");
            flat.push_back(v);
        }
    }
    // Latin square
    for (std::int64_t a = 0; a < n; ++a) {
        std::vector<bool> row_seen(static_cast<std::size_t>(n), false);
        std::vector<bool> col_seen(static_cast<std::size_t>(n), false);
        for (std::int64_t b = 0; b < n; ++b) {
            std::int32_t r = flat[static_cast<std::size_t>(a * n + b)];
            std::int32_t c = flat[static_cast<std::size_t>(b * n + a)];
            if (row_seen[static_cast<std::size_t>(r)])
                throw std::invalid_argument(
                    "from_cayley_table: row " + std::to_string(a) +
                    " repeats entry " + std::to_string(r));
            if (col_seen[static_cast<std::size_t>(c)])
                throw std::invalid_argument(
                    "from_cayley_table: column " + std::to_string(a) +
                    " repeats entry " + std::to_string(c));
            row_seen[static_cast<std::size_t>(r)] = true;
            col_seen[static_cast<std::size_t>(c)] = true;
        }
    }
    // two-sided identity
    std::int32_t id = -1;
    for (std::int64_t e = 0; e < n && id < 0; ++e) {
        bool ok = true;
        for (std::int64_t x = 0; x < n && ok; ++x)
            ok = flat[static_cast<std::size_t>(e * n + x)] == x &&
                 flat[static_cast<std::size_t>(x * n + e)] == x;
        if (ok) id = static_cast<std::int32_t>(e);
    }
    if (id < 0) throw std::invalid_argument("from_cayley_table: no two-sided identity");
    // inverses
    for (std::int64_t a = 0; a < n; ++a) {
        bool ok = false;
        for (std::int64_t b = 0; b < n && !ok; ++b)
            ok = flat[static_cast<std::size_t>(a * n + b)] == id &&
                 flat[static_cast<std::size_t>(b * n + a)] == id;
        if (!ok)
            throw std::invalid_argument("from_cayley_table: element " +
                                        std::to_string(a) + " has no inverse");
    }
    kernels::TripleWitness w;
    if (!kernels::associativity_parallel(flat.data(), n, &w))
        throw std::invalid_argument(
            "from_cayley_table: associativity fails at (" + std::to_string(w.a) +
            ", " + std::to_string(w.b) + ", " + std::to_string(w.c) + ")");
    std::vector<std::int32_t> gens = small_generating_set_table(flat, n, id);
    return Group::from_validated_table(std::move(flat), n, id, std::move(gens));
}

namespace {

// closure of {id} under right multiplication by the seeds; ascending BFS
void close_members(const Group& G, const std::vector<std::int32_t>& seeds,
                   std::vector<std::uint8_t>& mask, std::vector<std::int32_t>& members) {
    mask.assign(static_cast<std::size_t>(G.order()), 0);
    members.clear();
    std::deque<std::int32_t> work;
    mask[static_cast<std::size_t>(G.identity())] = 1;
    work.push_back(G.identity());
    while (!work.empty()) {
        std::int32_t x = work.front();
        work.pop_front();
        for (std::int32_t s : seeds) {
            std::int32_t y = G.mul(x, s);
            if (!mask[static_cast<std::size_t>(y)]) {
                mask[static_cast<std::size_t>(y)] = 1;
                work.push_back(y);
            }
        }
    }
    for (std::int32_t i = 0; i < G.order(); ++i)
        if (mask[static_cast<std::size_t>(i)]) members.push_back(i);
}

Subgroup make_subgroup(const Group& G, std::vector<std::int32_t> seed_gens) {
    Subgroup H;
    H.parent = &G;
    std::sort(seed_gens.begin(), seed_gens.end());
    seed_gens.erase(std::unique(seed_gens.begin(), seed_gens.end()), seed_gens.end());
    seed_gens.erase(std::remove(seed_gens.begin(), seed_gens.end(), G.identity()),
                    seed_gens.end());
    H.gens = seed_gens;
    close_members(G, H.gens, H.mask, H.members);
    return H;
}

}  // namespace

Subgroup trivial_subgroup(const Group& G) { return make_subgroup(G, {}); }

Subgroup full_subgroup(const Group& G) {
    Subgroup H = make_subgroup(G, G.generator_indices());
    if (H.order() != G.order()) throw std::logic_error("full_subgroup: generators do not generate");
    return H;
}

Subgroup subgroup_generated(const Group& G, const std::vector<std::int32_t>& seeds) {
    return make_subgroup(G, seeds);
}

Subgroup normal_closure(const Group& G, const std::vector<std::int32_t>& seeds) {
    Subgroup H = make_subgroup(G, seeds);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::int32_t> added;
        for (std::int32_t h : H.gens)
            for (std::int32_t s : G.generator_indices()) {
                std::int32_t c = G.conj(h, s);
                if (!H.contains(c)) added.push_back(c);
            }
        if (!added.empty()) {
            grew = true;
            std::sort(added.begin(), added.end());
            added.erase(std::unique(added.begin(), added.end()), added.end());
            H.gens.insert(H.gens.end(), added.begin(), added.end());
            close_members(*H.parent, H.gens, H.mask, H.members);
        }
    }
    return H;
}

std::vector<std::int32_t> small_generating_set(const Group& G,
                                               const std::vector<std::int32_t>& members) {
    std::vector<std::int32_t> gens;
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(G.order()), 0);
    std::vector<std::int32_t> closed;
    mask[static_cast<std::size_t>(G.identity())] = 1;
    for (std::int32_t m : members) {
        if (mask[static_cast<std::size_t>(m)]) continue;
        gens.push_back(m);
        close_members(G, gens, mask, closed);
    }
    return gens;
}

Subgroup commutator_subgroup(const Group& G, const Subgroup& A, const Subgroup& B) {
    std::vector<std::int32_t> cgens;
    for (std::int32_t a : A.gens)
        for (std::int32_t b : B.gens) {
            std::int32_t c = G.mul(G.mul(G.inv(a), G.inv(b)), G.mul(a, b));
            if (c != G.identity()) cgens.push_back(c);
        }
    std::vector<std::int32_t> conjugators = A.gens;
    conjugators.insert(conjugators.end(), B.gens.begin(), B.gens.end());

    Subgroup H = make_subgroup(G, cgens);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::int32_t> added;
        for (std::int32_t h : H.gens)
            for (std::int32_t s : conjugators) {
                std::int32_t c = G.conj(h, s);
                if (!H.contains(c)) added.push_back(c);
            }
        if (!added.empty()) {
            grew = true;
            std::sort(added.begin(), added.end());
            added.erase(std::unique(added.begin(), added.end()), added.end());
            H.gens.insert(H.gens.end(), added.begin(), added.end());
            close_members(G, H.gens, H.mask, H.members);
        }
    }
    return H;
}

std::vector<std::int32_t> small_generating_set_table(const std::vector<std::int32_t>& flat,
                                                     std::int64_t n, std::int32_t id) {
    std::vector<std::int32_t> gens;
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(n), 0);
    mask[static_cast<std::size_t>(id)] = 1;
    auto close = [&] {
        std::deque<std::int32_t> work;
        for (std::int32_t i = 0; i < n; ++i)
            if (mask[static_cast<std::size_t>(i)]) work.push_back(i);
        while (!work.empty()) {
            std::int32_t x = work.front();
            work.pop_front();
            for (std::int32_t s : gens) {
                std::int32_t y = flat[static_cast<std::size_t>(x) *
                                          static_cast<std::size_t>(n) +
                                      static_cast<std::size_t>(s)];
                if (!mask[static_cast<std::size_t>(y)]) {
                    mask[static_cast<std::size_t>(y)] = 1;
                    work.push_back(y);
                }
            }
        }
    };
    for (std::int32_t g = 0; g < n; ++g) {
        if (mask[static_cast<std::size_t>(g)]) continue;
        gens.push_back(g);
        close();
    }
    return gens;
}

namespace {

std::vector<Subgroup> derived_chain(const Group& G, Subgroup start) {
    std::vector<Subgroup> series{std::move(start)};
    while (true) {
        const Subgroup& cur = series.back();
        Subgroup next = commutator_subgroup(G, cur, cur);
        if (next.order() == cur.order()) break;
        series.push_back(std::move(next));
        if (series.back().order() == 1) break;
    }
    return series;
}

std::vector<Subgroup> lcs_chain(const Group& G, Subgroup start) {
    std::vector<Subgroup> series{start};
    while (true) {
        const Subgroup& cur = series.back();
        Subgroup next = commutator_subgroup(G, cur, series.front());
        if (next.order() == cur.order()) break;
        series.push_back(std::move(next));
        if (series.back().order() == 1) break;
    }
    return series;
}

}  // namespace

std::vector<Subgroup> derived_series(const Group& G) {
    Subgroup full;
    full.parent = &G;
    full.gens = G.generator_indices();
    close_members(G, full.gens, full.mask, full.members);
    return derived_chain(G, std::move(full));
}

bool is_soluble(const Group& G) { return derived_series(G).back().order() == 1; }

std::vector<Subgroup> lower_central_series(const Group& G) {
    Subgroup full;
    full.parent = &G;
    full.gens = G.generator_indices();
    close_members(G, full.gens, full.mask, full.members);
    return lcs_chain(G, std::move(full));
}

bool is_nilpotent(const Group& G) { return lower_central_series(G).back().order() == 1; }

bool is_soluble_subgroup(const Subgroup& H) {
    return derived_chain(*H.parent, H).back().order() == 1;
}

bool is_nilpotent_subgroup(const Subgroup& H) {
    return lcs_chain(*H.parent, H).back().order() == 1;
}

bool is_normal(const Group& G, const Subgroup& N, std::string* witness) {
    for (std::int32_t h : N.gens)
        for (std::int32_t s : G.generator_indices()) {
            std::int32_t c = G.conj(h, s);
            if (!N.contains(c)) {
                if (witness)
                    *witness = "conjugate of " + G.element_name(h) + " by " +
                               G.element_name(s) + " leaves the subgroup";
                return false;
            }
        }
    return true;
}

QuotientResult quotient(const Group& G, const Subgroup& N, std::int64_t cayley_cap) {
    std::string w;
    if (!is_normal(G, N, &w))
        throw std::invalid_argument("quotient: subgroup is not normal: " + w);

    const std::int64_t n = G.order();
    if (N.order() == n) {
        // G/G: one coset
        QuotientResult qr;
        qr.group = Group::from_validated_table({0}, 1, 0, {0});
        qr.projection.assign(static_cast<std::size_t>(n), 0);
        qr.section = {G.identity()};
        return qr;
    }

    std::vector<std::int32_t> rep(static_cast<std::size_t>(n), -1);
    std::vector<std::int32_t> reps;
    for (std::int32_t g = 0; g < n; ++g) {
        if (rep[static_cast<std::size_t>(g)] >= 0) continue;
        reps.push_back(g);
        for (std::int32_t m : N.members) rep[static_cast<std::size_t>(G.mul(g, m))] = g;
    }
    std::int64_t q = static_cast<std::int64_t>(reps.size());
    if (q > cayley_cap)
        throw std::invalid_argument("quotient: coset count exceeds the cayley cap");

    std::vector<std::int32_t> coset_index(static_cast<std::size_t>(n), -1);
    for (std::int64_t c = 0; c < q; ++c)
        coset_index[static_cast<std::size_t>(reps[static_cast<std::size_t>(c)])] =
            static_cast<std::int32_t>(c);

    std::vector<std::int32_t> table(static_cast<std::size_t>(q * q));
    for (std::int64_t i = 0; i < q; ++i)
        for (std::int64_t j = 0; j < q; ++j) {
            std::int32_t prod = G.mul(reps[static_cast<std::size_t>(i)],
                                      reps[static_cast<std::size_t>(j)]);
            table[static_cast<std::size_t>(i * q + j)] =
                coset_index[static_cast<std::size_t>(rep[static_cast<std::size_t>(prod)])];
        }

    QuotientResult qr;
    std::vector<std::int32_t> qgens;
    for (std::int32_t s : G.generator_indices())
        qgens.push_back(coset_index[static_cast<std::size_t>(rep[static_cast<std::size_t>(s)])]);
    std::sort(qgens.begin(), qgens.end());
    qgens.erase(std::unique(qgens.begin(), qgens.end()), qgens.end());
    std::int32_t qid =
        coset_index[static_cast<std::size_t>(rep[static_cast<std::size_t>(G.identity())])];
    qr.group = Group::from_validated_table(std::move(table), q, qid, std::move(qgens));
    qr.projection.resize(static_cast<std::size_t>(n));
    for (std::int32_t g = 0; g < n; ++g)
        qr.projection[static_cast<std::size_t>(g)] =
            coset_index[static_cast<std::size_t>(rep[static_cast<std::size_t>(g)])];
    qr.section.assign(reps.begin(), reps.end());
    return qr;
}

ProductResult direct_product(const std::vector<const Group*>& factors,
                             std::int64_t element_cap) {
    if (factors.empty()) throw std::invalid_argument("direct_product: no factors");
    std::int64_t expected = 1;
    int degree = 0;
    for (const Group* f : factors) {
        if (f->backend() != Group::Backend::permutation)
            throw std::invalid_argument(
                "direct_product: factors must use the permutation backend");
        if (expected > element_cap / f->order())
            throw std::invalid_argument("direct_product: element cap exceeded");
        expected *= f->order();
        degree += f->degree();
    }

    std::vector<Permutation> gens;
    int offset = 0;
    for (const Group* f : factors) {
        for (std::int32_t gi : f->generator_indices()) {
            Permutation g = f->permutation_of(gi);
            Permutation embedded = Permutation::identity(degree);
            for (int i = 0; i < f->degree(); ++i)
                embedded.images[static_cast<std::size_t>(offset + i)] =
                    static_cast<std::uint16_t>(offset + g.apply(i));
            gens.push_back(std::move(embedded));
        }
        offset += f->degree();
    }

    ProductResult pr;
    pr.group = from_permutations(degree, gens, element_cap);
    if (pr.group.order() != expected)
        throw std::logic_error("direct_product: enumeration does not match the product order");

    offset = 0;
    for (const Group* f : factors) {
        std::vector<std::int32_t> inj(static_cast<std::size_t>(f->order()));
        for (std::int32_t i = 0; i < f->order(); ++i) {
            Permutation g = f->permutation_of(i);
            Permutation embedded = Permutation::identity(degree);
            for (int k = 0; k < f->degree(); ++k)
                embedded.images[static_cast<std::size_t>(offset + k)] =
                    static_cast<std::uint16_t>(offset + g.apply(k));
            auto idx = pr.group.index_of(embedded);
            if (!idx) throw std::logic_error("direct_product: embedded element missing");
            inj[static_cast<std::size_t>(i)] = *idx;
        }
        pr.injections.push_back(std::move(inj));
        offset += f->degree();
    }
    return pr;
}

std::int64_t exponent(const Group& G) { return G.exponent(); }

SubgroupGroup subgroup_as_group(const Subgroup& H) {
    const Group& G = *H.parent;
    SubgroupGroup out;
    if (G.backend() == Group::Backend::permutation) {
        std::vector<std::int32_t> gens =
            H.gens.empty() ? small_generating_set(G, H.members) : H.gens;
        std::vector<Permutation> gperms;
        for (std::int32_t g : gens) gperms.push_back(G.permutation_of(g));
        out.group = from_permutations(G.degree(), gperms,
                                      std::max<std::int64_t>(H.order(), 1) + 1);
        if (out.group.order() != H.order())
            throw std::logic_error("subgroup_as_group: closure mismatch");
        out.to_parent.resize(static_cast<std::size_t>(H.order()));
        for (std::int32_t i = 0; i < out.group.order(); ++i) {
            auto idx = G.index_of(out.group.permutation_of(i));
            if (!idx) throw std::logic_error("subgroup_as_group: element missing in parent");
            out.to_parent[static_cast<std::size_t>(i)] = *idx;
            out.to_sub[*idx] = i;
        }
        return out;
    }
    // cayley backend: reindex the rows/columns of the member set
    std::int64_t m = H.order();
    std::unordered_map<std::int32_t, std::int32_t> pos;
    for (std::int64_t i = 0; i < m; ++i)
        pos[H.members[static_cast<std::size_t>(i)]] = static_cast<std::int32_t>(i);
    std::vector<std::int32_t> table(static_cast<std::size_t>(m * m));
    for (std::int64_t i = 0; i < m; ++i)
        for (std::int64_t j = 0; j < m; ++j) {
            std::int32_t prod = G.mul(H.members[static_cast<std::size_t>(i)],
                                      H.members[static_cast<std::size_t>(j)]);
            auto it = pos.find(prod);
            if (it == pos.end())
                throw std::logic_error("subgroup_as_group: member set not closed");
            table[static_cast<std::size_t>(i * m + j)] = it->second;
        }
    std::vector<std::int32_t> gens;
    for (std::int32_t g : H.gens) gens.push_back(pos.at(g));
    out.group = Group::from_validated_table(std::move(table), m,
                                            pos.at(G.identity()), std::move(gens));
    out.to_parent = H.members;
    for (std::int64_t i = 0; i < m; ++i)
        out.to_sub[H.members[static_cast<std::size_t>(i)]] = static_cast<std::int32_t>(i);
    return out;
}

}  // namespace fitbound
