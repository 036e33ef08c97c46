#include "fitbound/structure.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "fitbound/numbers.hpp"

namespace fitbound {

namespace {

// Cached analysis results are stored address-free (member data only); the
// parent pointer is patched in on every return so copies and moves of the
// Group stay safe.
struct AnalysisCache {
    std::mutex mu;
    std::unordered_map<std::int32_t, Subgroup> ncl_by_rep;
    std::map<std::vector<std::int32_t>, bool> soluble_memo;
    std::map<std::vector<std::int32_t>, bool> nilpotent_memo;
    std::unique_ptr<Subgroup> fitting, radical;
    std::map<std::int64_t, Subgroup> oq_prime, oq_prime_q;
};

AnalysisCache& analysis_of(const Group& G) {
    auto& c = G.caches();
    std::lock_guard<std::mutex> lock(c.mu);
    if (!c.analysis) c.analysis = std::make_shared<AnalysisCache>();
    return *static_cast<AnalysisCache*>(c.analysis.get());
}

Subgroup with_parent(Subgroup H, const Group& G) {
    H.parent = &G;
    return H;
}

Subgroup subgroup_from_members(const Group& G, std::vector<std::int32_t> members) {
    Subgroup H;
    H.parent = &G;
    H.gens = small_generating_set(G, members);
    H.members = std::move(members);
    H.mask.assign(static_cast<std::size_t>(G.order()), 0);
    for (std::int32_t m : H.members) H.mask[static_cast<std::size_t>(m)] = 1;
    return H;
}

bool memo_predicate(AnalysisCache& cache, const Subgroup& H, bool nilpotent_kind) {
    auto& memo = nilpotent_kind ? cache.nilpotent_memo : cache.soluble_memo;
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = memo.find(H.members);
        if (it != memo.end()) return it->second;
    }
    bool v = nilpotent_kind ? is_nilpotent_subgroup(H) : is_soluble_subgroup(H);
    std::lock_guard<std::mutex> lock(cache.mu);
    memo.emplace(H.members, v);
    return v;
}

bool is_power_of(std::int64_t n, std::int64_t q) {
    while (n % q == 0) n /= q;
    return n == 1;
}

Subgroup join_of(const Group& G, const std::vector<const Subgroup*>& parts) {
    std::vector<std::int32_t> seeds;
    for (const Subgroup* s : parts)
        seeds.insert(seeds.end(), s->gens.begin(), s->gens.end());
    return subgroup_generated(G, seeds);
}

}  // namespace

Subgroup class_normal_closure(const Group& G, std::int32_t g) {
    AnalysisCache& cache = analysis_of(G);
    std::int32_t rep = G.class_reps()[static_cast<std::size_t>(
        G.class_ids()[static_cast<std::size_t>(g)])];
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.ncl_by_rep.find(rep);
        if (it != cache.ncl_by_rep.end()) return with_parent(it->second, G);
    }
    Subgroup ncl = normal_closure(G, {rep});
    std::lock_guard<std::mutex> lock(cache.mu);
    return with_parent(cache.ncl_by_rep.emplace(rep, std::move(ncl)).first->second, G);
}

namespace {

// product of the class closures accepted by `keep`
Subgroup closure_join(const Group& G,
                      const std::function<bool(const Subgroup&)>& keep) {
    std::vector<Subgroup> kept;
    for (std::int32_t rep : G.class_reps()) {
        Subgroup ncl = class_normal_closure(G, rep);
        if (keep(ncl)) kept.push_back(std::move(ncl));
    }
    std::vector<const Subgroup*> parts;
    parts.reserve(kept.size());
    for (const Subgroup& s : kept) parts.push_back(&s);
    return join_of(G, parts);
}

}  // namespace

Subgroup fitting_subgroup(const Group& G) {
    AnalysisCache& cache = analysis_of(G);
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        if (cache.fitting) return with_parent(*cache.fitting, G);
    }
    Subgroup F = closure_join(G, [&](const Subgroup& ncl) {
        return memo_predicate(cache, ncl, /*nilpotent=*/true);
    });
    std::lock_guard<std::mutex> lock(cache.mu);
    if (!cache.fitting) cache.fitting = std::make_unique<Subgroup>(F);
    return with_parent(*cache.fitting, G);
}

Subgroup soluble_radical(const Group& G) {
    AnalysisCache& cache = analysis_of(G);
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        if (cache.radical) return with_parent(*cache.radical, G);
    }
    Subgroup R = closure_join(G, [&](const Subgroup& ncl) {
        return memo_predicate(cache, ncl, /*nilpotent=*/false);
    });
    std::lock_guard<std::mutex> lock(cache.mu);
    if (!cache.radical) cache.radical = std::make_unique<Subgroup>(R);
    return with_parent(*cache.radical, G);
}

Subgroup o_qprime(const Group& G, std::int64_t q) {
    if (!is_prime(q)) throw std::invalid_argument("o_qprime: q must be prime");
    AnalysisCache& cache = analysis_of(G);
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.oq_prime.find(q);
        if (it != cache.oq_prime.end()) return with_parent(it->second, G);
    }
    Subgroup N = closure_join(G, [&](const Subgroup& ncl) {
        return ncl.order() % q != 0;
    });
    if (N.order() % q == 0)
        throw std::logic_error("o_qprime: result order is divisible by q");
    std::lock_guard<std::mutex> lock(cache.mu);
    return with_parent(cache.oq_prime.emplace(q, std::move(N)).first->second, G);
}

Subgroup o_qprime_q(const Group& G, std::int64_t q) {
    if (!is_prime(q)) throw std::invalid_argument("o_qprime_q: q must be prime");
    AnalysisCache& cache = analysis_of(G);
    {
        std::lock_guard<std::mutex> lock(cache.mu);
        auto it = cache.oq_prime_q.find(q);
        if (it != cache.oq_prime_q.end()) return with_parent(it->second, G);
    }
    Subgroup N = o_qprime(G, q);
    // g qualifies iff the image of <g>^G in G/N is a q-group
    std::vector<std::int32_t> seeds = N.gens;
    for (std::int32_t rep : G.class_reps()) {
        Subgroup ncl = class_normal_closure(G, rep);
        Subgroup J = join_of(G, {&ncl, &N});
        if (is_power_of(J.order() / N.order(), q))
            seeds.insert(seeds.end(), ncl.gens.begin(), ncl.gens.end());
    }
    Subgroup O = subgroup_generated(G, seeds);
    std::lock_guard<std::mutex> lock(cache.mu);
    return with_parent(cache.oq_prime_q.emplace(q, std::move(O)).first->second, G);
}

FittingSeries fitting_series(const Group& G) {
    if (!is_soluble(G))
        throw std::invalid_argument("fitting_series: group is not soluble");
    FittingSeries fs;
    fs.terms.push_back(trivial_subgroup(G));

    // projection of G onto the current iterated quotient
    std::vector<std::int32_t> proj(static_cast<std::size_t>(G.order()));
    for (std::int32_t g = 0; g < G.order(); ++g) proj[static_cast<std::size_t>(g)] = g;
    Group cur = G;

    while (cur.order() > 1) {
        Subgroup F = fitting_subgroup(cur);
        if (F.order() <= 1)
            throw std::logic_error("fitting_series: trivial Fitting subgroup of a "
                                   "nontrivial soluble group");
        std::vector<std::int32_t> members;
        for (std::int32_t g = 0; g < G.order(); ++g)
            if (F.contains(proj[static_cast<std::size_t>(g)])) members.push_back(g);
        fs.terms.push_back(subgroup_from_members(G, std::move(members)));
        ++fs.height;
        if (fs.terms.back().order() == G.order()) break;

        QuotientResult qr = quotient(cur, F);
        for (std::int32_t g = 0; g < G.order(); ++g)
            proj[static_cast<std::size_t>(g)] =
                qr.projection[static_cast<std::size_t>(proj[static_cast<std::size_t>(g)])];
        cur = std::move(qr.group);
    }
    return fs;
}

int fitting_height(const Group& G) { return fitting_series(G).height; }

int fitting_height(const Subgroup& H) {
    if (H.order() == H.parent->order()) return fitting_height(*H.parent);
    SubgroupGroup sg = subgroup_as_group(H);
    return fitting_height(sg.group);
}

}  // namespace fitbound
