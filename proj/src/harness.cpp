#include "fitbound/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "fitbound/constructions.hpp"
#include "fitbound/io.hpp"
#include "fitbound/kernels.hpp"
#include "fitbound/numbers.hpp"
#include "fitbound/structure.hpp"

namespace fitbound {

namespace {

using json = nlohmann::ordered_json;

Automorphism aut_power_of(const Automorphism& a, int k) {
    const Group& G = a.group();
    std::vector<std::int32_t> map(static_cast<std::size_t>(G.order()));
    for (std::int32_t g = 0; g < G.order(); ++g) map[static_cast<std::size_t>(g)] = g;
    for (int i = 0; i < k; ++i)
        for (std::int32_t g = 0; g < G.order(); ++g)
            map[static_cast<std::size_t>(g)] = a.apply(map[static_cast<std::size_t>(g)]);
    return Automorphism::trusted(G, std::move(map));
}

}  // namespace

ResolvedEntry resolve_entry(const CatalogEntry& entry) {
    ResolvedEntry out;

    const Automorphism* attached = nullptr;
    std::shared_ptr<Psl2Group> psl2_holder;
    std::shared_ptr<DDomainGroup> ddomain_holder;

    if (entry.group_kind == "stock") {
        auto holder = std::make_shared<Group>(stock(entry.group_name));
        out.group = holder.get();
        out.holders.push_back(std::move(holder));
    } else if (entry.group_kind == "file") {
        auto holder = std::make_shared<Group>(load_group_file(entry.group_name));
        out.group = holder.get();
        out.holders.push_back(std::move(holder));
    } else if (entry.group_kind == "ddomain") {
        ddomain_holder = std::make_shared<DDomainGroup>(
            build_ddomain(entry.p, entry.e, entry.N));
        out.group = ddomain_holder->group.get();
        attached = &ddomain_holder->frobenius;
        out.holders.push_back(ddomain_holder);
    } else if (entry.group_kind == "psl2") {
        psl2_holder = std::make_shared<Psl2Group>(build_psl2(entry.q));
        out.group = psl2_holder->group.get();
        out.holders.push_back(psl2_holder);
    } else if (entry.group_kind == "shift") {
        Group base = stock(entry.group_name);
        auto holder = std::make_shared<ShiftPowerResult>(shift_power(base, entry.copies));
        out.group = holder->group.get();
        attached = &holder->shift;
        out.holders.push_back(holder);
    } else if (entry.group_kind == "companion") {
        auto holder = std::make_shared<CompanionActionResult>(
            companion_action(entry.p, IntPolynomial(entry.construction_poly)));
        out.group = holder->group.get();
        attached = &holder->aut;
        out.holders.push_back(holder);
    } else {
        throw std::invalid_argument("catalog: unknown group kind '" + entry.group_kind +
                                    "'");
    }

    const Group& G = *out.group;
    if (entry.aut_kind == "identity") {
        out.phi = Automorphism::identity(G);
    } else if (entry.aut_kind == "power") {
        out.phi = Automorphism::power_map(G, entry.aut_power);
    } else if (entry.aut_kind == "inner") {
        Permutation p = parse_permutation(entry.aut_element, G.degree());
        auto idx = G.index_of(p);
        if (!idx)
            throw std::invalid_argument("catalog: inner element '" + entry.aut_element +
                                        "' is not in the group");
        out.phi = Automorphism::inner(G, *idx);
    } else if (entry.aut_kind == "frobenius" || entry.aut_kind == "attached") {
        int k = entry.aut_kind == "attached" ? 1 : entry.frobenius_k;
        if (psl2_holder) {
            out.phi = psl2_holder->frobenius_action(k);
        } else if (attached) {
            out.phi = aut_power_of(*attached, k);
        } else {
            throw std::invalid_argument(
                "catalog: 'frobenius' needs a ddomain/psl2/shift/companion group");
        }
    } else if (entry.aut_kind == "file") {
        out.phi = load_automorphism_file(entry.aut_file, G);
    } else {
        throw std::invalid_argument("catalog: unknown automorphism kind '" +
                                    entry.aut_kind + "'");
    }

    out.ordered = entry.ordered;
    if (entry.ordered) {
        out.f = IntPolynomial(entry.poly);
    } else {
        out.u.terms = entry.terms;
    }
    return out;
}

namespace {

std::string bound_text(const BigBound& b) { return b.to_string(); }

struct EntryComputation {
    VerificationRecord rec;

    void check(const std::string& name, bool applicable, bool pass,
               const std::string& detail) {
        rec.checks.push_back({name, applicable, pass, detail});
    }
    void skipped(const std::string& name, const std::string& why) {
        check(name, false, true, why);
    }
};

}  // namespace

VerificationRecord verify_entry(const CatalogEntry& entry) {
    auto t0 = std::chrono::steady_clock::now();
    EntryComputation ec;
    VerificationRecord& rec = ec.rec;
    rec.label = entry.label;

    ResolvedEntry re;
    try {
        re = resolve_entry(entry);
    } catch (const std::exception& ex) {
        rec.status = "error";
        rec.resolve_error = ex.what();
        rec.as_expected = false;
        return rec;
    }
    rec.resolved = true;

    const Group& G = *re.group;
    const Automorphism& phi = re.phi;

    try {
        // hypotheses
        IntPolynomial underlying =
            re.ordered ? re.f : re.u.underlying_polynomial();
        rec.primitive = underlying.is_primitive();
        rec.d = re.ordered ? Int(re.f.is_zero() ? 0 : re.f.degree())
                           : re.u.max_exponent();
        rec.aut_order = phi.order();
        rec.coprime = phi.is_coprime();
        IdentityCheck sat = re.ordered ? satisfies_ordered(phi, re.f)
                                       : satisfies_unordered(phi, re.u);
        rec.satisfied = sat.holds;
        rec.identity_witness = sat.witness;

        rec.group_order = G.order();
        Subgroup C = phi.fixed_points();
        rec.m = C.order();

        if (!rec.hypotheses_pass()) {
            rec.status = "hypothesis-failure";
            rec.as_expected = !entry.expect_hypotheses_pass;
            auto t1 = std::chrono::steady_clock::now();
            rec.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            return rec;
        }

        const unsigned long dl = rec.d.get_ui();
        Subgroup R = soluble_radical(G);
        rec.radical_order = R.order();
        rec.quotient_index = Int(G.order() / R.order());
        rec.h_radical = fitting_height(R);

        rec.centralizer_soluble = is_soluble_subgroup(C);
        if (rec.centralizer_soluble) rec.h_centralizer = fitting_height(C);

        // h(R) <= B1(d, h(C_G(phi))) <= B1(d, m), |G/R| <= B2(d, m)
        Int b1m = b1(rec.d, rec.m);
        rec.b1_d_m = {true, to_decimal(b1m)};
        ec.check("h(R) <= B1(d, m)", true, Int(rec.h_radical) <= b1m,
                 std::to_string(rec.h_radical) + " <= " + to_decimal(b1m));

        if (rec.centralizer_soluble) {
            Int b1hc = b1(rec.d, Int(rec.h_centralizer));
            rec.b1_d_hc = {true, to_decimal(b1hc)};
            ec.check("h(R) <= B1(d, h(C))", true, Int(rec.h_radical) <= b1hc,
                     std::to_string(rec.h_radical) + " <= " + to_decimal(b1hc));
            ec.check("h(C) <= m", true, Int(rec.h_centralizer) <= rec.m,
                     std::to_string(rec.h_centralizer) + " <= " + to_decimal(rec.m));
        } else {
            ec.skipped("h(R) <= B1(d, h(C))",
                       "centralizer is not soluble, its Fitting height is undefined");
        }

        BigBound b2m = b2(dl, rec.m);
        rec.b2_d_m = {b2m.is_exact(), bound_text(b2m),
                      b2m.is_exact() ? "" : to_decimal(b2m.exact_part()),
                      b2m.factors()};
        ec.check("|G/R| <= B2(d, m)", true, b2m.at_least(rec.quotient_index),
                 to_decimal(rec.quotient_index) + " <= " + bound_text(b2m));

        // fixed-point-free coprime case forces solubility
        if (rec.m == 1)
            ec.check("m = 1 forces G soluble", true, is_soluble(G), "");
        else
            ec.skipped("m = 1 forces G soluble", "m > 1");

        // restriction to the radical: phi|_R satisfies the same identity,
        // |C_R(phi|_R)| <= |C_G(phi)|, and C_R(phi|_R) = C_G(phi) meet R
        {
            RestrictionResult rr = restrict_to(phi, R);
            bool restricted_sat =
                re.ordered ? satisfies_ordered(rr.aut, re.f).holds
                           : satisfies_unordered(rr.aut, re.u).holds;
            std::int64_t m_r = rr.aut.fixed_point_count();
            std::int64_t m_cap = 0;
            for (std::int32_t g : C.members)
                if (R.contains(g)) ++m_cap;
            ec.check("restriction coherence", true,
                     restricted_sat && m_r <= C.order() && m_r == m_cap,
                     "phi|_R satisfies f: " + std::string(restricted_sat ? "yes" : "no") +
                         ", |C_R(phi|R)| = " + std::to_string(m_r) +
                         ", |C_G(phi) meet R| = " + std::to_string(m_cap) +
                         ", m = " + to_decimal(rec.m));
        }

        bool soluble_g = rec.radical_order == rec.group_order;

        // Turull: h(G) <= 2 k(<phi>) + h(C_G(phi)) for soluble G
        if (soluble_g) {
            int hg = fitting_height(G);
            int bound = 2 * composition_length(rec.aut_order) +
                        (rec.centralizer_soluble ? rec.h_centralizer : 0);
            ec.check("turull: h(G) <= 2k(phi) + h(C)", true, hg <= bound,
                     std::to_string(hg) + " <= " + std::to_string(bound));
        } else {
            ec.skipped("turull: h(G) <= 2k(phi) + h(C)", "G is not soluble");
        }

        // corollary: h(G) <= 8 deg(f) + 2|f(1)| + 2 when f(1) != 0
        Int f1 = underlying.evaluate(1);
        if (soluble_g && f1 != 0) {
            Int cb = corollary_bound(underlying);
            rec.corollary = {true, to_decimal(cb)};
            int hg = fitting_height(G);
            ec.check("corollary: h(G) <= 8 deg(f) + 2|f(1)| + 2", true, Int(hg) <= cb,
                     std::to_string(hg) + " <= " + to_decimal(cb));
        } else {
            ec.skipped("corollary: h(G) <= 8 deg(f) + 2|f(1)| + 2",
                       soluble_g ? "f(1) = 0" : "G is not soluble");
        }

        // induced section bounds per prime divisor
        if (soluble_g && rec.group_order > 1) {
            Int order_bound = int_pow(2 * rec.d, Int(2 * rec.d).get_ui());
            Int klen_bound = 4 * rec.d;
            for (const auto& [qprime, mult] : factorize(rec.group_order)) {
                SectionResult sd = section_data(G, phi, qprime);
                bool ok = Int(sd.induced_order) <= order_bound &&
                          Int(sd.klen) <= klen_bound;
                ec.check("section bounds at q=" + std::to_string(qprime), true, ok,
                         "|phi_H| = " + std::to_string(sd.induced_order) +
                             " <= " + to_decimal(order_bound) +
                             ", k = " + std::to_string(sd.klen) +
                             " <= " + to_decimal(klen_bound));
            }
        } else {
            ec.skipped("section bounds", soluble_g ? "trivial group" : "G is not soluble");
        }

        bool all_pass = true;
        for (const auto& c : rec.checks)
            if (c.applicable && !c.pass) all_pass = false;
        rec.status = all_pass ? "pass" : "violation";
        rec.as_expected = entry.expect_hypotheses_pass && all_pass;
    } catch (const std::exception& ex) {
        rec.status = "error";
        rec.resolve_error = ex.what();
        rec.as_expected = false;
    }

    auto t1 = std::chrono::steady_clock::now();
    rec.timing_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rec;
}

CatalogReport run_catalog(const std::vector<CatalogEntry>& entries) {
    auto t0 = std::chrono::steady_clock::now();
    CatalogReport report;
    report.all_as_expected = true;
    for (const CatalogEntry& entry : entries) {
        report.records.push_back(verify_entry(entry));
        const VerificationRecord& rec = report.records.back();
        if (!rec.as_expected) report.all_as_expected = false;
        if (!rec.resolved) report.any_resolve_error = true;
    }
    auto t1 = std::chrono::steady_clock::now();
    report.total_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return report;
}

int report_exit_code(const CatalogReport& report) {
    if (report.any_resolve_error) return 2;
    return report.all_as_expected ? 0 : 1;
}

std::vector<CatalogEntry> builtin_catalog() {
    std::vector<CatalogEntry> cat;
    auto add = [&](CatalogEntry e) { cat.push_back(std::move(e)); };

    {
        CatalogEntry e;
        e.label = "trivial-identity";
        e.group_kind = "stock";
        e.group_name = "trivial";
        e.poly = {-1, 1};
        add(e);
    }
    {
        CatalogEntry e;
        e.label = "C7-square";
        e.group_kind = "stock";
        e.group_name = "C7";
        e.aut_kind = "power";
        e.aut_power = 2;
        e.poly = {-2, 1};
        add(e);
    }
    {
        CatalogEntry e;
        e.label = "C5-square";
        e.group_kind = "stock";
        e.group_name = "C5";
        e.aut_kind = "power";
        e.aut_power = 2;
        e.poly = {-2, 1};
        add(e);
    }
    {
        CatalogEntry e;
        e.label = "C7-cube";
        e.group_kind = "stock";
        e.group_name = "C7";
        e.aut_kind = "power";
        e.aut_power = 3;
        e.poly = {-3, 1};
        add(e);
    }
    {
        CatalogEntry e;
        e.label = "companion-F2-1+x+x2";
        e.group_kind = "companion";
        e.p = 2;
        e.construction_poly = {1, 1, 1};
        e.aut_kind = "attached";
        e.poly = {1, 1, 1};
        add(e);
    }
    {
        CatalogEntry e;
        e.label = "companion-F3-1+x+x2";
        e.group_kind = "companion";
        e.p = 3;
        e.construction_poly = {1, 1, 1};
        e.aut_kind = "attached";
        e.poly = {1, 1, 1};
        e.expect_hypotheses_pass = false;  // companion order 3 is not coprime to 9
        add(e);
    }
    {
        CatalogEntry e;
        e.label = "ddomain-q2-N1";
        e.group_kind = "ddomain";
        e.p = 2;
        e.e = 1;
        e.N = 1;
        e.aut_kind = "frobenius";
        e.frobenius_k = 1;
        e.poly = {-1, 0, 1};
        e.expect_hypotheses_pass = false;  // Frobenius order 2 on a 2-group
        add(e);
    }
    {
        CatalogEntry e;
        e.label = "ddomain-q3-N1";
        e.group_kind = "ddomain";
        e.p = 3;
        e.e = 1;
        e.N = 1;
        e.aut_kind = "frobenius";
        e.frobenius_k = 1;
        e.poly = {-1, 0, 1};
        add(e);
    }
    {
        CatalogEntry e;
        e.label = "psl2-q4-frobenius";
        e.group_kind = "psl2";
        e.q = 4;
        e.aut_kind = "frobenius";
        e.frobenius_k = 1;
        e.poly = {-1, 0, 1};
        e.expect_hypotheses_pass = false;  // |PSL(2,4)| = 60 is even, |phi| = 2
        add(e);
    }
    {
        CatalogEntry e;
        e.label = "psl2-q32-frobenius";
        e.group_kind = "psl2";
        e.q = 32;
        e.aut_kind = "frobenius";
        e.frobenius_k = 1;
        e.poly = {-1, 0, 0, 0, 0, 1};
        add(e);
    }
    {
        CatalogEntry e;
        e.label = "A5xA5-shift-constant60";
        e.group_kind = "shift";
        e.group_name = "A5";
        e.copies = 2;
        e.aut_kind = "attached";
        e.poly = {60};
        e.expect_hypotheses_pass = false;  // content 60, not primitive
        add(e);
    }
    {
        CatalogEntry e;
        e.label = "S4-identity";
        e.group_kind = "stock";
        e.group_name = "S4";
        e.poly = {-1, 1};
        add(e);
    }
    {
        CatalogEntry e;
        e.label = "A5-identity";
        e.group_kind = "stock";
        e.group_name = "A5";
        e.poly = {-1, 1};
        add(e);
    }
    {
        CatalogEntry e;
        e.label = "D8-identity";
        e.group_kind = "stock";
        e.group_name = "D8";
        e.poly = {-1, 1};
        add(e);
    }
    return cat;
}

namespace {

Int json_int(const json& v) {
    if (v.is_string()) return Int(v.get<std::string>());
    if (v.is_number_integer()) return Int(std::to_string(v.get<long long>()));
    throw std::invalid_argument("catalog: expected an integer or decimal string");
}

}  // namespace

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open catalog file '" + path + "'");
    json doc = json::parse(in);
    const json& list = doc.is_array() ? doc : doc.at("entries");
    std::vector<CatalogEntry> out;
    for (const json& j : list) {
        CatalogEntry e;
        e.label = j.value("label", "entry-" + std::to_string(out.size()));
        const json& g = j.at("group");
        if (g.contains("stock")) {
            e.group_kind = "stock";
            e.group_name = g.at("stock").get<std::string>();
        } else if (g.contains("file")) {
            e.group_kind = "file";
            e.group_name = g.at("file").get<std::string>();
        } else if (g.contains("ddomain")) {
            e.group_kind = "ddomain";
            e.p = g.at("ddomain").at("p").get<std::int64_t>();
            e.e = g.at("ddomain").value("e", 1);
            if (g.at("ddomain").contains("N")) e.N = json_int(g.at("ddomain").at("N"));
        } else if (g.contains("psl2")) {
            e.group_kind = "psl2";
            e.q = g.at("psl2").at("q").get<std::int64_t>();
        } else if (g.contains("shift")) {
            e.group_kind = "shift";
            e.group_name = g.at("shift").at("base").get<std::string>();
            e.copies = g.at("shift").at("n").get<int>();
        } else if (g.contains("companion")) {
            e.group_kind = "companion";
            e.p = g.at("companion").at("p").get<std::int64_t>();
            for (const json& c : g.at("companion").at("f"))
                e.construction_poly.push_back(json_int(c));
        } else {
            throw std::invalid_argument("catalog: unknown group spec in '" + e.label + "'");
        }
        if (j.contains("aut")) {
            const json& a = j.at("aut");
            if (a.contains("identity")) {
                e.aut_kind = "identity";
            } else if (a.contains("power")) {
                e.aut_kind = "power";
                e.aut_power = json_int(a.at("power"));
            } else if (a.contains("inner")) {
                e.aut_kind = "inner";
                e.aut_element = a.at("inner").get<std::string>();
            } else if (a.contains("frobenius")) {
                e.aut_kind = "frobenius";
                e.frobenius_k = a.at("frobenius").get<int>();
            } else if (a.contains("attached")) {
                e.aut_kind = "attached";
            } else if (a.contains("file")) {
                e.aut_kind = "file";
                e.aut_file = a.at("file").get<std::string>();
            } else {
                throw std::invalid_argument("catalog: unknown automorphism spec in '" +
                                            e.label + "'");
            }
        }
        const json& idn = j.at("identity");
        if (idn.contains("ordered")) {
            e.ordered = true;
            for (const json& c : idn.at("ordered")) e.poly.push_back(json_int(c));
        } else if (idn.contains("unordered")) {
            e.ordered = false;
            for (const json& t : idn.at("unordered"))
                e.terms.emplace_back(json_int(t.at(0)), json_int(t.at(1)));
        } else {
            throw std::invalid_argument("catalog: missing identity spec in '" + e.label +
                                        "'");
        }
        std::string expect = j.value("expect", "pass");
        if (expect == "pass")
            e.expect_hypotheses_pass = true;
        else if (expect == "hypothesis-failure")
            e.expect_hypotheses_pass = false;
        else
            throw std::invalid_argument("catalog: unknown expectation '" + expect + "'");
        out.push_back(std::move(e));
    }
    return out;
}

namespace {

json record_to_json(const VerificationRecord& r) {
    json j;
    j["label"] = r.label;
    j["status"] = r.status;
    j["as_expected"] = r.as_expected;
    j["resolved"] = r.resolved;
    if (!r.resolve_error.empty()) j["error"] = r.resolve_error;
    if (!r.resolved) return j;
    j["hypotheses"] = {{"primitive", r.primitive},
                       {"coprime", r.coprime},
                       {"identity_satisfied", r.satisfied}};
    if (!r.satisfied) j["hypotheses"]["witness"] = std::to_string(r.identity_witness);
    json inv;
    inv["d"] = to_decimal(r.d);
    inv["m"] = to_decimal(r.m);
    inv["group_order"] = std::to_string(r.group_order);
    inv["aut_order"] = std::to_string(r.aut_order);
    if (r.status != "hypothesis-failure" && r.status != "error") {
        inv["radical_order"] = std::to_string(r.radical_order);
        inv["index"] = to_decimal(r.quotient_index);
        inv["h_radical"] = std::to_string(r.h_radical);
        inv["centralizer_soluble"] = r.centralizer_soluble;
        if (r.centralizer_soluble)
            inv["h_centralizer"] = std::to_string(r.h_centralizer);
    }
    j["invariants"] = inv;
    if (r.status != "hypothesis-failure" && r.status != "error") {
        json bounds;
        auto bound_json = [](const BoundValue& b) {
            json v;
            v["exact"] = b.exact;
            v["value"] = b.text;
            if (!b.exact) {
                v["exact_part"] = b.exact_part;
                json factors = json::array();
                for (const auto& f : b.factors)
                    factors.push_back({{"base", to_decimal(f.base)},
                                       {"exp", std::to_string(f.exp)},
                                       {"factorial", f.factorial}});
                v["factors"] = factors;
            }
            return v;
        };
        if (!r.b1_d_hc.text.empty()) bounds["b1_d_hc"] = bound_json(r.b1_d_hc);
        bounds["b1_d_m"] = bound_json(r.b1_d_m);
        bounds["b2_d_m"] = bound_json(r.b2_d_m);
        if (!r.corollary.text.empty()) bounds["corollary"] = bound_json(r.corollary);
        j["bounds"] = bounds;
    }
    json checks = json::array();
    for (const auto& c : r.checks) {
        json cj;
        cj["name"] = c.name;
        cj["applicable"] = c.applicable;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["timing_ms"] = r.timing_ms;
    return j;
}

}  // namespace

std::string report_to_json(const CatalogReport& report) {
    json j;
    j["tool"] = "fitbound";
    j["report"] = "verify";
    json entries = json::array();
    for (const auto& r : report.records) entries.push_back(record_to_json(r));
    j["entries"] = entries;
    j["summary"] = {{"entries", report.records.size()},
                    {"all_as_expected", report.all_as_expected},
                    {"total_ms", report.total_ms}};
    return j.dump(2) + "\n";
}

std::string report_to_csv(const CatalogReport& report) {
    std::ostringstream os;
    os << "label,status,as_expected,primitive,coprime,identity_satisfied,d,m,"
          "group_order,aut_order,radical_order,index,h_radical,centralizer_soluble,"
          "h_centralizer,b1_d_hc,b1_d_m,b2_d_m,corollary,checks_failed,timing_ms\n";
    for (const auto& r : report.records) {
        int failed = 0;
        for (const auto& c : r.checks)
            if (c.applicable && !c.pass) ++failed;
        auto quote = [](std::string s) {
            if (s.find(',') == std::string::npos && s.find('"') == std::string::npos)
                return s;
            std::string out = "\"";
            for (char ch : s) {
                if (ch == '"') out += "\"\"";
                else out.push_back(ch);
            }
            out += "\"";
            return out;
        };
        os << quote(r.label) << "," << r.status << "," << (r.as_expected ? 1 : 0) << ","
           << (r.primitive ? 1 : 0) << "," << (r.coprime ? 1 : 0) << ","
           << (r.satisfied ? 1 : 0) << "," << to_decimal(r.d) << "," << to_decimal(r.m)
           << "," << r.group_order << "," << r.aut_order << "," << r.radical_order << ","
           << to_decimal(r.quotient_index) << "," << r.h_radical << ","
           << (r.centralizer_soluble ? 1 : 0) << "," << r.h_centralizer << ","
           << quote(r.b1_d_hc.text) << "," << quote(r.b1_d_m.text) << ","
           << quote(r.b2_d_m.text) << "," << quote(r.corollary.text) << "," << failed
           << "," << r.timing_ms << "\n";
    }
    return os.str();
}

IdentitySearchResult identity_search(const Automorphism& phi, int max_degree,
                                     const Int& coeff_bound, std::int64_t budget,
                                     bool parallel) {
    if (max_degree < 0 || max_degree > 60)
        throw std::invalid_argument("identity_search: max_degree must be in 0..60");
    const Group& G = phi.group();
    const std::int64_t E = G.exponent();
    Int half = Int(E) / 2;
    Int bound = coeff_bound < half ? coeff_bound : half;
    if (bound < 1) bound = 1;
    const std::int64_t B = bound.get_si();
    const std::int64_t W = 2 * B + 1;

    // phi^i as index maps for i = 0..max_degree
    std::vector<std::vector<std::int32_t>> pm(static_cast<std::size_t>(max_degree) + 1);
    pm[0].resize(static_cast<std::size_t>(G.order()));
    for (std::int32_t g = 0; g < G.order(); ++g) pm[0][static_cast<std::size_t>(g)] = g;
    for (int i = 1; i <= max_degree; ++i) {
        pm[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(G.order()));
        for (std::int32_t g = 0; g < G.order(); ++g)
            pm[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)] =
                phi.apply(pm[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(g)]);
    }

    IdentitySearchResult result;
    std::int64_t used = 0;
    for (int d = 0; d <= max_degree; ++d) {
        std::int64_t space = 1;
        bool overflow = false;
        for (int i = 0; i <= d; ++i) {
            if (space > budget / W + 1) overflow = true;
            space *= W;
        }
        if (overflow || used + space > budget) {
            result.complete = false;
            break;
        }
        used += space;

        // code digits run a_0 (most significant) .. a_d, so ascending codes
        // enumerate coefficient tuples in lexicographic order
        auto decode = [&](std::int64_t code, std::vector<std::int64_t>& a) {
            for (int i = d; i >= 0; --i) {
                a[static_cast<std::size_t>(i)] = code % W - B;
                code /= W;
            }
        };
        auto is_hit = [&](std::int64_t code) {
            std::int64_t a[64], r[64];
            for (int i = d; i >= 0; --i) {
                a[i] = code % W - B;
                code /= W;
            }
            if (a[d] == 0) return false;
            std::int64_t g = 0;
            for (int i = 0; i <= d; ++i) g = gcd64(g, a[i]);
            if (g != 1) return false;
            for (int i = 0; i <= d; ++i) r[i] = ((a[i] % E) + E) % E;
            for (std::int32_t x = 0; x < G.order(); ++x) {
                std::int32_t acc = G.identity();
                for (int i = 0; i <= d; ++i) {
                    if (r[static_cast<std::size_t>(i)] == 0) continue;
                    std::int32_t y =
                        pm[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
                    std::int64_t k = r[static_cast<std::size_t>(i)];
                    std::int32_t pw = G.identity(), base = y;
                    while (k > 0) {
                        if (k & 1) pw = G.mul(pw, base);
                        base = G.mul(base, base);
                        k >>= 1;
                    }
                    acc = G.mul(acc, pw);
                }
                if (acc != G.identity()) return false;
            }
            return true;
        };

        std::vector<std::int64_t> hits = kernels::collect(space, is_hit, parallel);
        for (std::int64_t code : hits) {
            std::vector<std::int64_t> a(static_cast<std::size_t>(d) + 1);
            decode(code, a);
            std::vector<Int> coeffs(a.begin(), a.end());
            result.found.emplace_back(std::move(coeffs));
        }
    }
    return result;
}

}  // namespace fitbound
