#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fitbound/constructions.hpp"
#include "fitbound/frobenius_identity.hpp"
#include "fitbound/harness.hpp"
#include "fitbound/io.hpp"
#include "fitbound/kernels.hpp"
#include "fitbound/structure.hpp"

namespace {

using namespace fitbound;

int cmd_verify(const std::string& catalog_path, bool builtin,
               const std::string& report_path, const std::string& format) {
    std::vector<CatalogEntry> entries;
    if (builtin || catalog_path.empty())
        entries = builtin_catalog();
    else
        entries = load_catalog_file(catalog_path);

    CatalogReport report = run_catalog(entries);
    std::string text = format == "csv" ? report_to_csv(report) : report_to_json(report);
    if (report_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "cannot write report to '" << report_path << "'\n";
            return 2;
        }
        out << text;
    }
    for (const auto& r : report.records)
        std::cerr << (r.as_expected ? "[ok]   " : "[FAIL] ") << r.label << ": "
                  << r.status << "\n";
    return report_exit_code(report);
}

int cmd_group(const std::string& file) {
    Group G = load_group_file(file);
    std::cout << "order: " << G.order() << "\n";
    bool soluble = is_soluble(G);
    std::cout << "soluble: " << (soluble ? "yes" : "no") << "\n";
    if (soluble) std::cout << "fitting_height: " << fitting_height(G) << "\n";
    Subgroup R = soluble_radical(G);
    Subgroup F = fitting_subgroup(G);
    std::cout << "soluble_radical_order: " << R.order() << "\n";
    std::cout << "fitting_subgroup_order: " << F.order() << "\n";
    std::cout << "nilpotent: " << (is_nilpotent(G) ? "yes" : "no") << "\n";
    std::cout << "exponent: " << G.exponent() << "\n";
    return 0;
}

int cmd_ddomain(std::int64_t p, int e, long long N, bool check_axioms) {
    DDomainGroup D = build_ddomain(p, e, Int(std::to_string(N)));
    const Group& G = *D.group;
    std::cout << "q: " << D.q << "\n";
    std::cout << "order: " << G.order() << " (q^3 = " << D.q * D.q * D.q << ")\n";
    std::cout << "exponent: " << G.exponent() << "\n";
    ProjectionCheck pc = projection_surjective(D);
    std::cout << "projection_surjective: " << (pc.surjective ? "yes" : "no") << "\n";
    std::cout << "frobenius_order: " << D.frobenius.order() << "\n";
    std::cout << "frobenius_fixed_points: " << D.frobenius.fixed_point_count() << "\n";
    if (check_axioms) {
        kernels::TripleWitness w;
        bool ok = kernels::associativity_parallel(G.table().data(), G.order(), &w);
        if (!ok) {
            std::cout << "associativity: FAIL at (" << w.a << ", " << w.b << ", "
                      << w.c << ")\n";
            return 1;
        }
        std::cout << "associativity: ok (" << G.order() << "^3 triples)\n";
        for (std::int32_t i = 0; i < G.order(); ++i) {
            auto [s, u] = D.elements[static_cast<std::size_t>(i)];
            Felem is = D.field->neg(s);
            Felem iu = D.field->pow(u, Int(D.q));
            std::int32_t j = -1;
            for (std::int32_t cand = 0; cand < G.order(); ++cand)
                if (D.elements[static_cast<std::size_t>(cand)] ==
                    std::make_pair(is, iu)) {
                    j = cand;
                    break;
                }
            if (j < 0 || G.mul(i, j) != G.identity() || G.mul(j, i) != G.identity()) {
                std::cout << "inversion: FAIL at element " << i << "\n";
                return 1;
            }
        }
        std::cout << "inversion: ok ((s,u) -> (-s, u^q) is a two-sided inverse)\n";
    }
    return 0;
}

int cmd_psl2(std::int64_t q, int frob) {
    Psl2Group P = build_psl2(q);
    const Group& G = *P.group;
    std::cout << "order: " << G.order() << "\n";
    std::cout << "degree: " << G.degree() << " points\n";
    if (frob > 0) {
        Automorphism phi = P.frobenius_action(frob);
        std::cout << "frobenius_order: " << phi.order() << "\n";
        std::cout << "fixed_points: " << phi.fixed_point_count() << "\n";
        std::cout << "coprime: " << (phi.is_coprime() ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_frobid(std::int64_t p, int e, int max_degree) {
    FiniteField K(p, e);
    MinimalIdentity mi = min_primitive_identity_degree(K, p, max_degree);
    if (mi.degenerate)
        std::cout << "note: the Frobenius t -> t^" << p << " is trivial on GF(" << K.q()
                  << "); the minimal identity degenerates to -1 + x\n";
    if (!mi.found) {
        std::cout << "no primitive additive identity of degree <= " << max_degree
                  << "\n";
        return 1;
    }
    std::cout << "min_degree: " << mi.degree << "\n";
    std::cout << "identity: " << IntPolynomial(mi.coeffs).to_string() << "\n";
    AdditiveIdentityProblem prob{&K, p, mi.coeffs};
    std::cout << "verified: "
              << (check_additive_identity(prob).holds ? "yes" : "NO (bug)") << "\n";
    return 0;
}

int cmd_identity_search(const std::string& group_file, const std::string& aut_spec,
                        int max_degree, long long coeff_bound) {
    Group G = load_group_file(group_file);
    Automorphism phi = Automorphism::identity(G);
    if (aut_spec == "identity") {
        // keep the identity map
    } else if (aut_spec.rfind("power ", 0) == 0) {
        phi = Automorphism::power_map(G, Int(aut_spec.substr(6)));
    } else {
        phi = load_automorphism_file(aut_spec, G);
    }
    IdentitySearchResult res = identity_search(phi, max_degree, Int(std::to_string(coeff_bound)));
    for (const auto& f : res.found) {
        std::cout << "[";
        for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
            if (i) std::cout << ", ";
            std::cout << to_decimal(f.coeffs()[i]);
        }
        std::cout << "]  # " << f.to_string() << "\n";
    }
    if (!res.complete) {
        std::cerr << "warning: search budget exhausted, result is partial\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-group workbench: coprime automorphisms with polynomial "
                 "identities, structure bounds, and instance verification"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a catalog of (G, phi, f) instances");
    std::string catalog_path, report_path, format = "json";
    bool builtin = false;
    verify->add_option("--catalog", catalog_path, "catalog JSON file");
    verify->add_flag("--builtin", builtin, "use the built-in catalog");
    verify->add_option("--report", report_path, "write the report here");
    verify->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* group = app.add_subcommand("group", "analyze a group from a file");
    std::string group_file;
    bool analyze = false;
    group->add_option("--file", group_file, "permutation or cayley file")->required();
    group->add_flag("--analyze", analyze, "print structural invariants");

    auto* ddomain = app.add_subcommand("ddomain", "build the D_{N,K} group");
    std::int64_t dp = 2;
    int de = 1;
    long long dN = 1;
    bool check_axioms = false;
    ddomain->add_option("--p", dp, "characteristic")->required();
    ddomain->add_option("--e", de, "exponent, q = p^e");
    ddomain->add_option("--N", dN, "structure constant")->required();
    ddomain->add_flag("--check-axioms", check_axioms, "exhaustive axiom check");

    auto* psl2 = app.add_subcommand("psl2", "build PSL(2,q) on the projective line");
    std::int64_t pq = 5;
    int pfrob = 0;
    psl2->add_option("--q", pq, "prime power")->required();
    psl2->add_option("--frobenius", pfrob, "apply t -> t^(p^k)");

    auto* frobid = app.add_subcommand("frobid",
                                      "minimal additive Frobenius identity degree");
    std::int64_t fp = 2;
    int fe = 2, fmax = 0;
    frobid->add_option("--p", fp, "characteristic")->required();
    frobid->add_option("--e", fe, "extension degree")->required();
    frobid->add_option("--max-degree", fmax, "search limit (default e)");

    auto* isearch = app.add_subcommand("identity-search",
                                       "enumerate primitive ordered identities");
    std::string sg, sa = "identity";
    int smax = 2;
    long long sbound = 3;
    isearch->add_option("--group", sg, "group file")->required();
    isearch->add_option("--aut", sa, "identity | 'power k' | automorphism file");
    isearch->add_option("--max-degree", smax, "maximal degree");
    isearch->add_option("--coeff-bound", sbound, "coefficient window");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed())
            return cmd_verify(catalog_path, builtin, report_path, format);
        if (group->parsed()) return cmd_group(group_file);
        if (ddomain->parsed()) return cmd_ddomain(dp, de, dN, check_axioms);
        if (psl2->parsed()) return cmd_psl2(pq, pfrob);
        if (frobid->parsed()) return cmd_frobid(fp, fe, fmax > 0 ? fmax : fe);
        if (isearch->parsed()) return cmd_identity_search(sg, sa, smax, sbound);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
