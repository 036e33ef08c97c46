#ifndef FITBOUND_HARNESS_HPP
#define FITBOUND_HARNESS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fitbound/automorphism.hpp"
#include "fitbound/bigint.hpp"
#include "fitbound/group.hpp"
#include "fitbound/poly_identity.hpp"

namespace fitbound {

// One catalog instance: how to build the group, the automorphism, which
// identity to test, and whether the hypotheses are expected to hold.
struct CatalogEntry {
    std::string label;

    // group: "stock" (name), "file" (path), "ddomain" (p, e, N),
    // "psl2" (q), "shift" (base stock name, n), "companion" (p, poly)
    std::string group_kind;
    std::string group_name;
    std::int64_t p = 0;
    int e = 1;
    Int N = 0;
    std::int64_t q = 0;
    int copies = 1;
    std::vector<Int> construction_poly;

    // automorphism: "identity", "power" (k), "inner" (element text),
    // "frobenius" (k; ddomain/psl2 groups), "file" (path)
    std::string aut_kind = "identity";
    Int aut_power = 1;
    std::string aut_element;
    int frobenius_k = 1;
    std::string aut_file;

    // identity: ordered coefficient vector or unordered (exponent, coeff) terms
    bool ordered = true;
    std::vector<Int> poly;
    std::vector<std::pair<Int, Int>> terms;

    bool expect_hypotheses_pass = true;
};

struct ResolvedEntry {
    std::vector<std::shared_ptr<void>> holders;  // keep construction results alive
    const Group* group = nullptr;
    Automorphism phi;
    bool ordered = true;
    IntPolynomial f;
    UnorderedIdentity u;
};

ResolvedEntry resolve_entry(const CatalogEntry& entry);

struct CheckLine {
    std::string name;
    bool applicable = false;
    bool pass = true;
    std::string detail;
};

struct BoundValue {
    bool exact = true;
    std::string text;  // decimal digits, or the certificate rendering
    // certificate structure, present when inexact
    std::string exact_part;
    std::vector<BigBound::Factor> factors;
};

struct VerificationRecord {
    std::string label;
    bool resolved = false;
    std::string resolve_error;

    // hypotheses
    bool primitive = false;
    bool coprime = false;
    bool satisfied = false;
    std::int32_t identity_witness = -1;
    bool hypotheses_pass() const { return primitive && coprime && satisfied; }

    // computed invariants
    Int d = 0;   // degree (ordered) or max exponent (unordered)
    Int m = 0;   // |C_G(phi)|
    std::int64_t group_order = 0;
    std::int64_t radical_order = 0;
    Int quotient_index = 0;  // |G / R(G)|
    std::int64_t aut_order = 0;
    int h_radical = -1;
    bool centralizer_soluble = false;
    int h_centralizer = -1;  // -1 when the centralizer is not soluble

    BoundValue b1_d_hc, b1_d_m, b2_d_m, corollary;

    std::vector<CheckLine> checks;

    // "pass", "hypothesis-failure", "violation", "error"
    std::string status;
    bool as_expected = false;
    double timing_ms = 0.0;
};

// Verify one entry: hypotheses, the main-theorem inequalities, and the
// Turull / corollary / section-bound addenda where applicable. Theorem
// verdicts are only emitted when all hypotheses pass.
VerificationRecord verify_entry(const CatalogEntry& entry);

struct CatalogReport {
    std::vector<VerificationRecord> records;
    bool all_as_expected = false;
    bool any_resolve_error = false;
    double total_ms = 0.0;
};

CatalogReport run_catalog(const std::vector<CatalogEntry>& entries);

std::vector<CatalogEntry> builtin_catalog();
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

std::string report_to_json(const CatalogReport& report);
std::string report_to_csv(const CatalogReport& report);

// 0 when every entry behaved as expected, 1 on assertion/expectation failure,
// 2 when an entry failed to resolve
int report_exit_code(const CatalogReport& report);

struct IdentitySearchResult {
    std::vector<IntPolynomial> found;  // sorted by degree, then coefficients
    bool complete = true;              // false when the budget cut the search
};

// All primitive ordered identities of phi with degree <= max_degree and
// coefficients in the symmetric window [-B, B], B = max(1, min(coeff_bound,
// exponent/2)), in lexicographic order.
IdentitySearchResult identity_search(const Automorphism& phi, int max_degree,
                                     const Int& coeff_bound,
                                     std::int64_t budget = 20000000,
                                     bool parallel = true);

}  // namespace fitbound

#endif
