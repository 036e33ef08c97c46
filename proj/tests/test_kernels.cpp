#include <doctest.h>

#include "fitbound/automorphism.hpp"
#include "fitbound/constructions.hpp"
#include "fitbound/frobenius_identity.hpp"
#include "fitbound/harness.hpp"
#include "fitbound/kernels.hpp"

using namespace fitbound;

TEST_CASE("associativity kernels agree, including the witness") {
    // D group: associative
    DDomainGroup D = build_ddomain(3, 1, 1);
    const auto& t = D.group->table();
    std::int64_t n = D.group->order();
    kernels::TripleWitness ws, wp;
    CHECK(kernels::associativity_serial(t.data(), n, &ws));
    CHECK(kernels::associativity_parallel(t.data(), n, &wp));

    // broken table: intercalate-swapped cyclic group
    std::vector<std::int32_t> bad(36);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) bad[static_cast<std::size_t>(a * 6 + b)] = (a + b) % 6;
    std::swap(bad[1 * 6 + 1], bad[1 * 6 + 4]);
    std::swap(bad[4 * 6 + 1], bad[4 * 6 + 4]);
    CHECK_FALSE(kernels::associativity_serial(bad.data(), 6, &ws));
    CHECK_FALSE(kernels::associativity_parallel(bad.data(), 6, &wp));
    CHECK(ws.a == wp.a);
    CHECK(ws.b == wp.b);
    CHECK(ws.c == wp.c);
}

TEST_CASE("all_of kernels return the smallest witness") {
    auto pred = [](std::int64_t i) { return i % 97 != 41 || i < 400; };
    std::int64_t ws = -1, wp = -1;
    CHECK_FALSE(kernels::all_of_serial(100000, pred, &ws));
    CHECK_FALSE(kernels::all_of_parallel(100000, pred, &wp));
    CHECK(ws == wp);
    CHECK(ws == 429);  // first i >= 400 with i = 41 mod 97

    CHECK(kernels::all_of_serial(100000, [](std::int64_t) { return true; }));
    CHECK(kernels::all_of_parallel(100000, [](std::int64_t) { return true; }));
}

TEST_CASE("collect kernels produce ascending equal lists") {
    auto pred = [](std::int64_t i) { return i % 131 == 7; };
    auto a = kernels::collect_serial(50000, pred);
    auto b = kernels::collect_parallel(50000, pred);
    CHECK(a == b);
    CHECK(std::is_sorted(a.begin(), a.end()));
}

TEST_CASE("ordered identity check: serial and parallel agree") {
    ShiftPowerResult sp = shift_power(stock("A5"), 2);
    IntPolynomial f60 = IntPolynomial::from_ints({60});
    IdentityCheck s = satisfies_ordered_serial(sp.shift, f60);
    IdentityCheck p = satisfies_ordered(sp.shift, f60);
    CHECK(s.holds == p.holds);
    CHECK(s.holds);

    IntPolynomial f = IntPolynomial::from_ints({-1, 1});
    IdentityCheck fs = satisfies_ordered_serial(sp.shift, f);
    IdentityCheck fp = satisfies_ordered(sp.shift, f);
    CHECK_FALSE(fs.holds);
    CHECK(fs.holds == fp.holds);
    CHECK(fs.witness == fp.witness);
}

TEST_CASE("additive identity check: serial and parallel agree") {
    FiniteField K(3, 2);
    AdditiveIdentityProblem bad{&K, 3, {Int(1), Int(1)}};
    AdditiveCheck s = check_additive_identity_serial(bad);
    AdditiveCheck p = check_additive_identity(bad);
    CHECK(s.holds == p.holds);
    CHECK(s.witness == p.witness);

    AdditiveIdentityProblem good{&K, 3, {Int(-1), Int(0), Int(1)}};
    CHECK(check_additive_identity_serial(good).holds);
    CHECK(check_additive_identity(good).holds);
}

TEST_CASE("identity search: serial and parallel agree") {
    Group C7 = stock("C7");
    Automorphism sq = Automorphism::power_map(C7, 2);
    IdentitySearchResult s = identity_search(sq, 2, 7, 20000000, false);
    IdentitySearchResult p = identity_search(sq, 2, 7, 20000000, true);
    REQUIRE(s.found.size() == p.found.size());
    for (std::size_t i = 0; i < s.found.size(); ++i) CHECK(s.found[i] == p.found[i]);
}

TEST_CASE("minimal identity search: serial and parallel agree") {
    FiniteField K(3, 3);
    MinimalIdentity s = min_primitive_identity_degree(K, 3, -1, false);
    MinimalIdentity p = min_primitive_identity_degree(K, 3, -1, true);
    CHECK(s.found == p.found);
    CHECK(s.degree == p.degree);
    CHECK(s.coeffs == p.coeffs);
}

TEST_CASE("field axiom validators agree") {
    FiniteField K(5, 2);
    std::string w1, w2;
    CHECK(validate_field_axioms_serial(K, &w1) == validate_field_axioms(K, &w2));
}
