#include <doctest.h>

#include <fstream>
#include <set>

#include "fitbound/group.hpp"
#include "fitbound/io.hpp"

using namespace fitbound;

namespace {

Permutation perm(const std::string& text, int degree) {
    return parse_permutation(text, degree);
}

Group s3() { return from_permutations(3, {perm("(1 2)", 3), perm("(1 2 3)", 3)}); }
Group s4() { return from_permutations(4, {perm("(1 2)", 4), perm("(1 2 3 4)", 4)}); }
Group a5() {
    return from_permutations(5, {perm("(1 2 3 4 5)", 5), perm("(3 4 5)", 5)});
}

// the cyclic-6 table with one intercalate swapped: still a Latin square with
// two-sided identity and inverses, but not associative
std::vector<std::vector<std::int32_t>> loop6() {
    std::vector<std::vector<std::int32_t>> t(6, std::vector<std::int32_t>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) t[a][b] = (a + b) % 6;
    std::swap(t[1][1], t[1][4]);
    std::swap(t[4][1], t[4][4]);
    return t;
}

}  // namespace

TEST_CASE("from_permutations enumerates by closure") {
    CHECK(s3().order() == 6);
    CHECK(a5().order() == 60);
    Group v4 = from_permutations(4, {perm("(1 2)(3 4)", 4), perm("(1 3)(2 4)", 4)});
    CHECK(v4.order() == 4);
    for (std::int32_t a = 0; a < 4; ++a)
        for (std::int32_t b = 0; b < 4; ++b) CHECK(v4.mul(a, b) == v4.mul(b, a));
}

TEST_CASE("from_permutations rejects bad input") {
    Permutation notbij;
    notbij.images = {0, 0, 2};
    CHECK_THROWS_AS(from_permutations(3, {notbij}), std::invalid_argument);
    CHECK_THROWS_AS(from_permutations(5, {perm("(1 2 3 4 5)", 5)}, 3),
                    std::invalid_argument);  // cap exceeded
}

TEST_CASE("identity is index 0 and BFS order is stable") {
    Group G = s3();
    CHECK(G.identity() == 0);
    CHECK(G.permutation_of(0).is_identity());
    // first two non-identity elements are the generators in input order
    CHECK(G.permutation_of(1) == perm("(1 2)", 3));
    CHECK(G.permutation_of(2) == perm("(1 2 3)", 3));
}

TEST_CASE("from_cayley_table accepts real groups") {
    CHECK(from_cayley_table({{0}}).order() == 1);
    std::vector<std::vector<std::int32_t>> z4(4, std::vector<std::int32_t>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) z4[a][b] = (a + b) % 4;
    Group G = from_cayley_table(z4);
    CHECK(G.order() == 4);
    CHECK(G.element_order(1) == 4);
}

TEST_CASE("from_cayley_table rejects a non-associative loop with a witness") {
    try {
        from_cayley_table(loop6());
        FAIL("loop accepted");
    } catch (const std::invalid_argument& ex) {
        std::string msg = ex.what();
        CHECK(msg.find("associativity") != std::string::npos);
        CHECK(msg.find("(") != std::string::npos);  // witness triple
    }
    // sanity: the loop really does satisfy the other axioms
    auto t = loop6();
    CHECK(t[1][5] == 0);
    CHECK(t[5][1] == 0);
    CHECK(t[1][1] == 5);
}

TEST_CASE("subgroup_generated") {
    Group G = s3();
    auto rot = G.index_of(perm("(1 2 3)", 3));
    REQUIRE(rot);
    Subgroup A3 = subgroup_generated(G, {*rot});
    CHECK(A3.order() == 3);
    CHECK(subgroup_generated(G, {}).order() == 1);

    Group A5 = a5();
    auto five = A5.index_of(perm("(1 2 3 4 5)", 5));
    auto three = A5.index_of(perm("(3 4 5)", 5));
    REQUIRE(five);
    REQUIRE(three);
    CHECK(subgroup_generated(A5, {*five, *three}).order() == 60);
}

TEST_CASE("normal_closure") {
    Group G = s4();
    auto t = G.index_of(perm("(1 2)", 4));
    REQUIRE(t);
    CHECK(normal_closure(G, {*t}).order() == 24);

    auto dbl = G.index_of(perm("(1 2)(3 4)", 4));
    REQUIRE(dbl);
    Subgroup V = normal_closure(G, {*dbl});
    CHECK(V.order() == 4);

    CHECK(normal_closure(G, {G.identity()}).order() == 1);

    // conjugation stability, exhaustively
    for (std::int32_t n : V.members)
        for (std::int32_t g = 0; g < G.order(); ++g)
            CHECK(V.contains(G.conj(n, g)));
}

TEST_CASE("quotient S4/V4 is a non-abelian group of order 6") {
    Group G = s4();
    Subgroup V = normal_closure(G, {*G.index_of(perm("(1 2)(3 4)", 4))});
    QuotientResult qr = quotient(G, V);
    CHECK(qr.group.order() == 6);
    bool abelian = true;
    for (std::int32_t a = 0; a < 6 && abelian; ++a)
        for (std::int32_t b = 0; b < 6; ++b)
            if (qr.group.mul(a, b) != qr.group.mul(b, a)) {
                abelian = false;
                break;
            }
    CHECK_FALSE(abelian);
    // projection is a homomorphism on every pair
    for (std::int32_t a = 0; a < G.order(); ++a)
        for (std::int32_t b = 0; b < G.order(); ++b)
            CHECK(qr.projection[static_cast<std::size_t>(G.mul(a, b))] ==
                  qr.group.mul(qr.projection[static_cast<std::size_t>(a)],
                               qr.projection[static_cast<std::size_t>(b)]));
}

TEST_CASE("quotient edge cases") {
    Group G = s3();
    QuotientResult by_trivial = quotient(G, trivial_subgroup(G));
    CHECK(by_trivial.group.order() == 6);
    QuotientResult by_self = quotient(G, full_subgroup(G));
    CHECK(by_self.group.order() == 1);

    auto t = G.index_of(perm("(1 2)", 3));
    Subgroup H = subgroup_generated(G, {*t});
    std::string w;
    CHECK_FALSE(is_normal(G, H, &w));
    CHECK(!w.empty());
    CHECK_THROWS_AS(quotient(G, H), std::invalid_argument);
}

TEST_CASE("derived series and solubility") {
    Group S4 = s4();
    auto series = derived_series(S4);
    REQUIRE(series.size() == 4);
    CHECK(series[0].order() == 24);
    CHECK(series[1].order() == 12);
    CHECK(series[2].order() == 4);
    CHECK(series[3].order() == 1);
    CHECK(is_soluble(S4));

    Group A5 = a5();
    auto pseries = derived_series(A5);
    CHECK(pseries.back().order() == 60);  // perfect group
    CHECK_FALSE(is_soluble(A5));

    Group C6 = from_permutations(6, {perm("(1 2 3 4 5 6)", 6)});
    CHECK(derived_series(C6).size() == 2);
    CHECK(is_soluble(C6));
}

TEST_CASE("curated solubility list") {
    CHECK(is_soluble(s3()));
    CHECK(is_soluble(s4()));
    Group A4 = from_permutations(4, {perm("(1 2 3)", 4), perm("(2 3 4)", 4)});
    CHECK(A4.order() == 12);
    CHECK(is_soluble(A4));
    Group D8 = from_permutations(4, {perm("(1 2 3 4)", 4), perm("(1 3)", 4)});
    CHECK(D8.order() == 8);
    CHECK(is_soluble(D8));
    CHECK_FALSE(is_soluble(a5()));
    Group S5 = from_permutations(5, {perm("(1 2)", 5), perm("(1 2 3 4 5)", 5)});
    CHECK(S5.order() == 120);
    CHECK_FALSE(is_soluble(S5));
}

TEST_CASE("lower central series and nilpotency") {
    Group D8 = from_permutations(4, {perm("(1 2 3 4)", 4), perm("(1 3)", 4)});
    CHECK(is_nilpotent(D8));

    Group S3 = s3();
    auto lcs = lower_central_series(S3);
    REQUIRE(lcs.size() >= 2);
    CHECK(lcs[1].order() == 3);      // gamma_2 = A3
    CHECK(lcs.back().order() == 3);  // stabilizes, never trivial
    CHECK_FALSE(is_nilpotent(S3));

    Group C5 = from_permutations(5, {perm("(1 2 3 4 5)", 5)});
    CHECK(is_nilpotent(C5));
    CHECK(lower_central_series(C5).size() <= 2);
}

TEST_CASE("direct products") {
    Group A5 = a5();
    ProductResult sq = direct_product({&A5, &A5});
    CHECK(sq.group.order() == 3600);

    Group triv = from_permutations(1, {});
    ProductResult padded = direct_product({&A5, &triv});
    CHECK(padded.group.order() == 60);

    Group C2 = from_permutations(2, {perm("(1 2)", 2)});
    Group C3 = from_permutations(3, {perm("(1 2 3)", 3)});
    ProductResult c6 = direct_product({&C2, &C3});
    CHECK(c6.group.order() == 6);
    CHECK(exponent(c6.group) == 6);

    // injections are embeddings
    for (std::int32_t i = 0; i < C2.order(); ++i)
        for (std::int32_t j = 0; j < C2.order(); ++j)
            CHECK(c6.group.mul(c6.injections[0][static_cast<std::size_t>(i)],
                               c6.injections[0][static_cast<std::size_t>(j)]) ==
                  c6.injections[0][static_cast<std::size_t>(C2.mul(i, j))]);
}

TEST_CASE("exponent") {
    CHECK(exponent(a5()) == 30);
    Group V4 = from_permutations(4, {perm("(1 2)(3 4)", 4), perm("(1 3)(2 4)", 4)});
    CHECK(exponent(V4) == 2);
    CHECK(exponent(from_permutations(1, {})) == 1);
}

TEST_CASE("element orders divide the group order; cancellation holds") {
    for (const Group& G : {s3(), s4(), a5()}) {
        for (std::int32_t g = 0; g < G.order(); ++g)
            CHECK(G.order() % G.element_order(g) == 0);
        // left/right cancellation: every row and column of the product map
        // is a permutation
        for (std::int32_t a = 0; a < G.order(); ++a) {
            std::set<std::int32_t> row, col;
            for (std::int32_t b = 0; b < G.order(); ++b) {
                row.insert(G.mul(a, b));
                col.insert(G.mul(b, a));
            }
            CHECK(row.size() == static_cast<std::size_t>(G.order()));
            CHECK(col.size() == static_cast<std::size_t>(G.order()));
        }
    }
}

TEST_CASE("subgroup_as_group keeps the multiplication") {
    Group G = s4();
    Subgroup A4 = normal_closure(G, {*G.index_of(perm("(1 2 3)", 4))});
    REQUIRE(A4.order() == 12);
    SubgroupGroup sg = subgroup_as_group(A4);
    CHECK(sg.group.order() == 12);
    for (std::int32_t i = 0; i < 12; ++i)
        for (std::int32_t j = 0; j < 12; ++j)
            CHECK(sg.to_parent[static_cast<std::size_t>(sg.group.mul(i, j))] ==
                  G.mul(sg.to_parent[static_cast<std::size_t>(i)],
                        sg.to_parent[static_cast<std::size_t>(j)]));
}

TEST_CASE("group file round trip") {
    {
        std::ofstream out("/tmp/fitbound_test_group.txt");
        out << "# alternating group on five letters\n";
        out << "(1 2 3 4 5)\n\n(3 4 5)\n";
    }
    Group G = load_group_file("/tmp/fitbound_test_group.txt");
    CHECK(G.order() == 60);

    {
        std::ofstream out("/tmp/fitbound_test_imagelist.txt");
        out << "2 3 1 5 4\n";
    }
    Group H = load_group_file("/tmp/fitbound_test_imagelist.txt");
    CHECK(H.order() == 6);  // product of a 3-cycle and a transposition

    {
        std::ofstream out("/tmp/fitbound_test_cayley.txt");
        out << "4\n";
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) out << ((a + b) % 4) + 1 << " ";
            out << "\n";
        }
    }
    Group C4 = load_group_file("/tmp/fitbound_test_cayley.txt");
    CHECK(C4.order() == 4);
    CHECK(C4.element_order(1) == 4);
}
