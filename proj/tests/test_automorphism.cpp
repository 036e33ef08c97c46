#include <doctest.h>

#include <random>

#include "fitbound/automorphism.hpp"
#include "fitbound/constructions.hpp"
#include "fitbound/io.hpp"
#include "fitbound/numbers.hpp"
#include "fitbound/structure.hpp"

using namespace fitbound;

namespace {

IntPolynomial poly(const std::vector<long>& c) { return IntPolynomial::from_ints(c); }

}  // namespace

TEST_CASE("order of automorphisms") {
    Group C7 = stock("C7");
    Automorphism sq = Automorphism::power_map(C7, 2);
    CHECK(sq.order() == 3);  // 2^3 = 8 = 1 mod 7
    CHECK(Automorphism::identity(C7).order() == 1);

    ShiftPowerResult sp = shift_power(stock("A5"), 2);
    CHECK(sp.shift.order() == 2);
}

TEST_CASE("fixed points") {
    Group C7 = stock("C7");
    Automorphism sq = Automorphism::power_map(C7, 2);
    CHECK(sq.fixed_point_count() == 1);
    CHECK(sq.fixed_points().order() == 1);

    ShiftPowerResult sp = shift_power(stock("A5"), 2);
    Subgroup diag = sp.shift.fixed_points();
    CHECK(diag.order() == 60);
    // the fixed subgroup is exactly the diagonal
    for (std::int32_t i = 0; i < 60; ++i)
        CHECK(diag.contains(sp.group->mul(sp.injections[0][static_cast<std::size_t>(i)],
                                          sp.injections[1][static_cast<std::size_t>(i)])));

    Group S4 = stock("S4");
    CHECK(Automorphism::identity(S4).fixed_point_count() == 24);
}

TEST_CASE("coprimality") {
    Group C7 = stock("C7");
    CHECK(Automorphism::power_map(C7, 2).is_coprime());  // gcd(7,3) = 1

    Group S3 = stock("S3");
    Automorphism inner = Automorphism::inner(S3, 1);  // conjugation by (1 2)
    CHECK(inner.order() == 2);
    CHECK_FALSE(inner.is_coprime());  // gcd(6,2) = 2

    CHECK(Automorphism::identity(S3).is_coprime());
}

TEST_CASE("ordered identities") {
    Group C7 = stock("C7");
    Automorphism sq = Automorphism::power_map(C7, 2);
    CHECK(satisfies_ordered(sq, poly({-2, 1})).holds);

    IdentityCheck bad = satisfies_ordered(sq, poly({-1, 1}));
    CHECK_FALSE(bad.holds);
    CHECK(bad.witness > 0);  // any g != 1 witnesses the failure

    ShiftPowerResult sp = shift_power(stock("A5"), 2);
    CHECK(satisfies_ordered(sp.shift, poly({60})).holds);  // exponent 30 divides 60
    CHECK_FALSE(satisfies_ordered(sp.shift, poly({30, 1})).holds);
}

TEST_CASE("ordered identity on abelian groups matches additive evaluation") {
    // on C_n with the power map g -> g^k, f is an ordered identity iff
    // f(k) = 0 mod n
    std::mt19937 rng(777);
    int trials = 0;
    while (trials < 60) {
        long n = static_cast<long>(rng() % 11) + 2;
        long k = static_cast<long>(rng() % static_cast<unsigned long>(n));
        if (gcd64(k, n) != 1) continue;
        ++trials;
        Group G = stock("C" + std::to_string(n));
        Automorphism phi = Automorphism::power_map(G, k);
        std::vector<long> c(static_cast<std::size_t>(rng() % 4 + 1));
        for (auto& v : c) v = static_cast<long>(rng() % 9) - 4;
        IntPolynomial f = poly(c);
        bool additive_zero = int_mod(f.evaluate(Int(k)), Int(n)) == 0;
        CHECK(satisfies_ordered(phi, f).holds == additive_zero);
    }
}

TEST_CASE("order dividing n iff -1 + x^n is an ordered identity") {
    Group S4 = stock("S4");
    std::vector<Automorphism> auts;
    for (std::int32_t h : {1, 2, 5}) auts.push_back(Automorphism::inner(S4, h));
    CompanionActionResult ca = companion_action(2, poly({1, 1, 1}));
    auts.push_back(ca.aut);
    for (const Automorphism& phi : auts) {
        std::int64_t ord = phi.order();
        for (int n = 1; n <= 6; ++n) {
            std::vector<long> c(static_cast<std::size_t>(n) + 1, 0);
            c[0] = -1;
            c[static_cast<std::size_t>(n)] = 1;
            CHECK(satisfies_ordered(phi, poly(c)).holds == (n % ord == 0));
        }
    }
}

TEST_CASE("unordered identities") {
    Group C7 = stock("C7");
    Automorphism sq = Automorphism::power_map(C7, 2);

    UnorderedIdentity cancel;
    cancel.terms = {{0, 1}, {0, -1}};
    CHECK(satisfies_unordered(sq, cancel).holds);

    UnorderedIdentity reordered;  // phi(g) g^-2, same terms as -2 + x
    reordered.terms = {{1, 1}, {0, -2}};
    CHECK(satisfies_unordered(sq, reordered).holds);

    // an ordered identity given as its ascending term list agrees
    UnorderedIdentity ascending;
    ascending.terms = {{0, -2}, {1, 1}};
    CHECK(satisfies_unordered(sq, ascending).holds ==
          satisfies_ordered(sq, poly({-2, 1})).holds);
}

TEST_CASE("conjugate automorphism") {
    Group S4 = stock("S4");
    Automorphism phi = Automorphism::inner(S4, 1);
    Automorphism id = Automorphism::identity(S4);
    CHECK(conjugate(phi, id) == phi);

    // order, fixed points and satisfied identities are preserved under all
    // inner conjugators
    IntPolynomial f = poly({-1, 0, 1});  // phi has order 2
    REQUIRE(satisfies_ordered(phi, f).holds);
    for (std::int32_t h = 0; h < S4.order(); ++h) {
        Automorphism gamma = Automorphism::inner(S4, h);
        Automorphism beta = conjugate(phi, gamma);
        CHECK(beta.order() == phi.order());
        CHECK(beta.fixed_point_count() == phi.fixed_point_count());
        CHECK(satisfies_ordered(beta, f).holds);
        // fixed set transported by gamma
        Subgroup fp = phi.fixed_points();
        for (std::int32_t g : fp.members)
            CHECK(beta.apply(gamma.apply(g)) == gamma.apply(g));
    }
}

TEST_CASE("restriction") {
    ShiftPowerResult sp = shift_power(stock("A5"), 2);
    const Group& G = *sp.group;

    // restriction to the fixed subgroup is the identity automorphism
    RestrictionResult fixed = restrict_to(sp.shift, sp.shift.fixed_points());
    CHECK(fixed.sub->order() == 60);
    CHECK(fixed.aut == Automorphism::identity(*fixed.sub));

    // the radical is characteristic, restriction always legal
    Group S4 = stock("S4");
    Automorphism inner = Automorphism::inner(S4, 1);
    RestrictionResult rad = restrict_to(inner, soluble_radical(S4));
    CHECK(rad.sub->order() == 24);

    // a single direct factor is not shift-invariant
    std::vector<std::int32_t> factor0(sp.injections[0].begin(), sp.injections[0].end());
    Subgroup H = subgroup_generated(G, factor0);
    REQUIRE(H.order() == 60);
    CHECK_THROWS_AS(restrict_to(sp.shift, H), std::invalid_argument);
}

TEST_CASE("induced automorphism on quotients") {
    Group S4 = stock("S4");
    Automorphism phi = Automorphism::inner(S4, 1);

    InducedQuotientResult by_trivial = induce_on_quotient(phi, trivial_subgroup(S4));
    CHECK(by_trivial.quot->order() == 24);
    for (std::int32_t g = 0; g < 24; ++g)
        CHECK(by_trivial.aut.apply(by_trivial.projection[static_cast<std::size_t>(g)]) ==
              by_trivial.projection[static_cast<std::size_t>(phi.apply(g))]);

    InducedQuotientResult by_self = induce_on_quotient(phi, full_subgroup(S4));
    CHECK(by_self.quot->order() == 1);

    // chain through O_{2',2}(S4) = V4 and then the Fitting subgroup of S4/V4
    Subgroup v4 = o_qprime_q(S4, 2);
    REQUIRE(v4.order() == 4);
    InducedQuotientResult bar = induce_on_quotient(phi, v4);
    CHECK(bar.quot->order() == 6);
    Subgroup fbar = fitting_subgroup(*bar.quot);
    CHECK(fbar.order() == 3);
    InducedQuotientResult sect = induce_on_quotient(bar.aut, fbar);
    CHECK(sect.quot->order() == 2);

    SectionResult sd = section_data(S4, phi, 2);
    CHECK(sd.section->order() == 2);
    CHECK(sd.induced_order == 1);  // inner maps act trivially on the section here
    CHECK(sd.klen == 0);
}

TEST_CASE("section data") {
    Group C7 = stock("C7");
    Automorphism sq = Automorphism::power_map(C7, 2);
    SectionResult sd = section_data(C7, sq, 7);
    CHECK(sd.section->order() == 1);
    CHECK(sd.induced_order == 1);
    CHECK(sd.klen == 0);
    CHECK_THROWS_AS(section_data(C7, sq, 2), std::invalid_argument);

    CompanionActionResult ca = companion_action(2, poly({1, 1, 1}));
    SectionResult sd2 = section_data(*ca.group, ca.aut, 2);
    CHECK(sd2.section->order() == 1);
}

TEST_CASE("generator-image construction") {
    Group C7 = stock("C7");
    Permutation g = C7.permutation_of(1);
    Permutation g2 = compose(g, g);
    Automorphism from_imgs = Automorphism::from_generator_images(
        C7, {{*C7.index_of(g), *C7.index_of(g2)}});
    CHECK(from_imgs == Automorphism::power_map(C7, 2));

    Group S3 = stock("S3");
    auto r = S3.index_of(parse_permutation("(1 2 3)", 3));
    auto t = S3.index_of(parse_permutation("(1 2)", 3));
    auto t2 = S3.index_of(parse_permutation("(1 3)", 3));
    REQUIRE((r && t && t2));
    // swapping the transposition while fixing the rotation does not extend
    CHECK_THROWS_AS(
        Automorphism::from_generator_images(S3, {{*r, *r}, {*t, *t2}, {*t2, *t2}}),
        std::invalid_argument);
    // seeds that do not generate are rejected
    CHECK_THROWS_AS(Automorphism::from_generator_images(S3, {{*r, *r}}),
                    std::invalid_argument);
}

TEST_CASE("power map validation") {
    Group C6 = stock("C6");
    CHECK_THROWS_AS(Automorphism::power_map(C6, 2), std::invalid_argument);
    CHECK(Automorphism::power_map(C6, 5).order() == 2);
}

TEST_CASE("m is at least 1") {
    for (const char* name : {"S4", "C7", "D8"}) {
        Group G = stock(name);
        for (std::int32_t h = 0; h < std::min<std::int64_t>(G.order(), 8); ++h)
            CHECK(Automorphism::inner(G, h).fixed_point_count() >= 1);
    }
}
