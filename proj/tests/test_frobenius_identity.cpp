#include <doctest.h>

#include "fitbound/frobenius_identity.hpp"
#include "fitbound/numbers.hpp"
#include "fitbound/poly_identity.hpp"

using namespace fitbound;

TEST_CASE("additive identity checks") {
    FiniteField K(2, 2);
    SUBCASE("s^4 = s on GF(4)") {
        AdditiveIdentityProblem prob{&K, 2, {Int(-1), Int(0), Int(1)}};
        CHECK(check_additive_identity(prob).holds);
    }
    SUBCASE("s + s^2 is not identically zero; omega is the first witness") {
        AdditiveIdentityProblem prob{&K, 2, {Int(1), Int(1)}};
        AdditiveCheck c = check_additive_identity(prob);
        CHECK_FALSE(c.holds);
        CHECK(c.witness == K.omega());
    }
    SUBCASE("all-zero coefficients hold trivially") {
        AdditiveIdentityProblem prob{&K, 2, {Int(0), Int(0), Int(0)}};
        CHECK(check_additive_identity(prob).holds);
    }
    SUBCASE("q0 must be a power of the characteristic") {
        AdditiveIdentityProblem prob{&K, 3, {Int(1)}};
        CHECK_THROWS_AS(check_additive_identity(prob), std::invalid_argument);
    }
}

TEST_CASE("vandermonde determinant on GF(4)") {
    FiniteField K(2, 2);
    CHECK(vandermonde_det(K, 2, 0) == K.one());
    // exponents {0,1}: det = omega - 1
    CHECK(vandermonde_det(K, 2, 1) == K.sub(K.omega(), K.one()));
    CHECK(vandermonde_det(K, 2, 1) != 0);
    // exponents {0,1,3} with omega^3 = omega^0: two equal columns
    CHECK(vandermonde_det(K, 2, 2) == 0);
}

TEST_CASE("vandermonde duality and vanishing criterion, q <= 1024") {
    for (auto [p, emax] : std::vector<std::pair<std::int64_t, int>>{
             {2, 10}, {3, 6}, {5, 4}, {7, 3}}) {
        for (int e = 1; e <= emax; ++e) {
            FiniteField K(p, e);
            REQUIRE(K.q() <= 1024);
            std::int64_t q0 = 1;
            for (int k = 1; k <= e; ++k) {
                q0 *= p;
                for (int d = 0; d <= 6; ++d) {
                    // vandermonde_det itself enforces elimination == product
                    Felem det = vandermonde_det(K, q0, d);
                    bool vanish_expected = vandermonde_vanishing_expected(K, q0, d);
                    CAPTURE(p); CAPTURE(e); CAPTURE(k); CAPTURE(d);
                    CHECK((det == 0) == vanish_expected);
                }
            }
        }
    }
}

TEST_CASE("minimal primitive identity degree small cases") {
    SUBCASE("GF(4), q0=2: degree 2, no degree-1 identity") {
        FiniteField K(2, 2);
        MinimalIdentity mi = min_primitive_identity_degree(K, 2);
        REQUIRE(mi.found);
        CHECK(mi.degree == 2);
        CHECK_FALSE(mi.degenerate);
        AdditiveIdentityProblem prob{&K, 2, mi.coeffs};
        CHECK(check_additive_identity(prob).holds);
        CHECK(content_of(mi.coeffs) == 1);
        // and indeed nothing at degree 1
        MinimalIdentity capped = min_primitive_identity_degree(K, 2, 1);
        CHECK_FALSE(capped.found);
    }
    SUBCASE("GF(8), q0=2: degree 3") {
        FiniteField K(2, 3);
        MinimalIdentity mi = min_primitive_identity_degree(K, 2);
        REQUIRE(mi.found);
        CHECK(mi.degree == 3);
    }
    SUBCASE("prime field: the Frobenius is trivial and the result degenerates") {
        FiniteField K(5, 1);
        MinimalIdentity mi = min_primitive_identity_degree(K, 5);
        REQUIRE(mi.found);
        CHECK(mi.degree == 1);
        CHECK(mi.degenerate);
        AdditiveIdentityProblem prob{&K, 5, mi.coeffs};
        CHECK(check_additive_identity(prob).holds);
    }
}

TEST_CASE("minimal degree equals e for p <= 7, e <= 3 (fast slice)") {
    // the full e <= 5 sweep is an acceptance criterion
    for (std::int64_t p : {2, 3, 5, 7}) {
        for (int e = 2; e <= 3; ++e) {
            FiniteField K(p, e);
            MinimalIdentity mi = min_primitive_identity_degree(K, p);
            CAPTURE(p); CAPTURE(e);
            REQUIRE(mi.found);
            CHECK(mi.degree == e);
            AdditiveIdentityProblem prob{&K, p, mi.coeffs};
            CHECK(check_additive_identity(prob).holds);
            CHECK(content_of(mi.coeffs) == 1);
        }
    }
}

TEST_CASE("minimal degree for a Frobenius power follows the orbit length") {
    // on GF(p^4), t -> t^(p^2) has order 2, so the minimal degree is 2
    FiniteField K(2, 4);
    MinimalIdentity mi = min_primitive_identity_degree(K, 4);
    REQUIRE(mi.found);
    CHECK(mi.degree == 2);
}

TEST_CASE("primitive lift") {
    SUBCASE("already primitive stays put") {
        auto v = primitive_lift({1, 2}, 7);
        CHECK(v == std::vector<Int>{1, 2});
    }
    SUBCASE("single subtraction repairs the content") {
        auto v = primitive_lift({2, 2}, 7);
        CHECK(content_of(v) == 1);
        CHECK(int_mod(v[0] - 2, 7) == 0);
        CHECK(int_mod(v[1] - 2, 7) == 0);
    }
    SUBCASE("the (6,10) mod 31 case needs more than one multiple") {
        auto v = primitive_lift({6, 10}, 31);
        CHECK(content_of(v) == 1);
        CHECK(int_mod(v[0] - 6, 31) == 0);
        CHECK(int_mod(v[1] - 10, 31) == 0);
    }
    SUBCASE("(3,6) mod 7") {
        auto v = primitive_lift({3, 6}, 7);
        CHECK(content_of(v) == 1);
        CHECK(int_mod(v[0] - 3, 7) == 0);
        CHECK(int_mod(v[1] - 6, 7) == 0);
    }
}

TEST_CASE("solution vectors satisfy the identity they came from") {
    for (auto [p, e] : std::vector<std::pair<std::int64_t, int>>{{2, 2}, {3, 2}, {5, 2}}) {
        FiniteField K(p, e);
        MinimalIdentity mi = min_primitive_identity_degree(K, p);
        REQUIRE(mi.found);
        AdditiveIdentityProblem prob{&K, p, mi.coeffs};
        AdditiveCheck chk = check_additive_identity(prob);
        CAPTURE(p); CAPTURE(e);
        CHECK(chk.holds);
    }
}
