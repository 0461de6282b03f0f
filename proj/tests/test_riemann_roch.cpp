#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ulrich/cohomology.hpp"
#include "ulrich/riemann_roch.hpp"

using namespace ulrich;

TEST_CASE("chi on curves") {
    CHECK(chi_curve(0, 3) == 4);
    CHECK(chi_curve(1, 0) == 0);
    CHECK(chi_curve(2, 5) == 4);
    CHECK(chi_curve(3, -1) == -3);
}

TEST_CASE("chi on surfaces with adjunction parity") {
    // chi(O(D)) = chi(O) + (D^2 - D.K)/2
    CHECK(chi_surface_of(1, 4, -6) == 6);   // O(2) on P^2
    CHECK(chi_surface_of(1, 0, 0) == 1);
    CHECK(chi_surface_of(2, 6, -2) == 6);
    CHECK_THROWS_AS(chi_surface_of(1, 4, -5), std::invalid_argument);
}

TEST_CASE("sectional genus") {
    CHECK(sectional_genus_of(4, -6) == 0);  // conic in P^2
    IntersectionTable t;
    t.L2 = 2;
    t.LK = -4;
    t.H2 = 2;
    t.LH = 2;
    t.HK = -4;
    t.n = 3;
    REQUIRE(t.valid());
    CHECK(sectional_genus(t) == 0);

    const auto q = VarietyModel::quadric();
    // H = O(2,6): H^2 = 24, H.K = -16, g = 1 + 8/2 = 5
    CHECK(sectional_genus(q, BundleClass(q, 2, 6)) == 5);
    // plane curves of degree a have genus (a-1)(a-2)/2
    const auto p2 = VarietyModel::pn(2);
    for (long long a = 1; a <= 6; ++a)
        CHECK(sectional_genus(p2, BundleClass(p2, a)) == (a - 1) * (a - 2) / 2);
}

TEST_CASE("intersection pairing and canonical classes") {
    const auto p2 = VarietyModel::pn(2);
    const auto q = VarietyModel::quadric();
    CHECK(dot(p2, BundleClass(p2, 2), BundleClass(p2, 3)) == 6);
    CHECK(self_intersection(p2, BundleClass(p2, -3)) == 9);
    // (a,b).(c,d) = ad + bc on P^1 x P^1
    CHECK(dot(q, BundleClass(q, 1, 4), BundleClass(q, 2, 6)) == 14);
    CHECK(self_intersection(q, BundleClass(q, 2, 6)) == 24);
    CHECK(canonical_class(VarietyModel::p1()).deg() == -2);
    CHECK(canonical_class(p2).deg() == -3);
    CHECK(canonical_class(VarietyModel::pn(3)).deg() == -4);
    CHECK(canonical_class(q) == BundleClass(q, -2, -2));
}

TEST_CASE("Riemann-Roch chi matches the closed-form chi of line bundles") {
    const auto p1 = VarietyModel::p1();
    const auto p2 = VarietyModel::pn(2);
    const auto q = VarietyModel::quadric();
    for (long long d = -6; d <= 6; ++d) {
        CHECK(chi_rr(p1, BundleClass(p1, d)) == chi_line(p1, BundleClass(p1, d)));
        CHECK(chi_rr(p2, BundleClass(p2, d)) == chi_line(p2, BundleClass(p2, d)));
    }
    for (long long a = -4; a <= 4; ++a)
        for (long long b = -4; b <= 4; ++b)
            CHECK(chi_rr(q, BundleClass(q, a, b)) ==
                  chi_line(q, BundleClass(q, a, b)));
}

TEST_CASE("chi of line bundles is the expected polynomial in the degree") {
    // second difference of d -> chi(O(d)) on a surface is the constant
    // self-intersection of the polarization
    const auto p2 = VarietyModel::pn(2);
    auto chi2 = [&](long long d) { return chi_line(p2, BundleClass(p2, d)); };
    for (long long d = -5; d <= 5; ++d)
        CHECK(chi2(d + 1) - 2 * chi2(d) + chi2(d - 1) == 1);

    const auto q = VarietyModel::quadric();
    auto chiq = [&](long long s) { return chi_line(q, scale(s, BundleClass(q, 1, 2))); };
    for (long long s = -5; s <= 5; ++s)
        CHECK(chiq(s + 1) - 2 * chiq(s) + chiq(s - 1) == 4);  // (1,2)^2 = 4
}

TEST_CASE("degree under a polarization") {
    const auto p1 = VarietyModel::p1();
    const auto p2 = VarietyModel::pn(2);
    const auto p3 = VarietyModel::pn(3);
    const auto q = VarietyModel::quadric();
    CHECK(degree_under(p1, BundleClass(p1, 9)) == 9);
    CHECK(degree_under(p2, BundleClass(p2, 2)) == 4);
    CHECK(degree_under(p3, BundleClass(p3, 2)) == 8);
    CHECK(degree_under(q, BundleClass(q, 2, 6)) == 24);
    CHECK(degree_under(q, BundleClass(q, 1, 1)) == 2);
    CHECK_THROWS_AS(degree_under(p2, BundleClass(p2, 0)), std::invalid_argument);
}
