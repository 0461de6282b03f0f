#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ulrich/classify.hpp"

using namespace ulrich;

TEST_CASE("curves, dual side: exactly the conic and line families") {
    const auto cfg = default_curve_ranges();
    const auto sols = solve_curve_dualM(cfg);

    std::vector<ClassificationSolution> expected;
    for (long long k = -1; k <= 8; ++k)
        if (k + 2 <= 12) expected.push_back({Family::CurveConic, 2, 2, 0, k, k + 2});
    for (long long k = -2; k <= 8; ++k)
        if (k + 3 <= 12) expected.push_back({Family::CurveLine, 1, 1, 0, k, k + 3});
    std::sort(expected.begin(), expected.end());

    CHECK(sols == expected);
    CHECK(sols.size() == 21);
    for (const auto& s : sols) {
        CHECK(s.family != Family::Unexpected);
        CHECK(s.g == 0);
        CHECK(s.a <= s.k + 3);
    }
}

TEST_CASE("curves, dual side: the g = 1 slice is empty") {
    auto cfg = default_curve_ranges();
    cfg.g = {1, 1};
    CHECK(solve_curve_dualM(cfg).empty());
}

TEST_CASE("curves, dual side: the exceptional tuple is admitted") {
    auto cfg = default_curve_ranges();
    cfg.k = {-2, -2};
    const auto sols = solve_curve_dualM(cfg);
    REQUIRE(sols.size() == 1);
    CHECK(sols[0] == ClassificationSolution{Family::CurveLine, 1, 1, 0, -2, 1});
}

TEST_CASE("curves, syzygy side: the a = k-1 family, one solution per n") {
    const auto cfg = default_curve_ranges();
    const auto sols = solve_curve_M(cfg);
    // k in [2,8], n in [1,15] (m-range covers deg L = n)
    CHECK(sols.size() == 7 * 15);
    for (const auto& s : sols) {
        CHECK(s.family == Family::NormalRational);
        CHECK(s.a == s.k - 1);
        CHECK(s.m == s.n);
        CHECK(s.g == 0);
    }
    // the documented member (P^1, O(1), a = 2) at k = 3
    const ClassificationSolution member{Family::NormalRational, 1, 1, 0, 3, 2};
    CHECK(std::find(sols.begin(), sols.end(), member) != sols.end());
}

TEST_CASE("curves, syzygy side: the a > k slice is empty") {
    auto cfg = default_curve_ranges();
    const auto sols = solve_curve_M(cfg);
    for (const auto& s : sols) CHECK(s.a < s.k);
    // force a > k only: a >= 10 with k <= 8 leaves a - 1 > k - 1 everywhere
    cfg.a = {10, 12};
    cfg.k = {-5, 8};
    for (const auto& s : solve_curve_M(cfg)) CHECK(s.a == s.k - 1);
    cfg.a = {10, 12};
    cfg.k = {2, 8};
    CHECK(solve_curve_M(cfg).empty());  // a = k-1 <= 7 out of range, a > k impossible
}

TEST_CASE("surfaces, dual side: the unique solution (2, 1, 0, 2)") {
    const auto cfg = default_surface_ranges();
    const auto res = solve_surface_dualM(cfg);
    REQUIRE(res.solutions.size() == 1);
    const auto& s = res.solutions[0];
    CHECK(s.family == Family::SurfaceP2);
    CHECK(s.n == 2);
    CHECK(s.m == 1);  // L^2 in the m slot
    CHECK(s.g == -1);
    CHECK(s.k == 0);
    CHECK(s.a == 2);
    CHECK(res.raw_extras.empty());
}

TEST_CASE("surfaces, dual side: diagnostic mode exposes the filtered tuples") {
    const auto cfg = default_surface_ranges();
    const auto res = solve_surface_dualM(cfg, false);
    REQUIRE(res.solutions.size() == 1);
    REQUIRE_FALSE(res.raw_extras.empty());
    // without "L^2 = 1 iff n = 2" the tuple (n, L2, k, a) = (2, 2, -1, 1) leaks in
    bool found = false;
    for (const auto& s : res.raw_extras)
        found = found || (s.n == 2 && s.m == 2 && s.k == -1 && s.a == 1);
    CHECK(found);
    for (const auto& s : res.raw_extras) CHECK_FALSE((s.m == 1) == (s.n == 2));
}

TEST_CASE("polarization condition verdicts") {
    // the P^2 instance behind the surface solution: L = O(1), H = O(2), K = -3L
    IntersectionTable p2t;
    p2t.L2 = 1;
    p2t.LK = -3;
    p2t.H2 = 4;
    p2t.LH = 2;
    p2t.HK = -6;
    p2t.n = 2;
    REQUIRE(p2t.valid());
    CHECK(check_prop52(p2t, 0, true) == Prop52Verdict::Holds);
    CHECK(check_prop52(p2t, 1, true) == Prop52Verdict::Fails);

    // quadric in P^3 via Segre, L = H = (1,1): n = 3 does not divide 2 L.H = 4
    IntersectionTable seg;
    seg.L2 = 2;
    seg.LK = -4;
    seg.H2 = 2;
    seg.LH = 2;
    seg.HK = -4;
    seg.n = 3;
    REQUIRE(seg.valid());
    CHECK(check_prop52(seg, 0, true) == Prop52Verdict::NonIntegral);
    CHECK(check_prop52(seg, 0, false) == Prop52Verdict::NonIntegral);
    CHECK(prop52_verdict_name(Prop52Verdict::Holds) == std::string("holds"));
    CHECK(prop52_verdict_name(Prop52Verdict::NonIntegral) == std::string("non_integral"));
}

TEST_CASE("polarization condition: the H.K form and the sectional-genus form agree") {
    std::mt19937 rng(5252);
    std::uniform_int_distribution<long long> small(1, 12), signedv(-12, 12),
        nv(2, 8);
    int tested = 0;
    while (tested < 200) {
        IntersectionTable t;
        t.L2 = small(rng);
        t.H2 = small(rng);
        t.LH = small(rng);
        t.LK = signedv(rng);
        t.HK = signedv(rng);
        t.chiO = signedv(rng);
        t.n = nv(rng);
        if (!t.valid()) continue;
        ++tested;
        for (long long k = -4; k <= 4; ++k)
            for (bool dual : {true, false}) {
                CAPTURE(t.L2);
                CAPTURE(t.LH);
                CAPTURE(t.H2);
                CAPTURE(t.HK);
                CAPTURE(t.n);
                CAPTURE(k);
                CHECK(check_prop52(t, k, dual) == check_prop52_gh(t, k, dual));
            }
    }
}

TEST_CASE("the two polarization conditions never hold simultaneously") {
    IntersectionTable t;
    t.L2 = 2;
    t.LK = 0;
    t.chiO = 1;
    for (t.n = 2; t.n <= 6; ++t.n)
        for (t.LH = 1; t.LH <= 10; ++t.LH)
            for (t.H2 = 1; t.H2 <= 10; ++t.H2)
                for (t.HK = -10; t.HK <= 10; ++t.HK) {
                    if (!t.valid()) continue;
                    for (long long k = -10; k <= 10; ++k) {
                        const bool both =
                            check_prop52(t, k, true) == Prop52Verdict::Holds &&
                            check_prop52(t, k, false) == Prop52Verdict::Holds;
                        CHECK_FALSE(both);
                    }
                }
}

TEST_CASE("the quadric obstruction 2kL = 3H + K") {
    const auto q = VarietyModel::quadric();
    CHECK(check_dual_ulrich_obstruction(BundleClass(q, 1, 4), BundleClass(q, 2, 6), 2));
    CHECK_FALSE(
        check_dual_ulrich_obstruction(BundleClass(q, 1, 1), BundleClass(q, 1, 1), 1));
    CHECK_FALSE(
        check_dual_ulrich_obstruction(BundleClass(q, 1, 4), BundleClass(q, 2, 6), 3));
}

TEST_CASE("the P^1 x P^1 example system is incompatible") {
    const auto cfg = default_quadric_example_ranges();
    const auto res = example_p1xp1_search(cfg);
    CHECK(res.solutions.empty());

    // brute-force oracle over a smaller window must reproduce the counts
    SearchConfig small = cfg;
    small.bideg = {1, 10};
    small.k = {-5, 5};
    const auto got = example_p1xp1_search(small);
    long long c1 = 0, c2 = 0, chi = 0;
    for (long long a = 1; a <= 10; ++a)
        for (long long b = 1; b <= 10; ++b)
            for (long long k = -5; k <= 5; ++k) {
                if (9 * a * b == (3 * k - 1) * (a + b)) ++c1;
                if (6 * a * b == (3 * k + 1) * (k - 1)) ++c2;
                if ((3 * k - 1) * (a + b) == 3 * a * b + 3 * k * k - 2 * k - 4) ++chi;
            }
    CHECK(got.c1_count == c1);
    CHECK(got.c2_count == c2);
    CHECK(got.chi_count == chi);
    CHECK(got.solutions.empty());
}

TEST_CASE("emptiness of linear systems") {
    const auto p1 = VarietyModel::p1();
    const auto p2 = VarietyModel::pn(2);
    const auto q = VarietyModel::quadric();
    CHECK(emptiness_check(p2, BundleClass(p2, -1)));
    CHECK_FALSE(emptiness_check(p1, BundleClass(p1, 0)));
    CHECK(emptiness_check(q, BundleClass(q, -1, 3)));
    CHECK_FALSE(emptiness_check(q, BundleClass(q, 0, 0)));
}

TEST_CASE("default ranges match the documented reproduction grids") {
    const auto c = default_curve_ranges();
    CHECK(c.k.lo == -5);
    CHECK(c.k.hi == 8);
    CHECK(c.a.hi == 12);
    CHECK(c.n.hi == 15);
    CHECK(c.m.hi == 30);
    CHECK(c.g.hi == 15);
    const auto s = default_surface_ranges();
    CHECK(s.n.lo == 2);
    CHECK(s.n.hi == 20);
    CHECK(s.L2.hi == 30);
    CHECK(s.k.lo == -3);
    CHECK(s.k.hi == 6);
    CHECK(s.a.hi == 10);
    const auto qr = default_quadric_example_ranges();
    CHECK(qr.bideg.lo == 1);
    CHECK(qr.bideg.hi == 50);
    CHECK(qr.k.lo == -20);
    CHECK(qr.k.hi == 20);
}
