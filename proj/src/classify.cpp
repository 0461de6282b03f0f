#include "ulrich/classify.hpp"

#include <algorithm>

#include "ulrich/cohomology.hpp"

namespace ulrich {

namespace {

Family curve_dual_family(long long n, long long m, long long g, long long k, long long a) {
    if (n == 2 && m == 2 && g == 0 && a == k + 2) return Family::CurveConic;
    if (n == 1 && m == 1 && g == 0 && a == k + 3) return Family::CurveLine;
    return Family::Unexpected;
}

}  // namespace

std::vector<ClassificationSolution> solve_curve_dualM(const SearchConfig& cfg) {
    cfg.validate();
    std::vector<ClassificationSolution> out;
    for (long long n = std::max(cfg.n.lo, 1LL); n <= cfg.n.hi; ++n)
        for (long long m = std::max(cfg.m.lo, 1LL); m <= cfg.m.hi; ++m)
            for (long long g = std::max(cfg.g.lo, 0LL); g <= cfg.g.hi; ++g)
                for (long long k = cfg.k.lo; k <= cfg.k.hi; ++k)
                    for (long long a = cfg.a.lo; a <= cfg.a.hi; ++a) {
                        if (m * (n * (a - k - 1) - 1) != n * (1 - g)) continue;
                        // n = 1 means h^0(L) = 2, so X embeds in P^1: genus 0 only
                        if (n == 1 && g != 0) continue;
                        const bool in_range = 0 <= k + 1 && k + 1 < a;
                        const bool exceptional = n == 1 && k == -2 && a == 1;
                        if (!in_range && !exceptional) continue;
                        out.push_back({curve_dual_family(n, m, g, k, a), n, m, g, k, a});
                    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ClassificationSolution> solve_curve_M(const SearchConfig& cfg) {
    cfg.validate();
    std::vector<ClassificationSolution> out;
    for (long long k = cfg.k.lo; k <= cfg.k.hi; ++k) {
        if (k - 1 <= 0) continue;  // constraint: 0 < k-1 <= a
        for (long long a = cfg.a.lo; a <= cfg.a.hi; ++a) {
            if (a < k - 1) continue;
            if (a == k - 1) {
                // the normal-rational-curve family: X = P^1, L = O(n)
                for (long long n = std::max(cfg.n.lo, 1LL); n <= cfg.n.hi; ++n)
                    if (cfg.m.contains(n) && cfg.g.contains(0))
                        out.push_back({Family::NormalRational, n, n, 0, k, a});
                continue;
            }
            if (a == k) continue;  // h^1 obstruction, no solutions
            // a > k: chi equation; expected empty
            for (long long n = std::max(cfg.n.lo, 1LL); n <= cfg.n.hi; ++n)
                for (long long m = std::max(cfg.m.lo, 1LL); m <= cfg.m.hi; ++m)
                    for (long long g = std::max(cfg.g.lo, 0LL); g <= cfg.g.hi; ++g)
                        if (m * (n * (a + 1 - k) + 1) == n * (1 - g))
                            out.push_back({Family::Unexpected, n, m, g, k, a});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SurfaceSolveResult solve_surface_dualM(const SearchConfig& cfg, bool apply_l2_constraint) {
    cfg.validate();
    SurfaceSolveResult res;
    for (long long n = std::max(cfg.n.lo, 2LL); n <= cfg.n.hi; ++n)
        for (long long L2 = std::max(cfg.L2.lo, 1LL); L2 <= cfg.L2.hi; ++L2)
            for (long long k = cfg.k.lo; k <= cfg.k.hi; ++k)
                for (long long a = cfg.a.lo; a <= cfg.a.hi; ++a) {
                    if (!(0 <= k + 1 && k + 1 < a)) continue;
                    if (n != (n * (a - k - 1) - 1) * a * L2) continue;
                    const bool l2_ok = (L2 == 1) == (n == 2);
                    ClassificationSolution s;
                    s.family = (n == 2 && L2 == 1 && k == 0 && a == 2)
                                   ? Family::SurfaceP2
                                   : Family::Unexpected;
                    s.n = n;
                    s.m = L2;
                    s.g = -1;
                    s.k = k;
                    s.a = a;
                    if (l2_ok)
                        res.solutions.push_back(s);
                    else if (!apply_l2_constraint)
                        res.raw_extras.push_back(s);
                }
    std::sort(res.solutions.begin(), res.solutions.end());
    std::sort(res.raw_extras.begin(), res.raw_extras.end());
    return res;
}

const char* prop52_verdict_name(Prop52Verdict v) {
    switch (v) {
        case Prop52Verdict::Holds: return "holds";
        case Prop52Verdict::Fails: return "fails";
        case Prop52Verdict::NonIntegral: return "non_integral";
    }
    return "fails";
}

Prop52Verdict check_prop52(const IntersectionTable& t, long long k, bool dual_side) {
    // H.K = 2(k+-1) L.H - 3H^2 +- 2 L.H / n, cleared by n
    const long long sign = dual_side ? 1 : -1;
    const long long lhs = t.n * t.HK;
    const long long rhs =
        2 * (k + sign) * t.n * t.LH - 3 * t.n * t.H2 + sign * 2 * t.LH;
    if (lhs == rhs) return Prop52Verdict::Holds;
    if ((2 * t.LH) % t.n != 0) return Prop52Verdict::NonIntegral;
    return Prop52Verdict::Fails;
}

Prop52Verdict check_prop52_gh(const IntersectionTable& t, long long k, bool dual_side) {
    // g_H - 1 = (k+-1) L.H - H^2 +- L.H / n, using 2(g_H - 1) = H^2 + H.K
    const long long sign = dual_side ? 1 : -1;
    const long long lhs = t.n * (t.H2 + t.HK);
    const long long rhs =
        2 * ((k + sign) * t.n * t.LH - t.n * t.H2) + sign * 2 * t.LH;
    if (lhs == rhs) return Prop52Verdict::Holds;
    if ((2 * t.LH) % t.n != 0) return Prop52Verdict::NonIntegral;
    return Prop52Verdict::Fails;
}

bool check_dual_ulrich_obstruction(const BundleClass& L, const BundleClass& H,
                                   long long k) {
    if (L.kind != ModelKind::QuadricSurface || H.kind != ModelKind::QuadricSurface)
        throw std::invalid_argument("check_dual_ulrich_obstruction: quadric classes only");
    // 2k L = 3H + K_X with K_X of class (-2,-2)
    return 2 * k * L.a() == 3 * H.a() - 2 && 2 * k * L.b() == 3 * H.b() - 2;
}

QuadricExampleResult example_p1xp1_search(const SearchConfig& cfg) {
    QuadricExampleResult res;
    for (long long a = std::max(cfg.bideg.lo, 1LL); a <= cfg.bideg.hi; ++a)
        for (long long b = std::max(cfg.bideg.lo, 1LL); b <= cfg.bideg.hi; ++b)
            for (long long k = cfg.k.lo; k <= cfg.k.hi; ++k) {
                const bool c1 = 9 * a * b == (3 * k - 1) * (a + b);
                const bool c2 = 6 * a * b == (3 * k + 1) * (k - 1);
                const bool chi =
                    (3 * k - 1) * (a + b) == 3 * a * b + 3 * k * k - 2 * k - 4;
                res.c1_count += c1;
                res.c2_count += c2;
                res.chi_count += chi;
                if (c1 && c2 && chi) res.solutions.push_back({a, b, k});
            }
    return res;
}

bool emptiness_check(const VarietyModel& m, const BundleClass& D) {
    if (!m.concrete()) throw std::invalid_argument("emptiness_check: abstract model");
    return h0_line(m, D) == 0;
}

SearchConfig default_curve_ranges() {
    SearchConfig c;
    c.k = {-5, 8};
    c.a = {1, 12};
    c.n = {1, 15};
    c.m = {1, 30};
    c.g = {0, 15};
    return c;
}

SearchConfig default_surface_ranges() {
    SearchConfig c;
    c.n = {2, 20};
    c.L2 = {1, 30};
    c.k = {-3, 6};
    c.a = {1, 10};
    return c;
}

SearchConfig default_quadric_example_ranges() {
    SearchConfig c;
    c.bideg = {1, 50};
    c.k = {-20, 20};
    c.a = {1, 1};
    return c;
}

}  // namespace ulrich
