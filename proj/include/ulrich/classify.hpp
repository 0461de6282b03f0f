#ifndef ULRICH_CLASSIFY_HPP
#define ULRICH_CLASSIFY_HPP

#include <array>
#include <vector>

#include "ulrich/model.hpp"

namespace ulrich {

// Exhaustive integer solvers for the numerical Ulrich conditions. Curve
// solutions are tuples (n, m, g, k, a); surface solutions are (n, L2, k, a)
// with L2 stored in the m slot and g = -1.

// dual-syzygy side on curves: m(n(a-k-1)-1) = n(1-g), under 0 <= k+1 < a
// (the exceptional tuple n=1, k=-2, a=1 is admitted)
std::vector<ClassificationSolution> solve_curve_dualM(const SearchConfig& cfg);

// syzygy side on curves: the a = k-1 family plus the (empty) a > k equation
// m(n(a+1-k)+1) = n(1-g), under 0 < k-1 <= a
std::vector<ClassificationSolution> solve_curve_M(const SearchConfig& cfg);

struct SurfaceSolveResult {
    std::vector<ClassificationSolution> solutions;
    // tuples that survive only because the "L^2 = 1 iff n = 2" filter was
    // disabled (diagnostic mode)
    std::vector<ClassificationSolution> raw_extras;
};

// dual-syzygy side on surfaces: n = (n(a-k-1)-1).a.L^2
SurfaceSolveResult solve_surface_dualM(const SearchConfig& cfg,
                                       bool apply_l2_constraint = true);

enum class Prop52Verdict { Holds, Fails, NonIntegral };
const char* prop52_verdict_name(Prop52Verdict v);

// necessary condition on (L, H, K_X) for H-Ulrichness of the twisted dual
// syzygy (dual_side = true) or twisted syzygy bundle, tested after clearing
// the 1/n denominator; NonIntegral when n does not divide 2 L.H, so the
// condition cannot hold for any k
Prop52Verdict check_prop52(const IntersectionTable& t, long long k, bool dual_side);

// equivalent sectional-genus form of the same condition (cross-check)
Prop52Verdict check_prop52_gh(const IntersectionTable& t, long long k, bool dual_side);

// Ulrich-dual obstruction on the quadric: 2k L = 3H + K_X rules out
// H-Ulrichness of Mv (x) L^{k+1}
bool check_dual_ulrich_obstruction(const BundleClass& L, const BundleClass& H,
                                   long long k);

struct QuadricExampleResult {
    std::vector<std::array<long long, 3>> solutions;  // (a, b, k) meeting all three
    long long c1_count = 0;   // 9ab = (3k-1)(a+b)
    long long c2_count = 0;   // 6ab = (3k+1)(k-1)
    long long chi_count = 0;  // (3k-1)(a+b) = 3ab + 3k^2 - 2k - 4
};

// search for L = O(1,1) syzygy twists on P^1 x P^1 satisfying the Chern
// conditions together with the chi condition; expected empty
QuadricExampleResult example_p1xp1_search(const SearchConfig& cfg);

// |D| = empty, i.e. h^0(O(D)) = 0, on a concrete model
bool emptiness_check(const VarietyModel& m, const BundleClass& D);

// default search ranges (the documented reproduction grids)
SearchConfig default_curve_ranges();
SearchConfig default_surface_ranges();
SearchConfig default_quadric_example_ranges();

}  // namespace ulrich

#endif
