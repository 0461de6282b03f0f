#ifndef ULRICH_SWEEP_HPP
#define ULRICH_SWEEP_HPP

#include <string>
#include <vector>

#include "ulrich/model.hpp"

namespace ulrich {

// Desk-scale grid for the exact-engine sweeps over concrete models.
struct SweepBounds {
    long long p1_m_max = 5;      // L = O(m) on P^1
    long long p2_deg_max = 2;    // L = O(deg) on P^2
    long long p3_deg_max = 2;    // L = O(deg) on P^3
    long long quad_comp_max = 2; // L = O(a,b) on the quadric
    long long k_lo = -4, k_hi = 5;
    long long a_lo = 1, a_hi = 8;
};

struct SweepResult {
    long long points = 0;
    std::vector<std::string> exclusivity_mismatches;
    std::vector<std::string> h0_law_violations;
    std::vector<std::string> chi_mismatches;
    std::vector<std::string> split_mismatches;

    bool ok() const {
        return exclusivity_mismatches.empty() && h0_law_violations.empty() &&
               chi_mismatches.empty() && split_mismatches.empty();
    }
};

// the classified families, as membership predicates
bool expected_dual_ulrich(const VarietyModel& m, const BundleClass& L, long long k,
                          long long a);
bool expected_syz_ulrich(const VarietyModel& m, const BundleClass& L, long long k,
                         long long a);

// Runs the exact Ulrich test for Mv (x) L^{k+1} and M (x) L^{k-1} against
// L^a over the whole grid, checking the verdicts against the classified
// families, the h^0 nonvanishing laws, Euler-characteristic consistency,
// and (on P^1) agreement with the splitting-type computation.
SweepResult run_exclusivity_sweep(const SweepBounds& b);

}  // namespace ulrich

#endif
