#ifndef ULRICH_ULRICH_CHECK_HPP
#define ULRICH_ULRICH_CHECK_HPP

#include <functional>
#include <vector>

#include "ulrich/cohomology.hpp"
#include "ulrich/model.hpp"

namespace ulrich {

// Direct Ulrich test: E is H-Ulrich iff h^i(E(-pH)) = 0 for all i and
// 1 <= p <= d. The report also carries h^0(E) and rank(E).deg_H(X).
UlrichReport is_ulrich(const VarietyModel& m, const SheafExpr& E, const BundleClass& H);

// h^0(E) = r.m consistency for a verdict-true report; misuse on a
// verdict-false report throws
bool check_h0_equals_rm(const UlrichReport& report);

// Hyperplane-restriction witness: restrict TP^2 (O(2)-Ulrich) to a conic
// section Y, identify the split type of the restriction on P^1 by brute
// force, and re-run the Ulrich test against O(4) = O(2)|_Y.
struct RestrictionWitness {
    std::vector<long long> split_type;   // expected {3, 3}
    bool restriction_is_ulrich = false;  // wrt O(4) on P^1
    bool sum_closure_holds = false;      // Ulrichness of the witness (+) itself
    bool ok() const {
        return split_type == std::vector<long long>{3, 3} && restriction_is_ulrich &&
               sum_closure_holds;
    }
};
RestrictionWitness restriction_witness();

// Recover the splitting type of a bundle on P^1 of the given rank from its
// twisted h^0 function, by exhaustive search over degree multisets.
std::vector<long long> find_split_type(
    long long rank, long long first_chern,
    const std::function<long long(long long)>& h0_of_twist);

}  // namespace ulrich

#endif
