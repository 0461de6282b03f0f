#ifndef ULRICH_COHOMOLOGY_HPP
#define ULRICH_COHOMOLOGY_HPP

#include <vector>

#include "ulrich/intmat.hpp"
#include "ulrich/model.hpp"

namespace ulrich {

// A cohomology basis monomial, stored as the full exponent vector:
// n+1 entries on P^n, (2|2) entries on the quadric. H^0-type factors have
// all exponents >= 0, top-degree factors all exponents <= -1 (the Cech
// description of H^n(P^n, O(d))).
using Mono = std::vector<int>;

// closed-form cohomology of a line bundle on a concrete model
CohomologyVector coh_line(const VarietyModel& m, const BundleClass& c);

long long h_line(const VarietyModel& m, const BundleClass& c, int level);
inline long long h0_line(const VarietyModel& m, const BundleClass& c) {
    return h_line(m, c, 0);
}

// Euler characteristic of O(c), computed by a closed polynomial formula
// independent of the cohomology bases (used as a cross-check).
long long chi_line(const VarietyModel& m, const BundleClass& c);

// deterministic (lexicographic) monomial basis of H^level(O(c))
std::vector<Mono> coh_basis(const VarietyModel& m, const BundleClass& c, int level);

// rank of the cup-product action H^0(c1) (x) H^level(c2) -> H^level(c1+c2)
RankedMap action_rank(const VarietyModel& m, const BundleClass& c1,
                      const BundleClass& c2, int level);

// multiplication map on global sections
RankedMap mult_rank(const VarietyModel& m, const BundleClass& c1,
                    const BundleClass& c2);

// H^1-level action H^0(c1) (x) H^1(b) -> H^1(c1+b), models of dimension <= 2
RankedMap contract_rank(const VarietyModel& m, const BundleClass& c1,
                        const BundleClass& b);

// rank of the co-evaluation H^level(c2) -> V* (x) H^level(L+c2), V = H^0(L)
RankedMap coaction_rank(const VarietyModel& m, const BundleClass& L,
                        const BundleClass& c2, int level);

// exact cohomology of M_{L}(t) and M^v_{L}(t) by dimension chasing the
// twisted defining sequences with exactly computed connecting ranks
CohomologyVector coh_syzygy(const VarietyModel& m, const BundleClass& L,
                            const BundleClass& t);
CohomologyVector coh_dual_syzygy(const VarietyModel& m, const BundleClass& L,
                                 const BundleClass& t);

// full dispatcher over the sheaf grammar
CohomologyVector cohomology(const VarietyModel& m, const SheafExpr& e);

// Euler characteristic of a sheaf expression from Riemann-Roch additivity,
// never from the computed cohomology vector
long long chi_expr(const VarietyModel& m, const SheafExpr& e);

// splitting type on P^1, sorted ascending
std::vector<long long> split_type_p1(const VarietyModel& m, const SheafExpr& e);

// cohomology of a split bundle (+) O(d_i) on P^1
CohomologyVector coh_of_split(const std::vector<long long>& degs);

}  // namespace ulrich

#endif
