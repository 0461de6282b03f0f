#ifndef ULRICH_RIEMANN_ROCH_HPP
#define ULRICH_RIEMANN_ROCH_HPP

#include "ulrich/model.hpp"

namespace ulrich {

// chi(O(D)) = deg D + 1 - g on a curve of genus g
long long chi_curve(long long g, long long deg);

// chi(O(D)) = chi(O_X) + (D^2 - D.K)/2 on a surface; throws on parity
// violation (adjunction forces D^2 - D.K even)
long long chi_surface_of(long long chiO, long long D2, long long DK);

// sectional genus: 1 + (H^2 + H.K)/2
long long sectional_genus_of(long long H2, long long HK);
long long sectional_genus(const IntersectionTable& t);  // of H in the table

// intersection pairing and canonical class on the concrete models
long long self_intersection(const VarietyModel& m, const BundleClass& D);
long long dot(const VarietyModel& m, const BundleClass& D1, const BundleClass& D2);
BundleClass canonical_class(const VarietyModel& m);

// chi of a line-bundle class on a concrete curve/surface model, via
// Riemann-Roch (independent of the cohomology engine)
long long chi_rr(const VarietyModel& m, const BundleClass& D);

// sectional genus of H on a concrete surface model
long long sectional_genus(const VarietyModel& m, const BundleClass& H);

// deg X under the polarization H: H^d in the model's intersection lattice
long long degree_under(const VarietyModel& m, const BundleClass& H);

}  // namespace ulrich

#endif
