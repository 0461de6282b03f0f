#include "ulrich/ulrich_check.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "ulrich/riemann_roch.hpp"

namespace ulrich {

UlrichReport is_ulrich(const VarietyModel& m, const SheafExpr& E, const BundleClass& H) {
    if (!m.concrete())
        throw std::invalid_argument(
            "is_ulrich: abstract model; use the classification solvers instead");
    if (!very_ample(H, m)) throw std::invalid_argument("is_ulrich: H must be very ample");

    const int d = m.dim();
    UlrichReport rep;
    rep.verdict = true;
    for (int p = 1; p <= d; ++p) {
        const auto v = cohomology(m, twist_by(E, scale(-p, H)));
        rep.table.push_back(v.h);
        for (long long hv : v.h)
            if (hv != 0) rep.verdict = false;
    }
    rep.h0E = cohomology(m, E).h[0];
    rep.rank_times_degree = rank_of(E, m) * degree_under(m, H);
    if (rep.verdict && rep.h0E != rep.rank_times_degree)
        rep.notes.push_back("h0(E) != rank * deg for an Ulrich bundle");
    return rep;
}

bool check_h0_equals_rm(const UlrichReport& report) {
    if (!report.verdict)
        throw std::invalid_argument("check_h0_equals_rm: report is not verdict-true");
    return report.h0E == report.rank_times_degree;
}

std::vector<long long> find_split_type(
    long long rank, long long first_chern,
    const std::function<long long(long long)>& h0_of_twist) {
    const long long B = std::abs(first_chern) + rank + 4;

    std::vector<long long> degs(rank, 0);
    std::vector<long long> best;

    // nondecreasing degree tuples with the given first Chern class
    std::function<bool(long long, long long, long long)> rec =
        [&](long long pos, long long lo, long long remaining) -> bool {
        if (pos == rank) {
            if (remaining != 0) return false;
            for (long long t = -B - 2; t <= B + 2; ++t) {
                long long h0 = 0;
                for (long long dd : degs) h0 += std::max(dd + t + 1, 0LL);
                if (h0 != h0_of_twist(t)) return false;
            }
            best = degs;
            return true;
        }
        for (long long dd = lo; dd <= B; ++dd) {
            if (remaining - dd < (rank - pos - 1) * dd) break;  // can't stay nondecreasing
            degs[static_cast<size_t>(pos)] = dd;
            if (rec(pos + 1, dd, remaining - dd)) return true;
        }
        return false;
    };
    if (!rec(0, -B, first_chern))
        throw std::runtime_error("find_split_type: no split bundle matches");
    return best;
}

RestrictionWitness restriction_witness() {
    // TP^2 restricted to a conic Y: the Euler sequence restricts to
    // 0 -> O -> O(2)^3 -> TP^2|_Y -> 0 on Y = P^1, so TP^2|_Y is the dual
    // syzygy bundle of O_{P^1}(2) twisted by O(2).
    const auto p1 = VarietyModel::p1();
    const BundleClass L2(p1, 2);
    const SheafExpr restricted = SheafExpr::dual_syzygy(L2, BundleClass(p1, 2));

    RestrictionWitness w;
    const long long r = rank_of(restricted, p1);
    const long long c1 = L2.deg() + r * 2;  // deg Mv = deg L, then twist by O(2)
    w.split_type = find_split_type(r, c1, [&](long long t) {
        return cohomology(p1, twist_by(restricted, BundleClass(p1, t))).h[0];
    });

    const BundleClass H4(p1, 4);  // O(2)|_Y on the conic
    w.restriction_is_ulrich = is_ulrich(p1, restricted, H4).verdict;
    w.sum_closure_holds =
        is_ulrich(p1, SheafExpr::sum({restricted, restricted}), H4).verdict;
    return w;
}

}  // namespace ulrich
