#include "ulrich/riemann_roch.hpp"

#include <stdexcept>

namespace ulrich {

long long chi_curve(long long g, long long deg) {
    if (g < 0) throw std::invalid_argument("chi_curve: genus must be >= 0");
    return deg + 1 - g;
}

long long chi_surface_of(long long chiO, long long D2, long long DK) {
    if ((D2 - DK) % 2 != 0)
        throw std::invalid_argument("chi_surface: D^2 - D.K odd, inconsistent table");
    return chiO + (D2 - DK) / 2;
}

long long sectional_genus_of(long long H2, long long HK) {
    if ((H2 + HK) % 2 != 0)
        throw std::invalid_argument("sectional_genus: H^2 + H.K odd, inconsistent table");
    return 1 + (H2 + HK) / 2;
}

long long sectional_genus(const IntersectionTable& t) {
    return sectional_genus_of(t.H2, t.HK);
}

long long dot(const VarietyModel& m, const BundleClass& D1, const BundleClass& D2) {
    switch (m.kind) {
        case ModelKind::ProjSpace:
            if (m.n != 2) throw std::invalid_argument("dot: surface models only");
            return D1.deg() * D2.deg();
        case ModelKind::QuadricSurface:
            // (a,b).(c,d) = ad + bc on P^1 x P^1
            return D1.a() * D2.b() + D1.b() * D2.a();
        default: throw std::invalid_argument("dot: surface models only");
    }
}

long long self_intersection(const VarietyModel& m, const BundleClass& D) {
    return dot(m, D, D);
}

BundleClass canonical_class(const VarietyModel& m) {
    switch (m.kind) {
        case ModelKind::RationalCurve: return BundleClass(m, -2);
        case ModelKind::ProjSpace: return BundleClass(m, -m.n - 1);
        case ModelKind::QuadricSurface: return BundleClass(m, -2, -2);
        default: throw std::invalid_argument("canonical_class: abstract model");
    }
}

long long chi_rr(const VarietyModel& m, const BundleClass& D) {
    switch (m.kind) {
        case ModelKind::RationalCurve: return chi_curve(0, D.deg());
        case ModelKind::AbstractCurve: return chi_curve(m.genus, D.deg());
        case ModelKind::ProjSpace:
            if (m.n != 2) throw std::invalid_argument("chi_rr: curves and surfaces only");
            return chi_surface_of(1, self_intersection(m, D),
                                  dot(m, D, canonical_class(m)));
        case ModelKind::QuadricSurface:
            return chi_surface_of(1, self_intersection(m, D),
                                  dot(m, D, canonical_class(m)));
        default: throw std::invalid_argument("chi_rr: abstract surface needs explicit D^2, D.K");
    }
}

long long sectional_genus(const VarietyModel& m, const BundleClass& H) {
    return sectional_genus_of(self_intersection(m, H), dot(m, H, canonical_class(m)));
}

long long degree_under(const VarietyModel& m, const BundleClass& H) {
    switch (m.kind) {
        case ModelKind::RationalCurve:
            if (H.deg() < 1) throw std::invalid_argument("degree_under: H not ample");
            return H.deg();
        case ModelKind::AbstractCurve:
            if (H.deg() < 1) throw std::invalid_argument("degree_under: H not ample");
            return H.deg();
        case ModelKind::ProjSpace: {
            if (H.deg() < 1) throw std::invalid_argument("degree_under: H not ample");
            long long d = 1;
            for (int i = 0; i < m.n; ++i) d *= H.deg();
            return d;
        }
        case ModelKind::QuadricSurface:
            if (H.a() < 1 || H.b() < 1)
                throw std::invalid_argument("degree_under: H not ample");
            return 2 * H.a() * H.b();
        case ModelKind::AbstractSurface: return m.table.H2;
    }
    throw std::logic_error("unreachable");
}

}  // namespace ulrich
