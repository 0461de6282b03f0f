#ifndef ULRICH_MODEL_HPP
#define ULRICH_MODEL_HPP

#include <array>
#include <cstdint>
#include <tuple>
#include <stdexcept>
#include <string>
#include <vector>

namespace ulrich {

// Numeric intersection data for an abstract polarized surface (L, H ample,
// n = dim V - 1 of the embedding subspace).
struct IntersectionTable {
    long long L2 = 0;    // L.L
    long long LK = 0;    // L.K_X
    long long H2 = 0;    // H.H
    long long LH = 0;    // L.H
    long long HK = 0;    // H.K_X
    long long chiO = 1;  // chi(O_X)
    long long n = 2;     // dim V - 1

    // L, H ample; adjunction forces D^2 + D.K even for D in {L, H};
    // a non-degenerate surface needs n >= 2.
    bool valid() const {
        return L2 > 0 && H2 > 0 && LH > 0 && (L2 + LK) % 2 == 0 &&
               (H2 + HK) % 2 == 0 && n >= 2;
    }
};

enum class ModelKind {
    RationalCurve,   // abstract P^1
    ProjSpace,       // P^n
    QuadricSurface,  // P^1 x P^1
    AbstractCurve,   // only a genus
    AbstractSurface  // only an intersection table
};

struct VarietyModel {
    ModelKind kind = ModelKind::RationalCurve;
    int n = 1;                  // ProjSpace dimension
    long long genus = 0;        // AbstractCurve
    IntersectionTable table{};  // AbstractSurface

    static VarietyModel p1() { return {ModelKind::RationalCurve, 1, 0, {}}; }
    static VarietyModel pn(int n) {
        if (n < 1) throw std::invalid_argument("ProjSpace needs n >= 1");
        return {ModelKind::ProjSpace, n, 0, {}};
    }
    static VarietyModel quadric() { return {ModelKind::QuadricSurface, 2, 0, {}}; }
    static VarietyModel abstract_curve(long long g) {
        if (g < 0) throw std::invalid_argument("genus must be >= 0");
        return {ModelKind::AbstractCurve, 1, g, {}};
    }
    static VarietyModel abstract_surface(const IntersectionTable& t) {
        if (!t.valid()) throw std::invalid_argument("invalid intersection table");
        VarietyModel m{ModelKind::AbstractSurface, 2, 0, t};
        return m;
    }

    int dim() const {
        switch (kind) {
            case ModelKind::RationalCurve:
            case ModelKind::AbstractCurve: return 1;
            case ModelKind::ProjSpace: return n;
            case ModelKind::QuadricSurface:
            case ModelKind::AbstractSurface: return 2;
        }
        return 0;
    }

    bool concrete() const {
        return kind == ModelKind::RationalCurve || kind == ModelKind::ProjSpace ||
               kind == ModelKind::QuadricSurface;
    }

    // number of integer components of a line-bundle class on this model
    int class_components() const {
        return kind == ModelKind::QuadricSurface ? 2 : 1;
    }

    bool operator==(const VarietyModel& o) const {
        return kind == o.kind && n == o.n && genus == o.genus;
    }
};

// A line-bundle class: a degree on P^1/P^n/abstract curves, a bidegree
// (a,b) = aC1 + bC2 on the quadric. Tagged with its model kind so that
// classes from different models never mix.
struct BundleClass {
    ModelKind kind = ModelKind::RationalCurve;
    std::array<long long, 2> c{0, 0};
    int ncomp = 1;

    BundleClass() = default;
    BundleClass(const VarietyModel& m, long long d) : kind(m.kind), c{d, 0}, ncomp(1) {
        if (m.class_components() != 1)
            throw std::invalid_argument("model needs a bidegree class");
    }
    BundleClass(const VarietyModel& m, long long a, long long b)
        : kind(m.kind), c{a, b}, ncomp(2) {
        if (m.class_components() != 2)
            throw std::invalid_argument("model needs a single-degree class");
    }

    long long deg() const { return c[0]; }
    long long a() const { return c[0]; }
    long long b() const { return c[1]; }

    bool operator==(const BundleClass& o) const {
        return kind == o.kind && ncomp == o.ncomp && c == o.c;
    }
    bool operator<(const BundleClass& o) const { return c < o.c; }

    std::string str() const {
        if (ncomp == 1) return std::to_string(c[0]);
        return std::to_string(c[0]) + "," + std::to_string(c[1]);
    }
};

// tensor of line bundles = addition of classes
inline BundleClass tensor(const BundleClass& c1, const BundleClass& c2) {
    if (c1.kind != c2.kind || c1.ncomp != c2.ncomp)
        throw std::invalid_argument("tensor: classes live on different models");
    BundleClass r = c1;
    r.c[0] += c2.c[0];
    r.c[1] += c2.c[1];
    return r;
}

inline BundleClass scale(long long s, const BundleClass& c) {
    BundleClass r = c;
    r.c[0] *= s;
    r.c[1] *= s;
    return r;
}

inline BundleClass negate(const BundleClass& c) { return scale(-1, c); }

// very-ampleness on the concrete models
inline bool very_ample(const BundleClass& c, const VarietyModel& m) {
    if (!m.concrete())
        throw std::invalid_argument("very_ample: undecidable on abstract model");
    switch (m.kind) {
        case ModelKind::RationalCurve: return c.deg() >= 1;
        case ModelKind::ProjSpace: return c.deg() >= 1;
        case ModelKind::QuadricSurface: return c.a() >= 1 && c.b() >= 1;
        default: return false;
    }
}

// Symbolic sheaf expression: line bundle, syzygy twist M_{L}(t), dual
// syzygy twist M^v_{L}(t), or a finite direct sum. V is always the
// complete system H^0(L).
struct SheafExpr {
    enum class Kind { Line, Syzygy, DualSyzygy, Sum };

    Kind kind = Kind::Line;
    BundleClass cls;    // Line: the class; Syzygy/DualSyzygy: L
    BundleClass twist;  // Syzygy/DualSyzygy only
    std::vector<SheafExpr> parts;

    static SheafExpr line(const BundleClass& c) {
        SheafExpr e;
        e.kind = Kind::Line;
        e.cls = c;
        return e;
    }
    static SheafExpr syzygy(const BundleClass& L, const BundleClass& t) {
        SheafExpr e;
        e.kind = Kind::Syzygy;
        e.cls = L;
        e.twist = t;
        return e;
    }
    static SheafExpr dual_syzygy(const BundleClass& L, const BundleClass& t) {
        SheafExpr e;
        e.kind = Kind::DualSyzygy;
        e.cls = L;
        e.twist = t;
        return e;
    }
    static SheafExpr sum(std::vector<SheafExpr> ps) {
        SheafExpr e;
        e.kind = Kind::Sum;
        e.parts = std::move(ps);
        return e;
    }

    std::string str() const;
};

// E (x) O(c)
SheafExpr twist_by(const SheafExpr& e, const BundleClass& c);

// rank: 1 for a line bundle, h^0(L) - 1 for (dual) syzygy, additive on sums
long long rank_of(const SheafExpr& e, const VarietyModel& m);

struct CohomologyVector {
    std::vector<long long> h;  // h^0 .. h^d

    long long euler() const {
        long long s = 0, sign = 1;
        for (long long v : h) {
            s += sign * v;
            sign = -sign;
        }
        return s;
    }
    bool all_zero() const {
        for (long long v : h)
            if (v != 0) return false;
        return true;
    }
    bool operator==(const CohomologyVector& o) const { return h == o.h; }

    std::string str() const;
};

struct IntRange {
    long long lo = 0, hi = -1;  // empty by default
    bool empty() const { return lo > hi; }
    bool contains(long long v) const { return lo <= v && v <= hi; }
};

// Inclusive parameter ranges for the classification sweeps.
struct SearchConfig {
    IntRange k, a, n, m, g;
    IntRange bideg;  // bidegree components on the quadric
    IntRange L2;     // L^2 values for the abstract surface solver

    void validate() const {
        if (a.lo < 1) throw std::invalid_argument("a-range must be positive");
    }
};

// Verdict of the direct Ulrich test: the full h^i(E(-pH)) table plus the
// h^0(E) = r.deg consistency data.
struct UlrichReport {
    bool verdict = false;
    // table[p-1][i] = h^i(E(-pH)), p = 1..d, i = 0..d
    std::vector<std::vector<long long>> table;
    long long h0E = 0;
    long long rank_times_degree = 0;
    std::vector<std::string> notes;
};

enum class Family {
    CurveConic,     // P^1, L = O(2), a = k+2
    CurveLine,      // P^1, L = O(1), a = k+3
    SurfaceP2,      // P^2, k = 0, a = 2 (TP^2 wrt O(2))
    NormalRational, // P^1, L = O(n), a = k-1 (syzygy side)
    Unexpected
};

const char* family_name(Family f);

struct ClassificationSolution {
    Family family = Family::Unexpected;
    // curve tuples: (n, m, g, k, a); surface tuples: (n, L2, k, a) with g = -1
    long long n = 0, m = 0, g = 0, k = 0, a = 0;

    auto key() const { return std::tie(n, m, g, k, a); }
    bool operator<(const ClassificationSolution& o) const { return key() < o.key(); }
    bool operator==(const ClassificationSolution& o) const {
        return family == o.family && key() == o.key();
    }
};

}  // namespace ulrich

#endif
