#include "ulrich/cohomology.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ulrich {

namespace {

long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// h^level(P^n, O(d))
long long pn_h(int n, long long d, int level) {
    if (level == 0) return d >= 0 ? binom(d + n, n) : 0;
    if (level == n) return d <= -n - 1 ? binom(-d - 1, n) : 0;
    return 0;
}

void compositions(int parts, int total, Mono& cur, std::vector<Mono>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= total; ++e) {
        cur.push_back(e);
        compositions(parts - 1, total - e, cur, out);
        cur.pop_back();
    }
}

// basis of H^level(P^n, O(d)) as exponent vectors of length n+1
std::vector<Mono> pn_basis(int n, long long d, int level) {
    std::vector<Mono> out;
    if (pn_h(n, d, level) == 0) return out;
    Mono cur;
    if (level == 0) {
        compositions(n + 1, static_cast<int>(d), cur, out);
    } else {  // level == n: e_i = -1 - u_i with u_i >= 0
        std::vector<Mono> us;
        compositions(n + 1, static_cast<int>(-d - (n + 1)), cur, us);
        for (auto& u : us) {
            Mono m(u.size());
            for (size_t i = 0; i < u.size(); ++i) m[i] = -1 - u[i];
            out.push_back(m);
        }
    }
    return out;
}

bool factor_is_top(const Mono& m, size_t off) { return m[off] <= -1 && m[off + 1] <= -1; }

}  // namespace

long long h_line(const VarietyModel& m, const BundleClass& c, int level) {
    if (!m.concrete()) throw std::invalid_argument("h_line: no exact engine on abstract model");
    switch (m.kind) {
        case ModelKind::RationalCurve: return pn_h(1, c.deg(), level);
        case ModelKind::ProjSpace: return pn_h(m.n, c.deg(), level);
        case ModelKind::QuadricSurface: {
            long long s = 0;
            for (int p = 0; p <= 1; ++p) {
                const int q = level - p;
                if (q < 0 || q > 1) continue;
                s += pn_h(1, c.a(), p) * pn_h(1, c.b(), q);
            }
            return s;
        }
        default: return 0;
    }
}

CohomologyVector coh_line(const VarietyModel& m, const BundleClass& c) {
    CohomologyVector v;
    for (int i = 0; i <= m.dim(); ++i) v.h.push_back(h_line(m, c, i));
    return v;
}

long long chi_line(const VarietyModel& m, const BundleClass& c) {
    switch (m.kind) {
        case ModelKind::RationalCurve: return c.deg() + 1;
        case ModelKind::ProjSpace: {
            // binom(d+n, n) as a polynomial: product of n consecutive integers
            long long num = 1;
            for (int i = 1; i <= m.n; ++i) num *= c.deg() + i;
            long long den = 1;
            for (int i = 1; i <= m.n; ++i) den *= i;
            return num / den;
        }
        case ModelKind::QuadricSurface: return (c.a() + 1) * (c.b() + 1);
        default: throw std::invalid_argument("chi_line: abstract model");
    }
}

std::vector<Mono> coh_basis(const VarietyModel& m, const BundleClass& c, int level) {
    switch (m.kind) {
        case ModelKind::RationalCurve: return pn_basis(1, c.deg(), level);
        case ModelKind::ProjSpace: return pn_basis(m.n, c.deg(), level);
        case ModelKind::QuadricSurface: {
            std::vector<Mono> out;
            for (int p = 0; p <= 1; ++p) {
                const int q = level - p;
                if (q < 0 || q > 1) continue;
                const auto ba = pn_basis(1, c.a(), p);
                const auto bb = pn_basis(1, c.b(), q);
                for (const auto& x : ba)
                    for (const auto& y : bb) {
                        Mono mm = x;
                        mm.insert(mm.end(), y.begin(), y.end());
                        out.push_back(mm);
                    }
            }
            return out;
        }
        default: throw std::invalid_argument("coh_basis: abstract model");
    }
}

namespace {

// Multiply a cohomology monomial by a section monomial; the product lives
// in the same Kunneth type as the cohomology factor or is a coboundary.
bool cup_product(const VarietyModel& m, const Mono& sec, const Mono& coh, Mono& out) {
    out.resize(coh.size());
    for (size_t i = 0; i < coh.size(); ++i) out[i] = sec[i] + coh[i];
    const size_t nf = m.kind == ModelKind::QuadricSurface ? 2 : 1;
    const size_t fl = coh.size() / nf;
    for (size_t f = 0; f < nf; ++f) {
        const size_t off = f * fl;
        if (factor_is_top(coh, off)) {
            for (size_t i = off; i < off + fl; ++i)
                if (out[i] > -1) return false;
        }
        // H^0-type factors stay valid automatically
    }
    return true;
}

std::map<Mono, int> index_of(const std::vector<Mono>& basis) {
    std::map<Mono, int> idx;
    for (size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
    return idx;
}

}  // namespace

RankedMap action_rank(const VarietyModel& m, const BundleClass& c1,
                      const BundleClass& c2, int level) {
    const auto b1 = coh_basis(m, c1, 0);
    const auto b2 = coh_basis(m, c2, level);
    const auto b3 = coh_basis(m, tensor(c1, c2), level);
    assert(static_cast<long long>(b1.size()) == h_line(m, c1, 0));
    assert(static_cast<long long>(b2.size()) == h_line(m, c2, level));

    RankedMap r;
    r.domain_dim = static_cast<long long>(b1.size()) * b2.size();
    r.codomain_dim = static_cast<long long>(b3.size());
    if (r.domain_dim == 0 || r.codomain_dim == 0) return r;

    const auto idx = index_of(b3);
    IntMatrix mat(static_cast<int>(b1.size() * b2.size()), static_cast<int>(b3.size()));
    Mono prod;
    for (size_t i = 0; i < b1.size(); ++i)
        for (size_t j = 0; j < b2.size(); ++j)
            if (cup_product(m, b1[i], b2[j], prod))
                mat.add(static_cast<int>(i * b2.size() + j), idx.at(prod), 1);
    r.rank = mat.rank();
    return r;
}

RankedMap mult_rank(const VarietyModel& m, const BundleClass& c1, const BundleClass& c2) {
    return action_rank(m, c1, c2, 0);
}

RankedMap contract_rank(const VarietyModel& m, const BundleClass& c1, const BundleClass& b) {
    if (m.dim() > 2)
        throw std::invalid_argument("contract_rank: model dimension must be <= 2");
    return action_rank(m, c1, b, 1);
}

RankedMap coaction_rank(const VarietyModel& m, const BundleClass& L,
                        const BundleClass& c2, int level) {
    const auto bv = coh_basis(m, L, 0);
    const auto b2 = coh_basis(m, c2, level);
    const auto b3 = coh_basis(m, tensor(L, c2), level);

    RankedMap r;
    r.domain_dim = static_cast<long long>(b2.size());
    r.codomain_dim = static_cast<long long>(bv.size()) * b3.size();
    if (r.domain_dim == 0 || r.codomain_dim == 0) return r;

    const auto idx = index_of(b3);
    IntMatrix mat(static_cast<int>(b2.size()), static_cast<int>(bv.size() * b3.size()));
    Mono prod;
    for (size_t s = 0; s < b2.size(); ++s)
        for (size_t j = 0; j < bv.size(); ++j)
            if (cup_product(m, bv[j], b2[s], prod))
                mat.add(static_cast<int>(s),
                        static_cast<int>(j * b3.size() + idx.at(prod)), 1);
    r.rank = mat.rank();
    return r;
}

CohomologyVector coh_syzygy(const VarietyModel& m, const BundleClass& L,
                            const BundleClass& t) {
    if (!m.concrete()) throw std::invalid_argument("coh_syzygy: no exact engine on abstract model");
    if (!very_ample(L, m)) throw std::invalid_argument("coh_syzygy: L must be very ample");

    const int d = m.dim();
    const long long np1 = h0_line(m, L);
    const BundleClass Lt = tensor(L, t);

    // long exact sequence of 0 -> M(t) -> V (x) O(t) -> O(L+t) -> 0
    std::vector<long long> A(d + 1), B(d + 1), rk(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        A[i] = np1 * h_line(m, t, i);
        B[i] = h_line(m, Lt, i);
        if (A[i] > 0 && B[i] > 0) rk[i] = action_rank(m, L, t, i).rank;
    }
    CohomologyVector v;
    for (int i = 0; i <= d; ++i) {
        long long hi = A[i] - rk[i];
        if (i > 0) hi += B[i - 1] - rk[i - 1];
        v.h.push_back(hi);
    }
    return v;
}

CohomologyVector coh_dual_syzygy(const VarietyModel& m, const BundleClass& L,
                                 const BundleClass& t) {
    if (!m.concrete())
        throw std::invalid_argument("coh_dual_syzygy: no exact engine on abstract model");
    if (!very_ample(L, m)) throw std::invalid_argument("coh_dual_syzygy: L must be very ample");

    const int d = m.dim();
    const long long np1 = h0_line(m, L);
    const BundleClass tmL = tensor(t, negate(L));

    // long exact sequence of 0 -> O(t-L) -> V (x) O(t) -> Mv(t) -> 0
    std::vector<long long> C(d + 2, 0), A(d + 1), sk(d + 2, 0);
    for (int i = 0; i <= d; ++i) {
        C[i] = h_line(m, tmL, i);
        A[i] = np1 * h_line(m, t, i);
        if (C[i] > 0 && A[i] > 0) sk[i] = coaction_rank(m, L, tmL, i).rank;
    }
    CohomologyVector v;
    for (int i = 0; i <= d; ++i)
        v.h.push_back((A[i] - sk[i]) + (C[i + 1] - sk[i + 1]));
    return v;
}

CohomologyVector cohomology(const VarietyModel& m, const SheafExpr& e) {
    switch (e.kind) {
        case SheafExpr::Kind::Line: return coh_line(m, e.cls);
        case SheafExpr::Kind::Syzygy: return coh_syzygy(m, e.cls, e.twist);
        case SheafExpr::Kind::DualSyzygy: return coh_dual_syzygy(m, e.cls, e.twist);
        case SheafExpr::Kind::Sum: {
            CohomologyVector v;
            v.h.assign(m.dim() + 1, 0);
            for (const auto& p : e.parts) {
                const auto pv = cohomology(m, p);
                for (size_t i = 0; i < v.h.size(); ++i) v.h[i] += pv.h[i];
            }
            return v;
        }
    }
    throw std::logic_error("unreachable");
}

long long chi_expr(const VarietyModel& m, const SheafExpr& e) {
    switch (e.kind) {
        case SheafExpr::Kind::Line: return chi_line(m, e.cls);
        case SheafExpr::Kind::Syzygy:
            return h0_line(m, e.cls) * chi_line(m, e.twist) -
                   chi_line(m, tensor(e.cls, e.twist));
        case SheafExpr::Kind::DualSyzygy:
            return h0_line(m, e.cls) * chi_line(m, e.twist) -
                   chi_line(m, tensor(e.twist, negate(e.cls)));
        case SheafExpr::Kind::Sum: {
            long long s = 0;
            for (const auto& p : e.parts) s += chi_expr(m, p);
            return s;
        }
    }
    throw std::logic_error("unreachable");
}

long long rank_of(const SheafExpr& e, const VarietyModel& m) {
    switch (e.kind) {
        case SheafExpr::Kind::Line: return 1;
        case SheafExpr::Kind::Syzygy:
        case SheafExpr::Kind::DualSyzygy:
            if (!very_ample(e.cls, m))
                throw std::invalid_argument("rank_of: L must be very ample");
            return h0_line(m, e.cls) - 1;
        case SheafExpr::Kind::Sum: {
            long long s = 0;
            for (const auto& p : e.parts) s += rank_of(p, m);
            return s;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<long long> split_type_p1(const VarietyModel& m, const SheafExpr& e) {
    if (m.kind != ModelKind::RationalCurve)
        throw std::invalid_argument("split_type_p1: model must be P^1");
    std::vector<long long> out;
    switch (e.kind) {
        case SheafExpr::Kind::Line:
            out.push_back(e.cls.deg());
            break;
        case SheafExpr::Kind::Syzygy: {
            // M_{O(m)} = (+)_m O(-1)
            for (long long i = 0; i < e.cls.deg(); ++i) out.push_back(e.twist.deg() - 1);
            break;
        }
        case SheafExpr::Kind::DualSyzygy: {
            for (long long i = 0; i < e.cls.deg(); ++i) out.push_back(e.twist.deg() + 1);
            break;
        }
        case SheafExpr::Kind::Sum:
            for (const auto& p : e.parts) {
                auto sub = split_type_p1(m, p);
                out.insert(out.end(), sub.begin(), sub.end());
            }
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

CohomologyVector coh_of_split(const std::vector<long long>& degs) {
    CohomologyVector v;
    v.h.assign(2, 0);
    for (long long d : degs) {
        v.h[0] += std::max(d + 1, 0LL);
        v.h[1] += std::max(-d - 1, 0LL);
    }
    return v;
}

}  // namespace ulrich
