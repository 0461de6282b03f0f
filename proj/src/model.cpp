#include "ulrich/model.hpp"

#include <sstream>

namespace ulrich {

std::string SheafExpr::str() const {
    switch (kind) {
        case Kind::Line: return "line:" + cls.str();
        case Kind::Syzygy: return "syz:" + cls.str() + ":" + twist.str();
        case Kind::DualSyzygy: return "dualsyz:" + cls.str() + ":" + twist.str();
        case Kind::Sum: {
            std::string s = "sum:";
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i) s += ";";
                s += parts[i].str();
            }
            return s;
        }
    }
    return "";
}

std::string CohomologyVector::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < h.size(); ++i) {
        if (i) os << ",";
        os << h[i];
    }
    os << ")";
    return os.str();
}

SheafExpr twist_by(const SheafExpr& e, const BundleClass& c) {
    SheafExpr r = e;
    switch (e.kind) {
        case SheafExpr::Kind::Line:
            r.cls = tensor(e.cls, c);
            break;
        case SheafExpr::Kind::Syzygy:
        case SheafExpr::Kind::DualSyzygy:
            r.twist = tensor(e.twist, c);
            break;
        case SheafExpr::Kind::Sum:
            r.parts.clear();
            for (const auto& p : e.parts) r.parts.push_back(twist_by(p, c));
            break;
    }
    return r;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::CurveConic: return "curve-conic";
        case Family::CurveLine: return "curve-line";
        case Family::SurfaceP2: return "surface-p2";
        case Family::NormalRational: return "normal-rational-curve";
        case Family::Unexpected: return "unexpected";
    }
    return "unexpected";
}

}  // namespace ulrich
