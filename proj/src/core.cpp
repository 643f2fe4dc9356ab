#include "cayley/core.hpp"

#include <algorithm>

namespace cayley {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::InvalidTolerance: return "InvalidTolerance";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::NotOnVerticalLine: return "NotOnVerticalLine";
        case ErrorCode::DegenerateVector: return "DegenerateVector";
        case ErrorCode::MixedCausalClass: return "MixedCausalClass";
        case ErrorCode::WrongGeometry: return "WrongGeometry";
        case ErrorCode::SuperluminalVelocity: return "SuperluminalVelocity";
        case ErrorCode::KindMismatch: return "KindMismatch";
        case ErrorCode::DegenerateFigure: return "DegenerateFigure";
        case ErrorCode::UnsupportedFigure: return "UnsupportedFigure";
        case ErrorCode::DegenerateRadius: return "DegenerateRadius";
        case ErrorCode::VerticalLine: return "VerticalLine";
        case ErrorCode::NotCollinear: return "NotCollinear";
        case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorCode::TooFewVertices: return "TooFewVertices";
    }
    return "Unknown";
}

Tolerance::Tolerance(double rel_, double abs_) : rel(rel_), abs(abs_) {
    if (!(rel_ > 0.0) || !(abs_ > 0.0) || !std::isfinite(rel_) || !std::isfinite(abs_)) {
        throw GeometryError(ErrorCode::InvalidTolerance, "rel and abs must be finite and > 0");
    }
}

std::string_view to_string(GeometryKind kind) {
    switch (kind) {
        case GeometryKind::Euclidean: return "euclidean";
        case GeometryKind::Galilean: return "galilean";
        case GeometryKind::Minkowski: return "minkowski";
    }
    return "euclidean";
}

GeometryKind parse_geometry_kind(std::string_view name) {
    if (name == "euclidean") return GeometryKind::Euclidean;
    if (name == "galilean") return GeometryKind::Galilean;
    if (name == "minkowski") return GeometryKind::Minkowski;
    throw GeometryError(ErrorCode::InvalidArgument, "unknown geometry '" + std::string(name) + "'");
}

std::string_view to_string(CausalClass cls) {
    switch (cls) {
        case CausalClass::Spacelike: return "spacelike";
        case CausalClass::Timelike: return "timelike";
        case CausalClass::Lightlike: return "lightlike";
    }
    return "lightlike";
}

Mat2::Mat2(double a11, double a12, double a21, double a22)
    : a11_(a11), a12_(a12), a21_(a21), a22_(a22) {
    if (!std::isfinite(a11) || !std::isfinite(a12) || !std::isfinite(a21) || !std::isfinite(a22)) {
        throw GeometryError(ErrorCode::NonFinite, "Mat2 entries must be finite");
    }
}

Mat2 Mat2::operator*(const Mat2& m) const {
    return {a11_ * m.a11_ + a12_ * m.a21_, a11_ * m.a12_ + a12_ * m.a22_,
            a21_ * m.a11_ + a22_ * m.a21_, a21_ * m.a12_ + a22_ * m.a22_};
}

Mat2 Mat2::inverse() const {
    const double d = det();
    if (d == 0.0) {
        throw GeometryError(ErrorCode::DegenerateFigure, "singular matrix has no inverse");
    }
    return {a22_ / d, -a12_ / d, -a21_ / d, a11_ / d};
}

bool approx_eq(const Mat2& a, const Mat2& b, const Tolerance& tol) {
    return approx_eq(a.a11(), b.a11(), tol) && approx_eq(a.a12(), b.a12(), tol) &&
           approx_eq(a.a21(), b.a21(), tol) && approx_eq(a.a22(), b.a22(), tol);
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
    return std::max({std::abs(a.a11() - b.a11()), std::abs(a.a12() - b.a12()),
                     std::abs(a.a21() - b.a21()), std::abs(a.a22() - b.a22())});
}

}  // namespace cayley
