#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "cayley/transforms.hpp"

namespace cayley::cli {

/// Seeded generator. Draws are built from raw mt19937_64 output, so the
/// stream is identical across standard library implementations.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    Vec2 vec(double lo, double hi) {
        const double x = uniform(lo, hi);
        return {x, uniform(lo, hi)};
    }
    bool coin() { return (engine_() >> 63) != 0; }

    /// Family parameter: rotation angle, Galilean velocity, or rapidity.
    double parameter(GeometryKind kind) {
        switch (kind) {
            case GeometryKind::Euclidean: return uniform(-std::numbers::pi, std::numbers::pi);
            case GeometryKind::Galilean: return uniform(-5.0, 5.0);
            case GeometryKind::Minkowski: return uniform(-2.0, 2.0);
        }
        return 0.0;
    }

    static Isometry linear_element(GeometryKind kind, double parameter) {
        switch (kind) {
            case GeometryKind::Euclidean: return rotation(parameter);
            case GeometryKind::Galilean: return galilean_boost(parameter);
            case GeometryKind::Minkowski: return lorentz_boost_rapidity(Rapidity{parameter});
        }
        return identity(kind);
    }

    Isometry linear_element(GeometryKind kind) { return linear_element(kind, parameter(kind)); }

    /// Translation after a linear family element.
    Isometry isometry(GeometryKind kind) {
        const Isometry lin = linear_element(kind);
        return compose(translate(vec(-10.0, 10.0), kind), lin);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace cayley::cli
