#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cayley/core.hpp"

namespace cayley::cli {

struct PropertyResult {
    GeometryKind geometry;
    std::string name;
    /// Largest normalized error |a - b| / (1 + max(|a|, |b|)) seen, or the
    /// number of mismatches for discrete properties.
    double max_error = 0.0;
    bool pass = true;
};

/// Seeded randomized property suite over all three geometries: quadratic-form
/// invariance, group and action axioms, parameter additivity, distance
/// preservation, Galilean ratio/area/angle preservation, and Minkowski
/// causal-class invariance. A property passes when max_error <= tol.rel.
std::vector<PropertyResult> run_check_suite(std::size_t samples, std::uint64_t seed, const Tolerance& tol);

}  // namespace cayley::cli
