#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "cayley/core.hpp"
#include "cayley/transforms.hpp"

namespace cayley {

/// A geometry in Klein's sense: the isometry group of `kind` acting on the plane.
struct KleinGeometry {
    GeometryKind kind = GeometryKind::Euclidean;

    /// The group's neutral element.
    Isometry identity() const { return cayley::identity(kind); }
};

/// Ordered vertex list: a segment (2 points), triangle (3), or polyline.
class Figure {
public:
    explicit Figure(std::vector<Vec2> points);

    const std::vector<Vec2>& points() const noexcept { return points_; }
    std::size_t size() const noexcept { return points_.size(); }

private:
    std::vector<Vec2> points_;
};

/// The action g . p. Throws KindMismatch if g belongs to another geometry.
Vec2 act(const KleinGeometry& geom, const Isometry& g, const Vec2& p);
Figure act(const KleinGeometry& geom, const Isometry& g, const Figure& f);

/// Group-invariant description of a figure, pairs (i, j) with i < j in
/// lexicographic order:
///   Euclidean: distance |P_i P_j|.
///   Galilean:  signed distance d_ij, followed by the special distance
///              whenever d_ij is zero.
///   Minkowski: |dx^2 - dy^2| followed by a causal tag of P_j - P_i
///              (+1 spacelike, -1 timelike, 0 lightlike or coincident).
/// Throws DegenerateFigure for fewer than 2 points.
std::vector<double> congruence_invariants(const KleinGeometry& geom, const Figure& f,
                                          const Tolerance& tol = {});

/// Looks for a group element mapping f onto h vertex by vertex. Supports
/// segments and triangles (UnsupportedFigure otherwise); returns nullopt when
/// no witness exists. Where the witness is not unique the smallest-magnitude
/// linear parameter (zero) is chosen.
std::optional<Isometry> find_congruence(const KleinGeometry& geom, const Figure& f, const Figure& h,
                                        const Tolerance& tol = {});

/// Necessary condition only: equal invariant vectors. Works for any point count.
bool invariants_match(const KleinGeometry& geom, const Figure& f, const Figure& h,
                      const Tolerance& tol = {});

// ─── Cayley-Klein taxonomy ──────────────────────────────────────────────────

enum class MeasureKind { Elliptic, Parabolic, Hyperbolic };

std::string_view to_string(MeasureKind m);

struct GeometryName {
    std::string_view greek;
    std::string_view english;
};

/// Indexed [angle measure][length measure].
using CayleyKleinTable = std::array<std::array<GeometryName, 3>, 3>;

const CayleyKleinTable& cayley_klein_table();

const GeometryName& table_cell(MeasureKind angle, MeasureKind length);

/// The implemented geometry in the given cell, if any.
std::optional<GeometryKind> implemented_kind(MeasureKind length, MeasureKind angle);

}  // namespace cayley
