#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncsing/graph.hpp"

namespace ncsing {

using Vec3 = std::array<std::int64_t, 3>;

/// A simplicial fan in Z^3 given by its rays and maximal cones.
struct Fan {
  std::vector<Vec3> rays;
  std::vector<std::array<std::size_t, 3>> cones;
};

/// A 2-dimensional cone, as an ascending pair of ray indices.
struct Wall {
  std::size_t first = 0;
  std::size_t second = 0;

  friend auto operator<=>(const Wall&, const Wall&) = default;
};

/// Smoothness and fan-axiom violations; empty iff the fan is valid.
std::vector<std::string> validateFan(const Fan& f);

/// Every 2-face of a maximal cone, ascending.
std::vector<Wall> fanWalls(const Fan& f);

struct WallReport {
  Wall wall;
  std::vector<std::size_t> adjacentCones;
  /// Self-intersection of the wall's curve inside the divisor of wall.first
  /// and of wall.second. Absent on boundary walls (the curve is an A^1).
  std::optional<std::int64_t> selfIntersectionFirst;
  std::optional<std::int64_t> selfIntersectionSecond;
  /// a + b + 2.
  std::optional<std::int64_t> defect;
  /// -K . C from the anticanonical support function; must equal the defect.
  std::optional<std::int64_t> anticanonicalDegree;

  bool interior() const { return adjacentCones.size() == 2; }
};

/// Throws NotAWall if no maximal cone contains both rays, InvalidFan if more
/// than two do or the neighbouring cones are not smooth along the wall.
WallReport wallData(const Fan& f, Wall wall);

/// Vertices are maximal cones (cyclic order from the positively oriented ray
/// triple), compact edges are interior walls with twist = defect, legs are
/// boundary walls. Throws InvalidFan.
DecoratedGraph boundaryGraph(const Fan& f);

/// Per ray: self-intersection numbers of the invariant curves around the
/// toric surface of that ray, normalized under rotation and reflection.
struct DivisorDescriptor {
  std::size_t ray = 0;
  bool complete = true;  // false when the star is a path rather than a cycle
  std::vector<std::int64_t> selfIntersections;
};

std::vector<DivisorDescriptor> divisorClassification(const Fan& f);

Fan projectiveSpaceFan();
Fan resolvedConifoldFan();
Fan p1CubedFan();
/// Cone over the unit triangulation of the boundary of the tetrahedron
/// conv{(-1,-1,-1), (3,-1,-1), (-1,3,-1), (-1,-1,3)}.
Fan quarticMirrorFan();

}  // namespace ncsing
