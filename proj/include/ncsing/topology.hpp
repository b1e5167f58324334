#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ncsing/graph.hpp"
#include "ncsing/int_matrix.hpp"

namespace ncsing {

/// The framing change [[-1, n], [0, 1]] on (base class, fiber class):
/// b -> -b, f -> n b + f. It is its own inverse.
struct ShearMatrix {
  std::int64_t n = 0;

  IntMatrix matrix() const;
};

/// Three generators per vertex, (b1, b2, f) for vertex v at rows 3v..3v+2, and
/// two relation columns per compact edge.
struct PlumbingPresentation {
  std::size_t vertexCount = 0;
  IntMatrix relations;
};

/// Requires a valid, connected, orientable graph (NonOrientable otherwise).
/// Each compact edge is glued from its lower to its higher vertex unless
/// `reverseEdge[slot]` is set for that compact-edge slot.
PlumbingPresentation plumbingPresentation(const DecoratedGraph& g, const std::vector<bool>& reverseEdge = {});

using H1Result = AbelianGroup;

/// First homology of the twisted graph manifold S({n_e}).
H1Result h1GraphManifold(const DecoratedGraph& g);
H1Result h1FromPresentation(const DecoratedGraph& g, const PlumbingPresentation& p);

struct DehnTwist {
  std::size_t edge = 0;
  std::int64_t multiplicity = 0;

  friend bool operator==(const DehnTwist&, const DehnTwist&) = default;
};

/// Compact edges with nonzero twist, with the twist as multiplicity.
std::vector<DehnTwist> dehnTwistRecord(const DecoratedGraph& g);

struct NodalComponent {
  long genus = 0;
  long boundaryCount = 0;
  bool sphere = false;                // an annulus between parallel circles
  std::vector<std::size_t> vertices;  // empty for spheres
};

struct NodeIncidence {
  std::size_t first = 0;   // component index, first <= second
  std::size_t second = 0;
  long count = 0;
};

struct NodalCurveReport {
  std::vector<NodalComponent> components;  // main pieces first, then spheres
  long nodes = 0;
  std::vector<NodeIncidence> incidence;
  long sphereComponents = 0;
};

/// Pinch n_e parallel circles over each compact edge of the dual surface.
/// Throws NegativeDefect, NonOrientable, DisconnectedGraph, InvalidGraph.
NodalCurveReport pencilLocalization(const DecoratedGraph& g);

}  // namespace ncsing
