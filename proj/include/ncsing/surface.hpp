#pragma once

#include <cstddef>
#include <vector>

#include "ncsing/graph.hpp"

namespace ncsing {

/// A walk step leaves its vertex along `half`; `orientation` is +1 when the
/// step turns by cyclic successor and -1 when it turns by predecessor.
struct FaceStep {
  int half = 0;
  int orientation = 1;

  friend bool operator==(const FaceStep&, const FaceStep&) = default;
};

/// The surface glued from one pair of pants per vertex along the compact edges.
struct DualSurface {
  bool orientable = true;
  /// Orientable genus, or the number of crosscaps when non-orientable.
  long genus = 0;
  long boundaryCircles = 0;
  long eulerCharacteristic = 0;
  /// Boundary walks of the ribbon graph (one per face, up to reversal).
  std::vector<std::vector<FaceStep>> faceWalks;
};

DualSurface dualSurface(const DecoratedGraph& g);

struct OrientabilityReport {
  bool orientable = true;
  /// Z/2 sum of reversing flags over each cycleBasis cycle (compact edges,
  /// canonical endpoints).
  std::vector<int> w1OnCycles;
  /// A vertex orientation (+1/-1) that untwists every edge; empty if none exists.
  std::vector<int> vertexGauge;
};

OrientabilityReport orientability(const DecoratedGraph& g);

}  // namespace ncsing
