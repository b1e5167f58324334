#include "ncsing/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ncsing/error.hpp"

namespace ncsing {

OrientabilityReport orientability(const DecoratedGraph& g) {
  const GraphIndex index(g);
  const auto& ends = index.canonicalEndpoints();
  const auto cycles = cycleBasis(g.vertices.size(), ends);

  OrientabilityReport report;
  for (const auto& cycle : cycles) {
    int sum = 0;
    for (const auto& step : cycle)
      sum ^= g.compact(index.compactEdges()[step.edge]).reversing ? 1 : 0;
    report.w1OnCycles.push_back(sum);
    if (sum != 0) report.orientable = false;
  }
  if (!report.orientable) return report;

  // Propagate along the same spanning tree; trivial w1 makes it consistent.
  std::vector<int> gauge(g.vertices.size(), 0);
  gauge[0] = 1;
  for (std::size_t slot : spanningTree(g.vertices.size(), ends)) {
    const auto [a, b] = ends[slot];
    const int sign = g.compact(index.compactEdges()[slot]).reversing ? -1 : 1;
    if (gauge[a] != 0) gauge[b] = gauge[a] * sign;
    else gauge[a] = gauge[b] * sign;
  }
  report.vertexGauge = std::move(gauge);
  return report;
}

namespace {

// Darts are (outgoing half-edge, orientation). Crossing an edge flips the
// orientation when the edge is reversing; a leg bounces straight back.
FaceStep advance(const DecoratedGraph& g, const GraphIndex& index, const FaceStep& dart) {
  const int arrival = index.twin(dart.half);
  const std::size_t e = index.edgeOf(dart.half);
  int orientation = dart.orientation;
  if (g.isCompact(e) && g.compact(e).reversing) orientation = -orientation;
  return {index.rotate(arrival, orientation), orientation};
}

// The same boundary traversed the other way round.
FaceStep reverseDart(const DecoratedGraph& g, const GraphIndex& index, const FaceStep& dart) {
  const std::size_t e = index.edgeOf(dart.half);
  const int flip = g.isCompact(e) && g.compact(e).reversing ? -1 : 1;
  return {index.twin(dart.half), -dart.orientation * flip};
}

}  // namespace

DualSurface dualSurface(const DecoratedGraph& g) {
  const GraphIndex index(g);
  index.requireConnected();

  DualSurface s;
  s.orientable = orientability(g).orientable;
  s.boundaryCircles = static_cast<long>(index.legCount());
  s.eulerCharacteristic = -static_cast<long>(g.vertices.size());
  const long deficit = 2 - s.eulerCharacteristic - s.boundaryCircles;
  s.genus = s.orientable ? deficit / 2 : deficit;

  std::set<std::pair<int, int>> seen;
  for (const auto& v : g.vertices)
    for (int h : v.halfEdges)
      for (int orientation : {1, -1}) {
        if (seen.count({h, orientation})) continue;
        std::vector<FaceStep> walk;
        FaceStep dart{h, orientation};
        while (!seen.count({dart.half, dart.orientation})) {
          seen.insert({dart.half, dart.orientation});
          walk.push_back(dart);
          dart = advance(g, index, dart);
        }
        // Mark the reversed traversal so each face is reported once.
        for (const auto& step : walk) {
          const auto r = reverseDart(g, index, step);
          seen.insert({r.half, r.orientation});
        }
        s.faceWalks.push_back(std::move(walk));
      }
  return s;
}

}  // namespace ncsing
