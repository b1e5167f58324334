#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ncsing/cycles.hpp"
#include "ncsing/rational.hpp"

namespace ncsing {

/// A P^1 component of the singular locus joining two triple points.
struct CompactEdge {
  int halfA = 0;
  int halfB = 0;
  std::int64_t twist = 0;       // n_e, the defect
  NonzeroRational holonomy;     // beta_e
  NonzeroRational baseScalar;   // alpha_e
  bool reversing = false;
  std::optional<std::pair<std::int64_t, std::int64_t>> selfIntersections;

  friend bool operator==(const CompactEdge&, const CompactEdge&) = default;
};

/// A noncompact A^1 component, attached to a single triple point.
struct Leg {
  int half = 0;

  friend bool operator==(const Leg&, const Leg&) = default;
};

using GraphEdge = std::variant<CompactEdge, Leg>;

/// A triple point; halfEdges is its cyclic order (ribbon structure).
struct Vertex {
  std::vector<int> halfEdges;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Trivalent ribbon graph describing the singular locus, with per-edge decorations.
struct DecoratedGraph {
  std::vector<Vertex> vertices;
  std::vector<GraphEdge> edges;

  bool isCompact(std::size_t e) const { return std::holds_alternative<CompactEdge>(edges.at(e)); }
  const CompactEdge& compact(std::size_t e) const { return std::get<CompactEdge>(edges.at(e)); }
  CompactEdge& compact(std::size_t e) { return std::get<CompactEdge>(edges.at(e)); }

  friend bool operator==(const DecoratedGraph&, const DecoratedGraph&) = default;
};

/// Human-readable invariant violations; empty iff the graph is valid.
std::vector<std::string> validateGraph(const DecoratedGraph& g);

/// Lookup tables over a valid graph. Construction throws InvalidGraph with the
/// first violation when the graph is not valid.
class GraphIndex {
 public:
  explicit GraphIndex(const DecoratedGraph& g);

  const DecoratedGraph& graph() const { return *graph_; }

  std::size_t vertexOf(int half) const { return info(half).vertex; }
  std::size_t positionOf(int half) const { return info(half).position; }
  std::size_t edgeOf(int half) const { return info(half).edge; }
  /// The other half-edge of a compact edge; a leg's half-edge is its own twin.
  int twin(int half) const;
  /// Cyclic successor (step +1) or predecessor (step -1) at the owning vertex.
  int rotate(int half, int step) const;

  /// Graph edge indices of the compact edges, ascending.
  const std::vector<std::size_t>& compactEdges() const { return compactEdges_; }
  /// Position of a graph edge inside compactEdges().
  std::size_t compactSlot(std::size_t edge) const { return compactSlot_.at(edge); }
  /// Endpoints (lower vertex, higher vertex) per compact edge, in compactEdges() order.
  const std::vector<VertexPair>& canonicalEndpoints() const { return endpoints_; }
  std::size_t legCount() const { return graph_->edges.size() - compactEdges_.size(); }

  bool connected() const;
  void requireConnected() const;

 private:
  struct HalfInfo {
    std::size_t vertex = 0;
    std::size_t position = 0;
    std::size_t edge = 0;
  };
  const HalfInfo& info(int half) const;

  const DecoratedGraph* graph_;
  std::map<int, HalfInfo> halves_;
  std::vector<std::size_t> compactEdges_;
  std::map<std::size_t, std::size_t> compactSlot_;
  std::vector<VertexPair> endpoints_;
};

/// Reverse the cyclic order at v and toggle the reversing flag of each
/// incident compact edge (a self-loop is toggled twice). Orientation gauge.
DecoratedGraph flipVertexOrientation(const DecoratedGraph& g, std::size_t v);

}  // namespace ncsing
