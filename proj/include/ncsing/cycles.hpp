#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ncsing {

/// An edge traversed forward (+1, first endpoint to second) or backward (-1).
struct SignedEdge {
  std::size_t edge = 0;
  int sign = 1;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

using Cycle = std::vector<SignedEdge>;
using VertexPair = std::pair<std::size_t, std::size_t>;

/// Fundamental cycles of a connected multigraph with respect to the spanning
/// tree grown from vertex 0 by always taking the lowest-index edge leaving the
/// tree. One cycle per non-tree edge (in edge order): the tree path from its
/// first endpoint to its second, closed by the edge traversed backwards.
/// Throws DisconnectedGraph.
std::vector<Cycle> cycleBasis(std::size_t vertexCount, std::span<const VertexPair> edges);

/// Edge indices of the spanning tree used by cycleBasis, in insertion order.
std::vector<std::size_t> spanningTree(std::size_t vertexCount, std::span<const VertexPair> edges);

}  // namespace ncsing
