#include "ncsing/cycles.hpp"

#include <algorithm>
#include <limits>

#include "ncsing/error.hpp"

namespace ncsing {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct Tree {
  std::vector<std::size_t> order;       // tree edges in insertion order
  std::vector<std::size_t> parentEdge;  // per vertex, kNone at the root
  std::vector<std::size_t> parent;
  std::vector<std::size_t> depth;
  std::vector<bool> isTreeEdge;
};

Tree growTree(std::size_t vertexCount, std::span<const VertexPair> edges) {
  Tree tree;
  tree.parentEdge.assign(vertexCount, kNone);
  tree.parent.assign(vertexCount, kNone);
  tree.depth.assign(vertexCount, 0);
  tree.isTreeEdge.assign(edges.size(), false);
  if (vertexCount == 0) return tree;

  for (const auto& [a, b] : edges)
    if (a >= vertexCount || b >= vertexCount)
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");

  std::vector<bool> inTree(vertexCount, false);
  inTree[0] = true;
  std::size_t reached = 1;
  while (reached < vertexCount) {
    std::size_t chosen = kNone;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (inTree[edges[e].first] != inTree[edges[e].second]) {
        chosen = e;
        break;
      }
    if (chosen == kNone) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
    const auto [a, b] = edges[chosen];
    const std::size_t from = inTree[a] ? a : b;
    const std::size_t to = inTree[a] ? b : a;
    inTree[to] = true;
    tree.parent[to] = from;
    tree.parentEdge[to] = chosen;
    tree.depth[to] = tree.depth[from] + 1;
    tree.isTreeEdge[chosen] = true;
    tree.order.push_back(chosen);
    ++reached;
  }
  return tree;
}

// Signed step along the tree edge joining child to its parent, walking upward.
SignedEdge upStep(const Tree& tree, std::span<const VertexPair> edges, std::size_t child) {
  const std::size_t e = tree.parentEdge[child];
  return {e, edges[e].first == child ? 1 : -1};
}

}  // namespace

std::vector<std::size_t> spanningTree(std::size_t vertexCount, std::span<const VertexPair> edges) {
  return growTree(vertexCount, edges).order;
}

std::vector<Cycle> cycleBasis(std::size_t vertexCount, std::span<const VertexPair> edges) {
  const Tree tree = growTree(vertexCount, edges);
  std::vector<Cycle> cycles;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (tree.isTreeEdge[e]) continue;
    std::size_t a = edges[e].first;
    std::size_t b = edges[e].second;
    Cycle up;    // a upward to the meeting vertex
    Cycle down;  // b upward to the meeting vertex, reversed later
    while (a != b) {
      if (tree.depth[a] >= tree.depth[b]) {
        up.push_back(upStep(tree, edges, a));
        a = tree.parent[a];
      } else {
        SignedEdge step = upStep(tree, edges, b);
        step.sign = -step.sign;
        down.push_back(step);
        b = tree.parent[b];
      }
    }
    Cycle cycle = std::move(up);
    cycle.insert(cycle.end(), down.rbegin(), down.rend());
    cycle.push_back({e, -1});
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

}  // namespace ncsing
