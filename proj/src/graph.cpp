#include "ncsing/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ncsing/error.hpp"

namespace ncsing {

std::vector<std::string> validateGraph(const DecoratedGraph& g) {
  std::vector<std::string> issues;
  if (g.vertices.empty()) issues.emplace_back("graph has no vertices");

  std::map<int, int> vertexUses;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    const auto& halves = g.vertices[v].halfEdges;
    const std::set<int> distinct(halves.begin(), halves.end());
    if (halves.size() != 3 || distinct.size() != 3) {
      std::ostringstream os;
      os << "vertex " << v << " not trivalent (" << distinct.size() << " distinct half-edges)";
      issues.push_back(os.str());
    }
    for (int h : distinct) ++vertexUses[h];
  }

  std::map<int, int> edgeUses;
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (const auto* leg = std::get_if<Leg>(&g.edges[e])) {
      ++edgeUses[leg->half];
      continue;
    }
    const auto& c = std::get<CompactEdge>(g.edges[e]);
    ++edgeUses[c.halfA];
    if (c.halfB != c.halfA) ++edgeUses[c.halfB];
    else issues.push_back("edge " + std::to_string(e) + " uses half-edge " + std::to_string(c.halfA) + " twice");
    if (c.selfIntersections) {
      const auto expected = c.selfIntersections->first + c.selfIntersections->second + 2;
      if (expected != c.twist) {
        std::ostringstream os;
        os << "edge " << e << " triple point formula: expected n_e = " << expected << ", got " << c.twist;
        issues.push_back(os.str());
      }
    }
  }

  std::set<int> all;
  for (const auto& [h, n] : vertexUses) all.insert(h);
  for (const auto& [h, n] : edgeUses) all.insert(h);
  for (int h : all) {
    const int nv = vertexUses.count(h) ? vertexUses[h] : 0;
    const int ne = edgeUses.count(h) ? edgeUses[h] : 0;
    if (nv != 1) issues.push_back("half-edge " + std::to_string(h) + " belongs to " + std::to_string(nv) + " vertices");
    if (ne != 1) issues.push_back("half-edge " + std::to_string(h) + " belongs to " + std::to_string(ne) + " edges");
  }
  return issues;
}

GraphIndex::GraphIndex(const DecoratedGraph& g) : graph_(&g) {
  const auto issues = validateGraph(g);
  if (!issues.empty()) throw Error(ErrorCode::InvalidGraph, issues.front());
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    for (std::size_t p = 0; p < 3; ++p) halves_[g.vertices[v].halfEdges[p]] = {v, p, 0};
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (const auto* leg = std::get_if<Leg>(&g.edges[e])) {
      halves_[leg->half].edge = e;
      continue;
    }
    const auto& c = std::get<CompactEdge>(g.edges[e]);
    halves_[c.halfA].edge = e;
    halves_[c.halfB].edge = e;
    compactSlot_[e] = compactEdges_.size();
    compactEdges_.push_back(e);
    const std::size_t a = halves_[c.halfA].vertex;
    const std::size_t b = halves_[c.halfB].vertex;
    endpoints_.emplace_back(std::min(a, b), std::max(a, b));
  }
}

const GraphIndex::HalfInfo& GraphIndex::info(int half) const {
  const auto it = halves_.find(half);
  if (it == halves_.end()) throw Error(ErrorCode::InvalidArgument, "unknown half-edge " + std::to_string(half));
  return it->second;
}

int GraphIndex::twin(int half) const {
  const auto& edge = graph_->edges[edgeOf(half)];
  if (const auto* c = std::get_if<CompactEdge>(&edge)) return c->halfA == half ? c->halfB : c->halfA;
  return half;
}

int GraphIndex::rotate(int half, int step) const {
  const auto& hi = info(half);
  const std::size_t next = (hi.position + 3 + static_cast<std::size_t>(step % 3 + 3)) % 3;
  return graph_->vertices[hi.vertex].halfEdges[next];
}

bool GraphIndex::connected() const {
  try {
    spanningTree(graph_->vertices.size(), endpoints_);
    return true;
  } catch (const Error&) {
    return false;
  }
}

void GraphIndex::requireConnected() const {
  if (!connected()) throw Error(ErrorCode::DisconnectedGraph, "graph is not connected");
}

DecoratedGraph flipVertexOrientation(const DecoratedGraph& g, std::size_t v) {
  DecoratedGraph out = g;
  auto& halves = out.vertices.at(v).halfEdges;
  if (halves.size() == 3) std::swap(halves[1], halves[2]);
  const std::set<int> mine(halves.begin(), halves.end());
  for (auto& edge : out.edges) {
    auto* c = std::get_if<CompactEdge>(&edge);
    if (c == nullptr) continue;
    if (mine.count(c->halfA)) c->reversing = !c->reversing;
    if (mine.count(c->halfB)) c->reversing = !c->reversing;
  }
  return out;
}

}  // namespace ncsing
