#include "ncsing/topology.hpp"

#include <map>
#include <numeric>

#include "ncsing/error.hpp"
#include "ncsing/surface.hpp"

namespace ncsing {

IntMatrix ShearMatrix::matrix() const { return IntMatrix{{-1, n}, {0, 1}}; }

namespace {

std::vector<int> requireOrientation(const DecoratedGraph& g, const GraphIndex& index) {
  index.requireConnected();
  auto report = orientability(g);
  if (!report.orientable) throw Error(ErrorCode::NonOrientable, "the dual complex is not orientable");
  return report.vertexGauge;
}

using Vector = std::vector<Integer>;

}  // namespace

PlumbingPresentation plumbingPresentation(const DecoratedGraph& g, const std::vector<bool>& reverseEdge) {
  const GraphIndex index(g);
  const auto orientation = requireOrientation(g, index);
  const std::size_t nv = g.vertices.size();
  const std::size_t gens = 3 * nv;

  // Oriented lift of the boundary circle at (v, position). The pants is
  // trivialized with lifts b1, b2 on the first two boundaries; the third picks
  // up the fiber, since the lifts of all three sum to chi(pants) = -1 times
  // the fiber class with outward boundary orientation.
  auto boundaryLift = [&](std::size_t v, std::size_t position) {
    Vector x(gens, 0);
    const int o = orientation[v];
    if (position < 2) {
      x[3 * v + position] = o;
    } else {
      x[3 * v] = -o;
      x[3 * v + 1] = -o;
      x[3 * v + 2] = o;
    }
    return x;
  };
  auto fiber = [&](std::size_t v) {
    Vector x(gens, 0);
    x[3 * v + 2] = orientation[v];
    return x;
  };

  std::vector<Vector> columns;
  for (std::size_t slot = 0; slot < index.compactEdges().size(); ++slot) {
    const auto& e = g.compact(index.compactEdges()[slot]);
    int fromHalf = e.halfA;
    int toHalf = e.halfB;
    if (index.vertexOf(fromHalf) > index.vertexOf(toHalf)) std::swap(fromHalf, toHalf);
    if (slot < reverseEdge.size() && reverseEdge[slot]) std::swap(fromHalf, toHalf);
    const std::size_t v = index.vertexOf(fromHalf);
    const std::size_t w = index.vertexOf(toHalf);
    const Vector bv = boundaryLift(v, index.positionOf(fromHalf));
    const Vector bw = boundaryLift(w, index.positionOf(toHalf));
    const Vector fv = fiber(v);
    const Vector fw = fiber(w);
    // Across the torus the framing (b_v, f_v) maps to (-b_v, n b_v + f_v),
    // which must equal (b_w, f_w).
    Vector baseRelation(gens);
    Vector fiberRelation(gens);
    for (std::size_t k = 0; k < gens; ++k) {
      baseRelation[k] = bw[k] + bv[k];
      fiberRelation[k] = fw[k] - (e.twist * bv[k] + fv[k]);
    }
    columns.push_back(std::move(baseRelation));
    columns.push_back(std::move(fiberRelation));
  }

  PlumbingPresentation p;
  p.vertexCount = nv;
  p.relations = IntMatrix(gens, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < gens; ++r) p.relations(r, c) = columns[c][r];
  return p;
}

H1Result h1FromPresentation(const DecoratedGraph& g, const PlumbingPresentation& p) {
  const GraphIndex index(g);
  H1Result h1 = cokernelAbelianGroup(p.relations);
  // Mayer-Vietoris: each independent cycle of the graph adds a free class.
  const long cycleRank =
      static_cast<long>(index.compactEdges().size()) - static_cast<long>(g.vertices.size()) + 1;
  h1.freeRank += cycleRank;
  return h1;
}

H1Result h1GraphManifold(const DecoratedGraph& g) { return h1FromPresentation(g, plumbingPresentation(g)); }

std::vector<DehnTwist> dehnTwistRecord(const DecoratedGraph& g) {
  const GraphIndex index(g);
  std::vector<DehnTwist> out;
  for (std::size_t e : index.compactEdges())
    if (g.compact(e).twist != 0) out.push_back({e, g.compact(e).twist});
  return out;
}

NodalCurveReport pencilLocalization(const DecoratedGraph& g) {
  const GraphIndex index(g);
  requireOrientation(g, index);
  for (std::size_t e : index.compactEdges())
    if (g.compact(e).twist < 0)
      throw Error(ErrorCode::NegativeDefect, "edge " + std::to_string(e) + " has n_e = " +
                                                 std::to_string(g.compact(e).twist) +
                                                 " < 0; no section with simple zeros exists");

  // Components of the graph once every edge carrying vanishing circles is cut.
  const std::size_t nv = g.vertices.size();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e : index.compactEdges()) {
    const auto& ce = g.compact(e);
    if (ce.twist != 0) continue;
    const std::size_t a = find(index.vertexOf(ce.halfA));
    const std::size_t b = find(index.vertexOf(ce.halfB));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  NodalCurveReport report;
  std::map<std::size_t, std::size_t> componentOf;  // union-find root -> component index
  std::vector<std::size_t> vertexComponent(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t root = find(v);
    auto [it, inserted] = componentOf.emplace(root, report.components.size());
    if (inserted) report.components.emplace_back();
    report.components[it->second].vertices.push_back(v);
    vertexComponent[v] = it->second;
  }
  for (const auto& edge : g.edges)
    if (const auto* leg = std::get_if<Leg>(&edge)) ++report.components[vertexComponent[index.vertexOf(leg->half)]].boundaryCount;

  std::map<std::pair<std::size_t, std::size_t>, long> incidence;
  auto addNode = [&](std::size_t a, std::size_t b) {
    ++incidence[{std::min(a, b), std::max(a, b)}];
    ++report.nodes;
  };
  for (std::size_t e : index.compactEdges()) {
    const auto& ce = g.compact(e);
    if (ce.twist == 0) continue;
    const std::size_t a = vertexComponent[index.vertexOf(ce.halfA)];
    const std::size_t b = vertexComponent[index.vertexOf(ce.halfB)];
    ++report.components[a].boundaryCount;
    ++report.components[b].boundaryCount;
    // n_e parallel circles cut off n_e - 1 annuli, each collapsing to a sphere.
    std::size_t previous = a;
    for (std::int64_t k = 1; k < ce.twist; ++k) {
      const std::size_t sphere = report.components.size();
      report.components.push_back({0, 2, true, {}});
      ++report.sphereComponents;
      addNode(previous, sphere);
      previous = sphere;
    }
    addNode(previous, b);
  }
  for (auto& c : report.components)
    if (!c.sphere) c.genus = (2 + static_cast<long>(c.vertices.size()) - c.boundaryCount) / 2;
  for (const auto& [pair, count] : incidence) report.incidence.push_back({pair.first, pair.second, count});
  return report;
}

}  // namespace ncsing
