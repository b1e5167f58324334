#include "ncsing/descent.hpp"

#include <string>

#include "ncsing/error.hpp"
#include "ncsing/surface.hpp"

namespace ncsing {

namespace {

void requireDescentPreconditions(const DecoratedGraph& g, const GraphIndex& index) {
  index.requireConnected();
  if (!orientability(g).orientable)
    throw Error(ErrorCode::NonOrientable, "w1 is nonzero; twisted descent diagrams are not supported");
}

std::vector<VertexChart> makeCharts(const DecoratedGraph& g, const std::vector<TwoPerV>& charts) {
  if (!charts.empty() && charts.size() != g.vertices.size())
    throw Error(ErrorCode::InvalidArgument, "expected one chart per vertex");
  std::vector<VertexChart> out;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    out.push_back({g.vertices[v].halfEdges, charts.empty() ? TwoPerV{} : charts[v]});
  return out;
}

}  // namespace

DescentDiagram assembleDiagram(const DecoratedGraph& g, const std::vector<TwoPerV>& charts,
                               const std::vector<TransitionScalars>& scalars) {
  const GraphIndex index(g);
  requireDescentPreconditions(g, index);
  if (!scalars.empty() && scalars.size() != index.compactEdges().size())
    throw Error(ErrorCode::InvalidArgument, "expected one scalar pair per compact edge");

  DescentDiagram d{g, makeCharts(g, charts), {}};
  for (std::size_t slot = 0; slot < index.compactEdges().size(); ++slot) {
    const std::size_t e = index.compactEdges()[slot];
    const auto& ce = g.compact(e);
    const auto [from, to] = index.canonicalEndpoints()[slot];
    EdgeAut aut;
    aut.eps = -1;
    aut.n = ce.twist;
    aut.lamX = scalars.empty() ? ce.baseScalar : scalars[slot].alpha;
    aut.lamU = scalars.empty() ? ce.holonomy : scalars[slot].beta;
    aut.shift = Shift{1};
    d.transitions.push_back({e, from, to, aut});
  }
  return d;
}

DescentDiagram assembleDiagram(const DecoratedGraph& g, const std::vector<TwoPerV>& charts,
                               const std::vector<EdgeTransition>& transitions) {
  const GraphIndex index(g);
  requireDescentPreconditions(g, index);
  if (transitions.size() != index.compactEdges().size())
    throw Error(ErrorCode::InvalidArgument, "expected one transition per compact edge");

  DescentDiagram d{g, makeCharts(g, charts), {}};
  std::vector<bool> covered(g.edges.size(), false);
  for (const auto& t : transitions) {
    const std::string where = "edge " + std::to_string(t.edge);
    if (t.edge >= g.edges.size() || !g.isCompact(t.edge))
      throw Error(ErrorCode::InvalidArgument, where + " is not a compact edge");
    if (covered[t.edge]) throw Error(ErrorCode::InvalidArgument, where + " has two transitions");
    covered[t.edge] = true;
    const auto [lo, hi] = index.canonicalEndpoints()[index.compactSlot(t.edge)];
    const bool forward = t.from == lo && t.to == hi;
    const bool backward = t.from == hi && t.to == lo;
    if (!forward && !backward) throw Error(ErrorCode::InvalidArgument, where + " direction does not match its endpoints");
    checkEdgeAut(t.aut);
    if (t.aut.eps != -1)
      throw Error(ErrorCode::TransitionConstraint, where + ": discrete part must lie in the coset of tau (eps = -1)");
    if (t.aut.shift.bit != 1) throw Error(ErrorCode::TransitionConstraint, where + ": transition must carry the shift [1]");
    if (t.aut.n != g.compact(t.edge).twist)
      throw Error(ErrorCode::TwistMismatch, where + ": n = " + std::to_string(t.aut.n) + " but the edge twist is " +
                                                std::to_string(g.compact(t.edge).twist));
  }
  d.transitions.resize(transitions.size());
  for (const auto& t : transitions) d.transitions[index.compactSlot(t.edge)] = t;
  return d;
}

EdgeTransition reverseTransition(const EdgeTransition& t) {
  if (t.from == t.to)
    throw Error(ErrorCode::InvalidArgument,
                "edge " + std::to_string(t.edge) + " is a self-loop; its transition always runs from halfA to halfB");
  return {t.edge, t.to, t.from, inverse(t.aut)};
}

EdgeAut canonicalAut(const EdgeTransition& t) {
  return t.from <= t.to ? t.aut : inverse(t.aut);
}

DescentDiagram gauge(const DescentDiagram& d, const std::vector<NonzeroRational>& vertexScalars) {
  if (vertexScalars.size() != d.graph.vertices.size())
    throw Error(ErrorCode::InvalidArgument, "expected one gauge scalar per vertex");
  DescentDiagram out = d;
  for (std::size_t v = 0; v < out.charts.size(); ++v)
    out.charts[v].trivialization.t = vertexScalars[v] * out.charts[v].trivialization.t;
  for (auto& t : out.transitions)
    t.aut.lamU = vertexScalars[t.from] * t.aut.lamU / vertexScalars[t.to];
  return out;
}

bool PicInvariants::trivial() const {
  for (auto n : degreeVector)
    if (n != 0) return false;
  for (const auto& b : betaHolonomies)
    if (b != NonzeroRational(1)) return false;
  return true;
}

PicInvariants picInvariants(const DescentDiagram& d) {
  const GraphIndex index(d.graph);
  const auto cycles = cycleBasis(d.graph.vertices.size(), index.canonicalEndpoints());
  std::vector<EdgeAut> canonical;
  for (const auto& t : d.transitions) canonical.push_back(canonicalAut(t));

  PicInvariants pic;
  for (const auto& aut : canonical) pic.degreeVector.push_back(aut.n);
  for (const auto& cycle : cycles) {
    NonzeroRational beta;
    NonzeroRational alpha;
    for (const auto& step : cycle) {
      beta *= canonical[step.edge].lamU.pow(step.sign);
      alpha *= canonical[step.edge].lamX.pow(step.sign);
    }
    pic.betaHolonomies.push_back(beta);
    pic.alphaHolonomies.push_back(alpha);
  }
  return pic;
}

bool isTwoPeriodic(const DescentDiagram& d) { return picInvariants(d).trivial(); }

PicInvariants globalTwistAutoequivalence(const DescentDiagram& d) { return picInvariants(d); }

namespace {

bool sameShape(const DecoratedGraph& a, const DecoratedGraph& b) {
  if (a.vertices != b.vertices || a.edges.size() != b.edges.size()) return false;
  for (std::size_t e = 0; e < a.edges.size(); ++e) {
    if (a.isCompact(e) != b.isCompact(e)) return false;
    if (a.isCompact(e)) {
      const auto& x = a.compact(e);
      const auto& y = b.compact(e);
      if (x.halfA != y.halfA || x.halfB != y.halfB || x.twist != y.twist || x.reversing != y.reversing) return false;
    } else if (std::get<Leg>(a.edges[e]) != std::get<Leg>(b.edges[e])) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool diagramsEquivalent(const DescentDiagram& a, const DescentDiagram& b) {
  if (!sameShape(a.graph, b.graph)) throw Error(ErrorCode::GraphMismatch, "diagrams live on different graphs");
  return picInvariants(a) == picInvariants(b);
}

std::vector<NonzeroRational> treeTrivializingGauge(const DescentDiagram& d) {
  const GraphIndex index(d.graph);
  const auto& ends = index.canonicalEndpoints();
  std::vector<NonzeroRational> g(d.graph.vertices.size());
  std::vector<bool> set(g.size(), false);
  set[0] = true;
  for (std::size_t slot : spanningTree(g.size(), ends)) {
    const auto [lo, hi] = ends[slot];
    const NonzeroRational beta = canonicalAut(d.transitions[slot]).lamU;
    // lo -> hi: g_lo * beta * g_hi^{-1} = 1
    if (set[lo]) g[hi] = g[lo] * beta;
    else g[lo] = g[hi] / beta;
    set[lo] = set[hi] = true;
  }
  return g;
}

DiscretePart cycleDiscreteComposite(const DescentDiagram& d, const Cycle& cycle) {
  const DiscretePart tau{-1, 0};
  DiscretePart total;
  for (const auto& step : cycle) {
    const auto& t = d.transitions.at(step.edge);
    total = t.aut.discrete() * tau * total;
  }
  return total;
}

}  // namespace ncsing
