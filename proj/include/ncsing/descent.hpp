#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncsing/graph.hpp"
#include "ncsing/local_models.hpp"

namespace ncsing {

/// Local presentation chosen at a triple point. The cyclic order is the
/// vertex's ribbon order; the trivialization is a point of twoper(V).
struct VertexChart {
  std::vector<int> cyclicOrder;
  TwoPerV trivialization;

  friend bool operator==(const VertexChart&, const VertexChart&) = default;
};

/// Gluing autoequivalence of one compact edge, stored from `from` to `to`.
struct EdgeTransition {
  std::size_t edge = 0;
  std::size_t from = 0;
  std::size_t to = 0;
  EdgeAut aut;

  friend bool operator==(const EdgeTransition&, const EdgeTransition&) = default;
};

/// Vertex charts plus one transition per compact edge (in graph edge order).
struct DescentDiagram {
  DecoratedGraph graph;
  std::vector<VertexChart> charts;
  std::vector<EdgeTransition> transitions;
};

/// Per-edge scalars (alpha_e, beta_e) overriding the graph decorations.
struct TransitionScalars {
  NonzeroRational alpha;
  NonzeroRational beta;
};

/// Builds transitions (x, u) -> (alpha x^{-1}, beta x^{n_e} u) with shift [1],
/// stored from the lower to the higher vertex. Charts default to trivial
/// trivializations; scalars default to the graph decorations.
/// Throws InvalidGraph, DisconnectedGraph, NonOrientable.
DescentDiagram assembleDiagram(const DecoratedGraph& g, const std::vector<TwoPerV>& charts = {},
                               const std::vector<TransitionScalars>& scalars = {});

/// Validates externally supplied transitions: one per compact edge, endpoints
/// matching the edge, eps = -1 and shift 1 (TransitionConstraint), n = n_e
/// (TwistMismatch).
DescentDiagram assembleDiagram(const DecoratedGraph& g, const std::vector<TwoPerV>& charts,
                               const std::vector<EdgeTransition>& transitions);

/// Replace a transition by its inverse stored in the opposite direction.
/// A self-loop has only one stored direction (halfA to halfB): InvalidArgument.
EdgeTransition reverseTransition(const EdgeTransition& t);

/// The transition's automorphism read from the lower to the higher vertex.
EdgeAut canonicalAut(const EdgeTransition& t);

/// Rescale vertex trivializations by g_v and every transition by
/// lamU -> g_from * lamU * g_to^{-1}.
DescentDiagram gauge(const DescentDiagram& d, const std::vector<NonzeroRational>& vertexScalars);

struct PicInvariants {
  std::vector<std::int64_t> degreeVector;            // per compact edge
  std::vector<NonzeroRational> betaHolonomies;       // per basis cycle
  std::vector<NonzeroRational> alphaHolonomies;      // per basis cycle

  bool trivial() const;
  friend bool operator==(const PicInvariants&, const PicInvariants&) = default;
};

PicInvariants picInvariants(const DescentDiagram& d);
bool isTwoPeriodic(const DescentDiagram& d);
/// The Pic class of the global twist autoequivalence (tensoring by L).
PicInvariants globalTwistAutoequivalence(const DescentDiagram& d);
/// Throws GraphMismatch when the underlying graphs differ (decorations other
/// than twists are ignored).
bool diagramsEquivalent(const DescentDiagram& a, const DescentDiagram& b);

/// Vertex scalars making every spanning-tree transition have lamU = 1.
std::vector<NonzeroRational> treeTrivializingGauge(const DescentDiagram& d);

/// Discrete part of the composite around a closed walk of compact-edge slots,
/// each edge transition preceded by the chart change tau = diag(-1, 1) at the
/// vertex it leaves. Equals [[1, sum of twists], [0, 1]].
DiscretePart cycleDiscreteComposite(const DescentDiagram& d, const Cycle& cycle);

}  // namespace ncsing
