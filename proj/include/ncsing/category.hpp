#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncsing/graph.hpp"

namespace ncsing {

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string label;
};

/// A finite category given by explicit tables.
struct FiniteCategory {
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  /// (g, f) -> g after f, present exactly when target(f) == source(g).
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> composition;
  /// identities[x] is the identity arrow of object x.
  std::vector<std::size_t> identities;

  std::size_t compose(std::size_t g, std::size_t f) const;
  std::vector<std::size_t> hom(std::size_t source, std::size_t target) const;
  /// Exhaustive check of identity, unit and associativity laws.
  std::vector<std::string> checkAxioms() const;
};

/// Objects: vertices then edges. One arrow vertex -> edge per flag.
FiniteCategory buildJ(const DecoratedGraph& g);

/// Objects: vertices then flags (vertex order, cyclic position order). Arrows
/// vertex -> flag, an inverse pair of isomorphisms between the two flags of
/// each compact edge, and every composite, found by saturation.
FiniteCategory buildI(const DecoratedGraph& g);

struct CategoryFunctor {
  std::vector<std::size_t> onObjects;
  std::vector<std::size_t> onArrows;
};

/// The functor I(G) -> J(G) sending each flag to its edge and the edge
/// isomorphisms to identities.
CategoryFunctor collapseFunctor(const DecoratedGraph& g, const FiniteCategory& i, const FiniteCategory& j);

}  // namespace ncsing
