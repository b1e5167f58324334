#include "ncsing/fixtures.hpp"

#include "ncsing/error.hpp"

namespace ncsing {

DecoratedGraph thetaGraph(const std::vector<std::int64_t>& twists) {
  if (twists.size() != 3) throw Error(ErrorCode::InvalidArgument, "theta graph takes three twists");
  DecoratedGraph g;
  g.vertices = {{{0, 1, 2}}, {{3, 4, 5}}};
  const int ends[3][2] = {{0, 3}, {1, 5}, {2, 4}};
  for (std::size_t e = 0; e < 3; ++e) {
    CompactEdge c;
    c.halfA = ends[e][0];
    c.halfB = ends[e][1];
    c.twist = twists[e];
    g.edges.emplace_back(c);
  }
  return g;
}

DecoratedGraph tripodGraph() {
  DecoratedGraph g;
  g.vertices = {{{0, 1, 2}}};
  g.edges = {Leg{0}, Leg{1}, Leg{2}};
  return g;
}

std::vector<std::string> exampleNames() { return {"theta", "p3", "conifold", "p1xp1xp1", "quartic-mirror"}; }

std::optional<Fan> exampleFan(const std::string& name) {
  if (name == "p3") return projectiveSpaceFan();
  if (name == "conifold") return resolvedConifoldFan();
  if (name == "p1xp1xp1") return p1CubedFan();
  if (name == "quartic-mirror") return quarticMirrorFan();
  return std::nullopt;
}

std::optional<DecoratedGraph> exampleGraph(const std::string& name) {
  if (name == "theta") return thetaGraph();
  if (auto fan = exampleFan(name)) return boundaryGraph(*fan);
  return std::nullopt;
}

}  // namespace ncsing
