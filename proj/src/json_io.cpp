#include "ncsing/json_io.hpp"

#include <limits>

#include "ncsing/error.hpp"

namespace ncsing {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::int64_t asInt(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

NonzeroRational asScalar(const Json& j, const char* what) {
  if (j.is_number_integer()) return NonzeroRational(j.get<std::int64_t>());
  if (!j.is_string()) throw Error(ErrorCode::ParseError, std::string(what) + " must be a \"p/q\" string");
  try {
    return NonzeroRational::parse(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

const Json& asArray(const Json& j, const char* what, std::size_t size = 0) {
  if (!j.is_array() || (size != 0 && j.size() != size))
    throw Error(ErrorCode::ParseError, std::string(what) + " must be an array" +
                                           (size ? " of length " + std::to_string(size) : std::string()));
  return j;
}

int asHalf(const Json& j) {
  const auto v = asInt(j, "half-edge id");
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw Error(ErrorCode::ParseError, "half-edge id out of range");
  return static_cast<int>(v);
}

std::size_t asIndex(const Json& j, const char* what) {
  const auto v = asInt(j, what);
  if (v < 0) throw Error(ErrorCode::ParseError, std::string(what) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

}  // namespace

Json toJson(const DecoratedGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices) vertices.push_back({{"halfEdges", v.halfEdges}});
  Json edges = Json::array();
  for (const auto& edge : g.edges) {
    if (const auto* leg = std::get_if<Leg>(&edge)) {
      edges.push_back({{"kind", "leg"}, {"end", leg->half}});
      continue;
    }
    const auto& c = std::get<CompactEdge>(edge);
    Json e = {{"kind", "compact"},
              {"ends", {c.halfA, c.halfB}},
              {"twist", c.twist},
              {"holonomy", c.holonomy.str()},
              {"baseScalar", c.baseScalar.str()},
              {"reversing", c.reversing}};
    if (c.selfIntersections) e["selfIntersections"] = {c.selfIntersections->first, c.selfIntersections->second};
    edges.push_back(std::move(e));
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

DecoratedGraph graphFromJson(const Json& j) {
  DecoratedGraph g;
  for (const auto& v : asArray(field(j, "vertices"), "vertices")) {
    Vertex vertex;
    for (const auto& h : asArray(field(v, "halfEdges"), "halfEdges")) vertex.halfEdges.push_back(asHalf(h));
    g.vertices.push_back(std::move(vertex));
  }
  for (const auto& e : asArray(field(j, "edges"), "edges")) {
    const auto& kind = field(e, "kind");
    if (!kind.is_string()) throw Error(ErrorCode::ParseError, "edge kind must be a string");
    if (kind == "leg") {
      g.edges.emplace_back(Leg{asHalf(field(e, "end"))});
      continue;
    }
    if (kind != "compact") throw Error(ErrorCode::ParseError, "unknown edge kind " + kind.dump());
    CompactEdge c;
    const auto& ends = asArray(field(e, "ends"), "ends", 2);
    c.halfA = asHalf(ends[0]);
    c.halfB = asHalf(ends[1]);
    if (e.contains("twist")) c.twist = asInt(e["twist"], "twist");
    if (e.contains("holonomy")) c.holonomy = asScalar(e["holonomy"], "holonomy");
    if (e.contains("baseScalar")) c.baseScalar = asScalar(e["baseScalar"], "baseScalar");
    if (e.contains("reversing")) {
      if (!e["reversing"].is_boolean()) throw Error(ErrorCode::ParseError, "reversing must be a boolean");
      c.reversing = e["reversing"].get<bool>();
    }
    if (e.contains("selfIntersections") && !e["selfIntersections"].is_null()) {
      const auto& si = asArray(e["selfIntersections"], "selfIntersections", 2);
      c.selfIntersections = std::make_pair(asInt(si[0], "selfIntersections"), asInt(si[1], "selfIntersections"));
    }
    g.edges.emplace_back(c);
  }
  return g;
}

Json toJson(const Fan& f) {
  Json rays = Json::array();
  for (const auto& r : f.rays) rays.push_back({r[0], r[1], r[2]});
  Json cones = Json::array();
  for (const auto& c : f.cones) cones.push_back({c[0], c[1], c[2]});
  return {{"rays", std::move(rays)}, {"cones", std::move(cones)}};
}

Fan fanFromJson(const Json& j) {
  Fan f;
  for (const auto& r : asArray(field(j, "rays"), "rays")) {
    asArray(r, "ray", 3);
    f.rays.push_back({asInt(r[0], "ray"), asInt(r[1], "ray"), asInt(r[2], "ray")});
  }
  for (const auto& c : asArray(field(j, "cones"), "cones")) {
    asArray(c, "cone", 3);
    f.cones.push_back({asIndex(c[0], "cone"), asIndex(c[1], "cone"), asIndex(c[2], "cone")});
  }
  return f;
}

Json toJson(const DescentDiagram& d) {
  Json j = toJson(d.graph);
  Json charts = Json::array();
  for (const auto& c : d.charts)
    charts.push_back({{"cyclicOrder", c.cyclicOrder}, {"trivialization", c.trivialization.t.str()}});
  Json transitions = Json::array();
  for (const auto& t : d.transitions)
    transitions.push_back({{"edge", t.edge},
                           {"direction", {t.from, t.to}},
                           {"eps", t.aut.eps},
                           {"n", t.aut.n},
                           {"lamX", t.aut.lamX.str()},
                           {"lamU", t.aut.lamU.str()},
                           {"shift", t.aut.shift.bit}});
  j["charts"] = std::move(charts);
  j["transitions"] = std::move(transitions);
  return j;
}

DescentDiagram diagramFromJson(const Json& j) {
  const DecoratedGraph g = graphFromJson(j);
  std::vector<TwoPerV> charts;
  if (j.contains("charts"))
    for (const auto& c : asArray(j["charts"], "charts"))
      charts.push_back({asScalar(field(c, "trivialization"), "trivialization")});
  if (!j.contains("transitions")) return assembleDiagram(g, charts);
  std::vector<EdgeTransition> transitions;
  for (const auto& t : asArray(j["transitions"], "transitions")) {
    EdgeTransition tr;
    tr.edge = asIndex(field(t, "edge"), "edge");
    const auto& dir = asArray(field(t, "direction"), "direction", 2);
    tr.from = asIndex(dir[0], "direction");
    tr.to = asIndex(dir[1], "direction");
    tr.aut.eps = static_cast<int>(asInt(field(t, "eps"), "eps"));
    tr.aut.n = asInt(field(t, "n"), "n");
    tr.aut.lamX = asScalar(field(t, "lamX"), "lamX");
    tr.aut.lamU = asScalar(field(t, "lamU"), "lamU");
    tr.aut.shift = Shift{static_cast<int>(asInt(field(t, "shift"), "shift") & 1)};
    transitions.push_back(std::move(tr));
  }
  return assembleDiagram(g, charts, transitions);
}

namespace {

Json scalars(const std::vector<NonzeroRational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

}  // namespace

Json toJson(const PicInvariants& p) {
  return {{"degreeVector", p.degreeVector},
          {"betaHolonomies", scalars(p.betaHolonomies)},
          {"alphaHolonomies", scalars(p.alphaHolonomies)},
          {"trivial", p.trivial()}};
}

Json toJson(const DualSurface& s) {
  Json walks = Json::array();
  for (const auto& walk : s.faceWalks) {
    Json w = Json::array();
    for (const auto& step : walk) w.push_back({{"half", step.half}, {"orientation", step.orientation}});
    walks.push_back(std::move(w));
  }
  return {{"orientable", s.orientable},
          {"genus", s.genus},
          {"boundaryCircles", s.boundaryCircles},
          {"eulerCharacteristic", s.eulerCharacteristic},
          {"faceWalks", std::move(walks)}};
}

Json toJson(const OrientabilityReport& r) {
  return {{"orientable", r.orientable}, {"w1OnCycles", r.w1OnCycles}};
}

Json toJson(const AbelianGroup& h1) {
  Json torsion = Json::array();
  for (const auto& t : h1.torsion) {
    if (t <= std::numeric_limits<std::int64_t>::max()) torsion.push_back(static_cast<std::int64_t>(t));
    else torsion.push_back(t.str());
  }
  return {{"free", h1.freeRank}, {"torsion", std::move(torsion)}};
}

Json toJson(const NodalCurveReport& r) {
  Json components = Json::array();
  for (const auto& c : r.components)
    components.push_back(
        {{"genus", c.genus}, {"boundaryCount", c.boundaryCount}, {"sphere", c.sphere}, {"vertices", c.vertices}});
  Json incidence = Json::array();
  for (const auto& i : r.incidence) incidence.push_back({{"components", {i.first, i.second}}, {"nodes", i.count}});
  return {{"components", std::move(components)},
          {"nodes", r.nodes},
          {"incidence", std::move(incidence)},
          {"sphereComponents", r.sphereComponents}};
}

Json toJson(const std::vector<DehnTwist>& twists) {
  Json out = Json::array();
  for (const auto& t : twists) out.push_back({{"edge", t.edge}, {"multiplicity", t.multiplicity}});
  return out;
}

Json toJson(const WallReport& w) {
  Json j = {{"wall", {w.wall.first, w.wall.second}}, {"adjacentCones", w.adjacentCones}, {"interior", w.interior()}};
  if (w.selfIntersectionFirst)
    j["selfIntersections"] = {*w.selfIntersectionFirst, *w.selfIntersectionSecond};
  if (w.defect) j["defect"] = *w.defect;
  if (w.anticanonicalDegree) j["anticanonicalDegree"] = *w.anticanonicalDegree;
  return j;
}

Json toJson(const DivisorDescriptor& d) {
  return {{"ray", d.ray}, {"complete", d.complete}, {"selfIntersections", d.selfIntersections}};
}

Json toJson(const FiniteCategory& c) {
  Json arrows = Json::array();
  for (const auto& a : c.arrows) arrows.push_back({{"source", a.source}, {"target", a.target}, {"label", a.label}});
  return {{"objects", c.objects}, {"arrows", std::move(arrows)}};
}

}  // namespace ncsing
