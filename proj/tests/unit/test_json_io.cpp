#include <doctest.h>

#include "ncsing/error.hpp"
#include "ncsing/fixtures.hpp"
#include "ncsing/json_io.hpp"
#include "ncsing/toric.hpp"

using ncsing::Json;

namespace {

ncsing::ErrorCode codeOf(auto&& f) {
  try {
    f();
  } catch (const ncsing::Error& e) {
    return e.code();
  }
  FAIL("expected an ncsing::Error");
  return ncsing::ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("graph JSON round trip") {
  auto g = ncsing::thetaGraph({1, 0, 2});
  g.compact(0).holonomy = ncsing::NonzeroRational::parse("-3/4");
  g.compact(1).selfIntersections = std::make_pair(-1, -1);
  const Json j = ncsing::toJson(g);
  CHECK(j["edges"][0]["holonomy"] == "-3/4");
  CHECK(j["edges"][0]["baseScalar"] == "1/1");
  CHECK(ncsing::graphFromJson(j) == g);
  CHECK(ncsing::graphFromJson(Json::parse(j.dump())) == g);

  const auto quartic = *ncsing::exampleGraph("quartic-mirror");
  CHECK(ncsing::graphFromJson(ncsing::toJson(quartic)) == quartic);
}

TEST_CASE("graph JSON defaults and errors") {
  const Json minimal = Json::parse(R"({"vertices":[{"halfEdges":[0,1,2]}],
    "edges":[{"kind":"compact","ends":[0,1]},{"kind":"leg","end":2}]})");
  const auto g = ncsing::graphFromJson(minimal);
  CHECK(g.compact(0).twist == 0);
  CHECK(g.compact(0).holonomy == ncsing::NonzeroRational(1));
  CHECK(!g.compact(0).reversing);
  CHECK(!g.compact(0).selfIntersections);

  using ncsing::ErrorCode;
  CHECK(codeOf([] { ncsing::graphFromJson(Json::parse(R"({"edges":[]})")); }) == ErrorCode::ParseError);
  CHECK(codeOf([] { ncsing::graphFromJson(Json::parse(R"({"vertices":[{"halfEdges":["a"]}],"edges":[]})")); }) ==
        ErrorCode::ParseError);
  CHECK(codeOf([] {
          ncsing::graphFromJson(Json::parse(R"({"vertices":[],"edges":[{"kind":"compact","ends":[0,1],"holonomy":"0"}]})"));
        }) == ErrorCode::ParseError);
  CHECK(codeOf([] { ncsing::graphFromJson(Json::parse(R"({"vertices":[],"edges":[{"kind":"loop"}]})")); }) ==
        ErrorCode::ParseError);
  CHECK(codeOf([] { ncsing::graphFromJson(Json::parse("[1,2]")); }) == ErrorCode::ParseError);
}

TEST_CASE("fan JSON round trip") {
  const auto f = ncsing::quarticMirrorFan();
  const auto back = ncsing::fanFromJson(ncsing::toJson(f));
  CHECK(back.rays == f.rays);
  CHECK(back.cones == f.cones);
  CHECK(codeOf([] { ncsing::fanFromJson(Json::parse(R"({"rays":[[1,0]],"cones":[]})")); }) ==
        ncsing::ErrorCode::ParseError);
  CHECK(codeOf([] { ncsing::fanFromJson(Json::parse(R"({"rays":[],"cones":[[0,1,-2]]})")); }) ==
        ncsing::ErrorCode::ParseError);
}

TEST_CASE("diagram JSON round trip and validation") {
  const auto d = ncsing::assembleDiagram(
      ncsing::thetaGraph({0, 1, 0}), std::vector<ncsing::TwoPerV>{{3}, {ncsing::NonzeroRational::parse("1/2")}});
  Json j = ncsing::toJson(d);
  const auto back = ncsing::diagramFromJson(j);
  CHECK(back.transitions == d.transitions);
  CHECK(back.charts == d.charts);

  j["transitions"][1]["n"] = 5;
  CHECK(codeOf([&] { ncsing::diagramFromJson(j); }) == ncsing::ErrorCode::TwistMismatch);
  j["transitions"][1]["n"] = 1;
  j["transitions"][0]["shift"] = 0;
  CHECK(codeOf([&] { ncsing::diagramFromJson(j); }) == ncsing::ErrorCode::TransitionConstraint);
}

TEST_CASE("serialization is deterministic with sorted keys") {
  const auto g = *ncsing::exampleGraph("p3");
  const std::string a = ncsing::toJson(g).dump(), b = ncsing::toJson(g).dump();
  CHECK(a == b);
  CHECK(a.find("\"baseScalar\"") < a.find("\"ends\""));
}
