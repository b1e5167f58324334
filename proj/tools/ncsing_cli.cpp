// ncsing command line front end. Every command except `toric quartic-mirror`
// prints a RunReport: {"command", "diagnostics", "inputDigest", "result"}.
// Exit codes: 0 success, 1 domain error or violations, 2 I/O or parse error.
#include <CLI11.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "ncsing/category.hpp"
#include "ncsing/descent.hpp"
#include "ncsing/error.hpp"
#include "ncsing/fixtures.hpp"
#include "ncsing/json_io.hpp"
#include "ncsing/surface.hpp"
#include "ncsing/topology.hpp"
#include "ncsing/toric.hpp"

namespace {

using ncsing::Json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string sha256Hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return "sha256:" + out.str();
}

std::string readInput(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  buffer << in.rdbuf();
  return buffer.str();
}

Json parseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ncsing::Error(ncsing::ErrorCode::ParseError, e.what());
  }
}

/// Raw input bytes plus parsed JSON, from a file, stdin or a built-in example.
struct Input {
  std::string bytes;
  Json json;
};

Input loadInput(const std::string& path, const std::string& example, bool wantFan) {
  if (!example.empty()) {
    Json j;
    if (wantFan) {
      const auto fan = ncsing::exampleFan(example);
      if (!fan) throw ncsing::Error(ncsing::ErrorCode::InvalidArgument, "no built-in fan named '" + example + "'");
      j = ncsing::toJson(*fan);
    } else {
      const auto graph = ncsing::exampleGraph(example);
      if (!graph) throw ncsing::Error(ncsing::ErrorCode::InvalidArgument, "no built-in example named '" + example + "'");
      j = ncsing::toJson(*graph);
    }
    return {j.dump(), j};
  }
  if (path.empty()) throw IoError("no input given (pass a path, '-' for stdin, or --example)");
  std::string bytes = readInput(path);
  Json j = parseJson(bytes);
  return {std::move(bytes), std::move(j)};
}

/// The graph (or diagram) object inside a bare graph file or an extract report.
const Json& graphPayload(const Json& j) {
  if (j.is_object() && j.contains("result") && j["result"].is_object() && j["result"].contains("graph"))
    return j["result"]["graph"];
  return j;
}

struct Report {
  std::string command;
  std::string digest;
  Json result = Json::object();
  std::vector<std::string> diagnostics;

  Json json() const {
    return {{"command", command}, {"inputDigest", digest}, {"result", result}, {"diagnostics", diagnostics}};
  }
};

void emit(const Json& j, const std::string& outputPath) {
  const std::string text = j.dump(2) + "\n";
  if (outputPath.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(outputPath, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + outputPath);
}

int cmdValidate(const Input& in, Report& report) {
  const Json& j = graphPayload(in.json);
  if (j.is_object() && j.contains("rays")) {
    report.result["kind"] = "fan";
    report.diagnostics = ncsing::validateFan(ncsing::fanFromJson(j));
  } else {
    report.result["kind"] = "graph";
    const auto graph = ncsing::graphFromJson(j);
    report.diagnostics = ncsing::validateGraph(graph);
    if (report.diagnostics.empty() && j.contains("transitions")) {
      report.result["kind"] = "diagram";
      try {
        ncsing::diagramFromJson(j);
      } catch (const ncsing::Error& e) {
        if (e.code() == ncsing::ErrorCode::ParseError) throw;
        report.diagnostics.emplace_back(e.what());
      }
    }
  }
  report.result["violations"] = report.diagnostics;
  report.result["valid"] = report.diagnostics.empty();
  return report.diagnostics.empty() ? 0 : 1;
}

int cmdToricExtract(const Input& in, Report& report) {
  const auto fan = ncsing::fanFromJson(in.json);
  if (auto violations = ncsing::validateFan(fan); !violations.empty()) {
    report.diagnostics = std::move(violations);
    return 1;
  }
  const auto graph = ncsing::boundaryGraph(fan);
  Json walls = Json::array();
  std::map<std::int64_t, long> defects;
  long interior = 0;
  for (const auto& wall : ncsing::fanWalls(fan)) {
    const auto data = ncsing::wallData(fan, wall);
    if (data.interior()) {
      ++interior;
      ++defects[*data.defect];
    }
    walls.push_back(ncsing::toJson(data));
  }
  Json divisors = Json::array();
  std::map<std::pair<bool, std::vector<std::int64_t>>, long> classes;
  for (const auto& d : ncsing::divisorClassification(fan)) {
    divisors.push_back(ncsing::toJson(d));
    ++classes[{d.complete, d.selfIntersections}];
  }
  Json classTable = Json::array();
  for (const auto& [key, count] : classes)
    classTable.push_back({{"complete", key.first}, {"selfIntersections", key.second}, {"count", count}});
  Json histogram = Json::object();
  for (const auto& [n, count] : defects) histogram[std::to_string(n)] = count;

  report.result = {{"graph", ncsing::toJson(graph)},
                   {"walls", std::move(walls)},
                   {"divisors", std::move(divisors)},
                   {"summary",
                    {{"rays", fan.rays.size()},
                     {"cones", fan.cones.size()},
                     {"walls", ncsing::fanWalls(fan).size()},
                     {"interiorWalls", interior},
                     {"defects", std::move(histogram)},
                     {"divisorClasses", std::move(classTable)}}}};
  return 0;
}

struct AnalyzeFlags {
  bool descent = false, pic = false, twoPeriodic = false, surface = false, h1 = false, pencil = false, dehn = false,
       all = false;

  bool none() const { return !(descent || pic || twoPeriodic || surface || h1 || pencil || dehn); }
};

int cmdAnalyze(const Input& in, const AnalyzeFlags& requested, Report& report) {
  AnalyzeFlags f = requested;
  if (f.all || f.none()) f.descent = f.pic = f.twoPeriodic = f.surface = f.h1 = f.pencil = f.dehn = true;

  const Json& j = graphPayload(in.json);
  const auto graph = ncsing::graphFromJson(j);
  if (auto violations = ncsing::validateGraph(graph); !violations.empty()) {
    report.diagnostics = std::move(violations);
    return 1;
  }
  int status = 0;
  // Each section runs independently so one failed precondition does not hide the rest.
  auto section = [&](const char* name, auto&& body) {
    try {
      report.result[name] = body();
    } catch (const ncsing::Error& e) {
      if (e.code() == ncsing::ErrorCode::ParseError) throw;
      report.diagnostics.push_back(std::string(name) + ": " + e.what());
      status = 1;
    }
  };

  std::optional<ncsing::DescentDiagram> diagram;
  auto needDiagram = [&]() -> const ncsing::DescentDiagram& {
    if (!diagram) diagram = j.contains("transitions") ? ncsing::diagramFromJson(j) : ncsing::assembleDiagram(graph);
    return *diagram;
  };
  if (f.descent) section("descent", [&] { return ncsing::toJson(needDiagram()); });
  if (f.pic)
    section("pic", [&] {
      Json out = ncsing::toJson(ncsing::picInvariants(needDiagram()));
      out["globalTwist"] = ncsing::toJson(ncsing::globalTwistAutoequivalence(needDiagram()));
      return out;
    });
  if (f.twoPeriodic) section("twoPeriodic", [&] { return Json(ncsing::isTwoPeriodic(needDiagram())); });
  if (f.surface)
    section("surface", [&] {
      Json out = ncsing::toJson(ncsing::dualSurface(graph));
      out["orientability"] = ncsing::toJson(ncsing::orientability(graph));
      return out;
    });
  if (f.h1) section("h1", [&] { return ncsing::toJson(ncsing::h1GraphManifold(graph)); });
  if (f.pencil) section("nodalCurve", [&] { return ncsing::toJson(ncsing::pencilLocalization(graph)); });
  if (f.dehn) section("dehnTwists", [&] { return ncsing::toJson(ncsing::dehnTwistRecord(graph)); });
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of normal-crossings surfaces with graph-like singular locus"};
  app.require_subcommand(1);
  std::string outputPath;
  app.add_option("--output,-o", outputPath, "Write the report to this file instead of stdout");

  std::string validatePath;
  auto* validate = app.add_subcommand("validate", "Check a graph, diagram or fan JSON file");
  validate->add_option("input", validatePath, "Input file, or - for stdin")->required();

  auto* toric = app.add_subcommand("toric", "Toric boundary extraction");
  toric->require_subcommand(1);
  std::string fanPath = "-", fanExample;
  auto* extract = toric->add_subcommand("extract", "Boundary graph, wall table and divisor classes of a fan");
  extract->add_option("input", fanPath, "Fan file, or - for stdin (default)");
  extract->add_option("--example", fanExample, "Built-in fan: p3, conifold, p1xp1xp1, quartic-mirror");
  auto* quartic = toric->add_subcommand("quartic-mirror", "Print the quartic mirror fan JSON");

  std::string graphPath, graphExample;
  AnalyzeFlags flags;
  auto* analyze = app.add_subcommand("analyze", "Descent, homology and pencil analyses of a graph");
  analyze->add_option("input", graphPath, "Graph or diagram file, or - for stdin");
  analyze->add_option("--example", graphExample, "Built-in graph: theta, p3, conifold, p1xp1xp1, quartic-mirror");
  analyze->add_flag("--descent", flags.descent, "Assemble the descent diagram");
  analyze->add_flag("--pic", flags.pic, "Pic invariants and the global twist class");
  analyze->add_flag("--two-periodic", flags.twoPeriodic, "Whether a global 2-periodic structure exists");
  analyze->add_flag("--surface", flags.surface, "Dual surface and orientability");
  analyze->add_flag("--h1", flags.h1, "First homology of the twisted graph manifold");
  analyze->add_flag("--pencil", flags.pencil, "Nodal curve of the pencil localization");
  analyze->add_flag("--dehn", flags.dehn, "Dehn twist record");
  analyze->add_flag("--all", flags.all, "Every section (the default when no section flag is given)");
  for (auto* sub : {validate, extract, quartic, analyze})
    sub->add_option("--output,-o", outputPath, "Write the report to this file instead of stdout");

  CLI11_PARSE(app, argc, argv);

  Report report;
  try {
    if (quartic->parsed()) {
      emit(ncsing::toJson(ncsing::quarticMirrorFan()), outputPath);
      return 0;
    }
    int status = 0;
    if (validate->parsed()) {
      report.command = "validate";
      const auto in = loadInput(validatePath, "", false);
      report.digest = sha256Hex(in.bytes);
      status = cmdValidate(in, report);
    } else if (extract->parsed()) {
      report.command = "toric extract";
      const auto in = loadInput(fanPath, fanExample, true);
      report.digest = sha256Hex(in.bytes);
      status = cmdToricExtract(in, report);
    } else {
      report.command = "analyze";
      const auto in = loadInput(graphPath, graphExample, false);
      report.digest = sha256Hex(in.bytes);
      status = cmdAnalyze(in, flags, report);
    }
    emit(report.json(), outputPath);
    for (const auto& d : report.diagnostics) std::cerr << d << "\n";
    return status;
  } catch (const IoError& e) {
    std::cerr << "IoError: " << e.what() << "\n";
    return 2;
  } catch (const ncsing::Error& e) {
    std::cerr << e.what() << "\n";
    if (e.code() == ncsing::ErrorCode::ParseError) return 2;
    report.diagnostics.emplace_back(e.what());
    emit(report.json(), outputPath);
    return 1;
  }
}
