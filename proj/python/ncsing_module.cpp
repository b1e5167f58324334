// Thin bindings: structured data crosses the boundary as JSON text and the
// python package turns it into dicts. Matrices cross as lists of python ints.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncsing/descent.hpp"
#include "ncsing/error.hpp"
#include "ncsing/fixtures.hpp"
#include "ncsing/int_matrix.hpp"
#include "ncsing/json_io.hpp"
#include "ncsing/surface.hpp"
#include "ncsing/topology.hpp"
#include "ncsing/toric.hpp"

namespace py = pybind11;
using ncsing::Json;

namespace {

ncsing::IntMatrix matrixFromPython(const std::vector<std::vector<py::int_>>& rows) {
  std::vector<std::vector<ncsing::Integer>> out;
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != cols) throw ncsing::Error(ncsing::ErrorCode::InvalidArgument, "ragged matrix");
    auto& r = out.emplace_back();
    for (const auto& x : row) r.emplace_back(std::string(py::str(x)));
  }
  return ncsing::IntMatrix::fromRows(out, cols);
}

py::int_ toPython(const ncsing::Integer& x) { return py::int_(py::str(x.str())); }

std::string graphTask(const std::string& graphJson, Json (*task)(const ncsing::DecoratedGraph&)) {
  return task(ncsing::graphFromJson(Json::parse(graphJson))).dump();
}

}  // namespace

PYBIND11_MODULE(_ncsing, m) {
  m.doc() = "Exact invariants of normal-crossings surfaces (native core)";

  static py::exception<ncsing::Error> error(m, "NcsingError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ncsing::Error& e) {
      py::set_error(error, e.what());
    } catch (const Json::exception& e) {
      py::set_error(error, (std::string("ParseError: ") + e.what()).c_str());
    }
  });

  m.def("smith_diagonal", [](const std::vector<std::vector<py::int_>>& rows) {
    std::vector<py::int_> out;
    for (const auto& d : ncsing::snf(matrixFromPython(rows)).diagonal) out.push_back(toPython(d));
    return out;
  });
  m.def("cokernel", [](const std::vector<std::vector<py::int_>>& rows) {
    const auto group = ncsing::cokernelAbelianGroup(matrixFromPython(rows));
    std::vector<py::int_> torsion;
    for (const auto& t : group.torsion) torsion.push_back(toPython(t));
    return py::make_tuple(group.freeRank, torsion);
  });

  m.def("example_names", &ncsing::exampleNames);
  m.def("example_graph", [](const std::string& name) {
    const auto g = ncsing::exampleGraph(name);
    if (!g) throw ncsing::Error(ncsing::ErrorCode::InvalidArgument, "unknown example " + name);
    return ncsing::toJson(*g).dump();
  });
  m.def("example_fan", [](const std::string& name) {
    const auto f = ncsing::exampleFan(name);
    if (!f) throw ncsing::Error(ncsing::ErrorCode::InvalidArgument, "unknown fan " + name);
    return ncsing::toJson(*f).dump();
  });

  m.def("validate_graph", [](const std::string& g) { return ncsing::validateGraph(ncsing::graphFromJson(Json::parse(g))); });
  m.def("validate_fan", [](const std::string& f) { return ncsing::validateFan(ncsing::fanFromJson(Json::parse(f))); });
  m.def("dual_surface", [](const std::string& g) {
    return graphTask(g, [](const ncsing::DecoratedGraph& x) { return ncsing::toJson(ncsing::dualSurface(x)); });
  });
  m.def("h1_graph_manifold", [](const std::string& g) {
    return graphTask(g, [](const ncsing::DecoratedGraph& x) { return ncsing::toJson(ncsing::h1GraphManifold(x)); });
  });
  m.def("pencil_localization", [](const std::string& g) {
    return graphTask(g, [](const ncsing::DecoratedGraph& x) { return ncsing::toJson(ncsing::pencilLocalization(x)); });
  });
  m.def("dehn_twists", [](const std::string& g) {
    return graphTask(g, [](const ncsing::DecoratedGraph& x) { return ncsing::toJson(ncsing::dehnTwistRecord(x)); });
  });
  m.def("assemble_diagram", [](const std::string& g) {
    const Json j = Json::parse(g);
    const auto d = j.contains("transitions") ? ncsing::diagramFromJson(j) : ncsing::assembleDiagram(ncsing::graphFromJson(j));
    return ncsing::toJson(d).dump();
  });
  m.def("pic_invariants", [](const std::string& d) {
    return ncsing::toJson(ncsing::picInvariants(ncsing::diagramFromJson(Json::parse(d)))).dump();
  });
  m.def("is_two_periodic", [](const std::string& d) { return ncsing::isTwoPeriodic(ncsing::diagramFromJson(Json::parse(d))); });
  m.def("boundary_graph", [](const std::string& f) {
    return ncsing::toJson(ncsing::boundaryGraph(ncsing::fanFromJson(Json::parse(f)))).dump();
  });
  m.def("wall_reports", [](const std::string& f) {
    const auto fan = ncsing::fanFromJson(Json::parse(f));
    Json out = Json::array();
    for (const auto& w : ncsing::fanWalls(fan)) out.push_back(ncsing::toJson(ncsing::wallData(fan, w)));
    return out.dump();
  });
  m.def("divisor_classification", [](const std::string& f) {
    Json out = Json::array();
    for (const auto& d : ncsing::divisorClassification(ncsing::fanFromJson(Json::parse(f)))) out.push_back(ncsing::toJson(d));
    return out.dump();
  });
}
