#pragma once

#include <json.hpp>

#include "ncsing/category.hpp"
#include "ncsing/descent.hpp"
#include "ncsing/surface.hpp"
#include "ncsing/toric.hpp"
#include "ncsing/topology.hpp"

namespace ncsing {

using Json = nlohmann::json;

// Readers throw Error(ParseError) on malformed or ill-typed input. Rationals
// are "p/q" strings; objects use sorted keys so dumps are deterministic.

Json toJson(const DecoratedGraph& g);
DecoratedGraph graphFromJson(const Json& j);

Json toJson(const Fan& f);
Fan fanFromJson(const Json& j);

/// Graph JSON plus "charts" and "transitions".
Json toJson(const DescentDiagram& d);
/// Validates through assembleDiagram; throws its domain errors.
DescentDiagram diagramFromJson(const Json& j);

Json toJson(const PicInvariants& p);
Json toJson(const DualSurface& s);
Json toJson(const OrientabilityReport& r);
Json toJson(const AbelianGroup& h1);
Json toJson(const NodalCurveReport& r);
Json toJson(const std::vector<DehnTwist>& twists);
Json toJson(const WallReport& w);
Json toJson(const DivisorDescriptor& d);
Json toJson(const FiniteCategory& c);

}  // namespace ncsing
