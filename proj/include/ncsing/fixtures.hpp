#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncsing/graph.hpp"
#include "ncsing/toric.hpp"

namespace ncsing {

/// Two vertices joined by three compact edges with planar cyclic orders.
DecoratedGraph thetaGraph(const std::vector<std::int64_t>& twists = {0, 0, 0});

/// One vertex with three legs: a single pair of pants.
DecoratedGraph tripodGraph();

/// Built-in examples: theta, p3, conifold, p1xp1xp1, quartic-mirror.
std::vector<std::string> exampleNames();
std::optional<Fan> exampleFan(const std::string& name);
/// Fans are converted with boundaryGraph; "theta" is the theta graph.
std::optional<DecoratedGraph> exampleGraph(const std::string& name);

}  // namespace ncsing
