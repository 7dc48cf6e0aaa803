#pragma once

#include <string>

#include "np4g/network.hpp"

namespace np4g {

/// Graphviz rendering of a network with the usual drawing conventions:
/// start "S", object nodes show their string, split "split", sum "+",
/// equal "==", gate an unlabeled circle, ADFs their registry name.
/// Edges are annotated with the input slot they feed.
std::string export_dot(const Network& net, const AdfRegistry& registry);

} // namespace np4g
