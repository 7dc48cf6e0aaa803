#pragma once

#include <stdexcept>
#include <string>

#include "np4g/network.hpp"

namespace np4g {

/// Raised when a network or registry document cannot be decoded.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Canonical JSON document for one network. Fields appear in a fixed
/// order, so re-serializing a loaded document reproduces it byte for
/// byte.
std::string serialize(const Network& net);

/// Inverse of serialize(). Rejects unknown node kinds, duplicate ids,
/// dangling input references, and malformed documents.
Network deserialize_network(const std::string& doc);

std::string serialize(const AdfRegistry& registry);
AdfRegistry deserialize_registry(const std::string& doc);

} // namespace np4g
