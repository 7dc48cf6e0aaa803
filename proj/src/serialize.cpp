#include "np4g/serialize.hpp"

#include <unordered_set>

#include <json.hpp>

namespace np4g {

namespace {

using json = nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

json node_to_json(const Node& node) {
  json j;
  j["id"] = node.id;
  switch (node.kind.tag) {
    case NodeKind::Tag::start:
      j["kind"] = "start";
      return j;
    case NodeKind::Tag::object:
      j["kind"] = "object";
      j["value"] = node.kind.object_value;
      return j;
    case NodeKind::Tag::primitive:
      j["kind"] = op_name(node.kind.op);
      break;
    case NodeKind::Tag::adf:
      j["kind"] = "adf";
      j["adf"] = node.kind.adf_index;
      break;
  }
  j["inputs"] = node.inputs;
  return j;
}

json network_to_json(const Network& net) {
  json j;
  j["format_version"] = kFormatVersion;
  j["start_id"] = net.start_id;
  j["nodes"] = json::array();
  for (const auto& node : net.nodes) j["nodes"].push_back(node_to_json(node));
  j["adf_refs"] = net.adf_refs;
  return j;
}

int require_int(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(where + ": missing or non-integer \"" + key + "\"");
  return j[key].get<int>();
}

Node node_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("node entry is not an object");
  Node node;
  node.id = require_int(j, "id", "node");
  const std::string where = "node " + std::to_string(node.id);
  if (!j.contains("kind") || !j["kind"].is_string())
    throw ParseError(where + ": missing or non-string \"kind\"");
  const std::string kind = j["kind"].get<std::string>();

  if (kind == "start") {
    node.kind = NodeKind::start();
  } else if (kind == "object") {
    if (!j.contains("value") || !j["value"].is_string())
      throw ParseError(where + ": object node needs a string \"value\"");
    node.kind = NodeKind::object(j["value"].get<std::string>());
  } else if (kind == "split") {
    node.kind = NodeKind::primitive(Op::split);
  } else if (kind == "sum") {
    node.kind = NodeKind::primitive(Op::sum);
  } else if (kind == "equal") {
    node.kind = NodeKind::primitive(Op::equal);
  } else if (kind == "gate") {
    node.kind = NodeKind::primitive(Op::gate);
  } else if (kind == "adf") {
    int index = require_int(j, "adf", where);
    if (index < 0) throw ParseError(where + ": negative adf index");
    node.kind = NodeKind::adf(index);
  } else {
    throw ParseError(where + ": unknown node kind \"" + kind + "\"");
  }

  if (j.contains("inputs")) {
    if (!j["inputs"].is_array()) throw ParseError(where + ": \"inputs\" is not an array");
    for (const auto& u : j["inputs"]) {
      if (!u.is_number_integer()) throw ParseError(where + ": non-integer input reference");
      node.inputs.push_back(u.get<int>());
    }
  }
  if (static_cast<int>(node.inputs.size()) != node.kind.arity())
    throw ParseError(where + ": expected " + std::to_string(node.kind.arity()) + " inputs, got " +
                     std::to_string(node.inputs.size()));
  return node;
}

Network network_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("network document is not an object");
  if (require_int(j, "format_version", "network") != kFormatVersion)
    throw ParseError("unsupported format_version");

  Network net;
  net.start_id = require_int(j, "start_id", "network");
  if (!j.contains("nodes") || !j["nodes"].is_array())
    throw ParseError("network: missing \"nodes\" array");
  for (const auto& n : j["nodes"]) net.nodes.push_back(node_from_json(n));
  if (j.contains("adf_refs")) {
    if (!j["adf_refs"].is_array()) throw ParseError("network: \"adf_refs\" is not an array");
    for (const auto& r : j["adf_refs"]) {
      if (!r.is_number_integer() || r.get<int>() < 0)
        throw ParseError("network: adf_refs entries must be non-negative integers");
      net.adf_refs.push_back(r.get<int>());
    }
  }

  std::unordered_set<NodeId> ids;
  for (const auto& node : net.nodes) {
    if (node.id < 0) throw ParseError("node " + std::to_string(node.id) + ": negative id");
    if (!ids.insert(node.id).second)
      throw ParseError("duplicate node id " + std::to_string(node.id));
  }
  std::unordered_set<int> refs(net.adf_refs.begin(), net.adf_refs.end());
  for (const auto& node : net.nodes) {
    for (NodeId u : node.inputs)
      if (!ids.count(u))
        throw ParseError("node " + std::to_string(node.id) + ": dangling input reference " +
                         std::to_string(u));
    if (node.kind.tag == NodeKind::Tag::adf && !refs.count(node.kind.adf_index))
      throw ParseError("node " + std::to_string(node.id) + ": adf index " +
                       std::to_string(node.kind.adf_index) + " missing from adf_refs");
  }
  if (!ids.count(net.start_id)) throw ParseError("start_id does not name a node");
  return net;
}

json parse(const std::string& doc) {
  json j = json::parse(doc, nullptr, false);
  if (j.is_discarded()) throw ParseError("document is not valid JSON");
  return j;
}

} // namespace

std::string serialize(const Network& net) { return network_to_json(net).dump(2) + "\n"; }

Network deserialize_network(const std::string& doc) { return network_from_json(parse(doc)); }

std::string serialize(const AdfRegistry& registry) {
  json j;
  j["format_version"] = kFormatVersion;
  j["adfs"] = json::array();
  for (const auto& entry : registry.entries) j["adfs"].push_back(network_to_json(entry));
  return j.dump(2) + "\n";
}

AdfRegistry deserialize_registry(const std::string& doc) {
  json j = parse(doc);
  if (!j.is_object()) throw ParseError("registry document is not an object");
  if (require_int(j, "format_version", "registry") != kFormatVersion)
    throw ParseError("unsupported format_version");
  if (!j.contains("adfs") || !j["adfs"].is_array())
    throw ParseError("registry: missing \"adfs\" array");
  AdfRegistry registry;
  for (const auto& entry : j["adfs"]) {
    try {
      registry.push(network_from_json(entry));
    } catch (const ConfigError& e) {
      throw ParseError(std::string("registry: ") + e.what());
    }
  }
  return registry;
}

} // namespace np4g
