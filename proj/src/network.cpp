#include "np4g/network.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace np4g {

std::string op_name(Op op) {
  switch (op) {
    case Op::split: return "split";
    case Op::sum: return "sum";
    case Op::equal: return "equal";
    case Op::gate: return "gate";
  }
  return "?";
}

int NodeKind::arity() const {
  switch (tag) {
    case Tag::start:
    case Tag::object:
      return 0;
    case Tag::adf:
      return 1;
    case Tag::primitive:
      return op == Op::split ? 1 : 2;
  }
  return 0;
}

const Node* Network::find(NodeId id) const {
  for (const auto& node : nodes)
    if (node.id == id) return &node;
  return nullptr;
}

int Network::edge_count() const {
  int n = 0;
  for (const auto& node : nodes) n += static_cast<int>(node.inputs.size());
  return n;
}

int Network::out_degree(NodeId id) const {
  int n = 0;
  for (const auto& node : nodes)
    for (NodeId u : node.inputs)
      if (u == id) ++n;
  return n;
}

void AdfRegistry::push(Network net) {
  const int position = size();
  for (int ref : net.adf_refs)
    if (ref >= position)
      throw ConfigError("registry entry " + std::to_string(position) + " may not reference " +
                        name_of(ref));
  entries.push_back(std::move(net));
}

std::string ValidationReport::to_string() const {
  if (ok()) return "ok";
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += '\n';
    if (v.node >= 0) out += "node " + std::to_string(v.node) + ": ";
    out += v.message;
  }
  return out;
}

ValidationReport validate(const Network& net) {
  ValidationReport report;
  auto flag = [&](NodeId node, std::string message) {
    report.violations.push_back({node, std::move(message)});
  };

  std::unordered_set<NodeId> ids;
  int start_count = 0;
  for (const auto& node : net.nodes) {
    if (node.id < 0) flag(node.id, "negative id");
    if (!ids.insert(node.id).second) flag(node.id, "duplicate id");
    if (node.kind.tag == NodeKind::Tag::start) {
      ++start_count;
      if (node.id != net.start_id) flag(node.id, "start node id differs from start_id");
    }
  }
  if (start_count != 1)
    flag(-1, "expected exactly one start node, found " + std::to_string(start_count));
  else if (!ids.count(net.start_id))
    flag(-1, "start_id does not name a node");

  std::unordered_set<int> refs(net.adf_refs.begin(), net.adf_refs.end());
  for (const auto& node : net.nodes) {
    const int want = node.kind.arity();
    if (static_cast<int>(node.inputs.size()) != want)
      flag(node.id, "arity mismatch (expected " + std::to_string(want) + ")");
    for (NodeId u : node.inputs) {
      if (u == node.id) flag(node.id, "self-loop");
      if (!ids.count(u)) flag(node.id, "input references unknown node " + std::to_string(u));
    }
    if (node.kind.tag == NodeKind::Tag::adf) {
      if (node.kind.adf_index < 0) flag(node.id, "negative adf index");
      if (!refs.count(node.kind.adf_index))
        flag(node.id, "adf index " + std::to_string(node.kind.adf_index) + " missing from adf_refs");
    }
  }
  return report;
}

ValidationReport validate(const Network& net, const AdfRegistry& registry) {
  ValidationReport report = validate(net);
  for (const auto& node : net.nodes) {
    if (node.kind.tag != NodeKind::Tag::adf) continue;
    if (node.kind.adf_index < 0 || node.kind.adf_index >= registry.size())
      report.violations.push_back(
          {node.id, "adf index " + std::to_string(node.kind.adf_index) +
                        " does not resolve in a registry of size " + std::to_string(registry.size())});
  }
  return report;
}

} // namespace np4g
