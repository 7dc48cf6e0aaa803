#include "np4g/prune.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace np4g {

// A function node can fire iff (a) the start node or some firing node
// feeds one of its inputs, so it gets enqueued at least once more after
// the last of its inputs becomes available, and (b) every input is the
// start node, an object, or itself a firing node. Both conditions are
// purely structural, so the firing set is the least fixed point below.
// Everything outside it never produces output on any input; dropping it
// cannot change execution.
Network prune_unreachable(const Network& net) {
  std::unordered_map<NodeId, const Node*> by_id;
  for (const auto& node : net.nodes) by_id[node.id] = &node;

  std::unordered_set<NodeId> fires;
  auto available = [&](NodeId u) {
    const NodeKind::Tag tag = by_id.at(u)->kind.tag;
    return tag == NodeKind::Tag::start || tag == NodeKind::Tag::object || fires.count(u) > 0;
  };
  auto triggered = [&](NodeId u) {
    return u == net.start_id || fires.count(u) > 0;
  };

  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& node : net.nodes) {
      if (!node.kind.is_function() || fires.count(node.id)) continue;
      bool ready = std::all_of(node.inputs.begin(), node.inputs.end(), available);
      bool enqueued = std::any_of(node.inputs.begin(), node.inputs.end(), triggered);
      if (ready && enqueued) {
        fires.insert(node.id);
        grew = true;
      }
    }
  }

  std::unordered_set<NodeId> referenced;
  for (const auto& node : net.nodes)
    if (node.id == net.start_id || fires.count(node.id))
      referenced.insert(node.inputs.begin(), node.inputs.end());

  Network pruned;
  pruned.start_id = net.start_id;
  std::unordered_set<int> adf_refs;
  for (const auto& node : net.nodes) {
    const bool keep = node.kind.tag == NodeKind::Tag::start || fires.count(node.id) ||
                      (node.kind.tag == NodeKind::Tag::object && referenced.count(node.id));
    if (!keep) continue;
    pruned.nodes.push_back(node);
    if (node.kind.tag == NodeKind::Tag::adf) adf_refs.insert(node.kind.adf_index);
  }
  pruned.adf_refs.assign(adf_refs.begin(), adf_refs.end());
  std::sort(pruned.adf_refs.begin(), pruned.adf_refs.end());
  return pruned;
}

} // namespace np4g
