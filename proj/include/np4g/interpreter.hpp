#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "np4g/network.hpp"
#include "np4g/value.hpp"

namespace np4g {

enum class TraceTag { fired, not_yet, already_done };

std::string trace_tag_name(TraceTag tag);

struct TraceEntry {
  NodeId node = -1;
  TraceTag tag = TraceTag::fired;
  std::optional<Value> value; // present iff tag == fired
};

using Trace = std::vector<TraceEntry>;

struct ExecResult {
  Value value;
  Trace trace;
};

/// Runs a network on one input. The start node's output is the input;
/// object values are available from the outset without ever entering the
/// frontier. The frontier is seeded with the start node's successors in
/// creation order and processed front to back: an already-fired node is
/// "already done", a node with a missing input is "not yet" (it comes
/// back only when another predecessor fires), and otherwise the node
/// fires exactly once and appends its successors. The result is the last
/// output produced, or "[NULL]" when nothing fired.
Value execute(const Network& net, const AdfRegistry& registry, const Value& input);

/// execute() plus the ordered dequeue record. One entry per dequeue, so
/// trace.size() is the scheduler's dequeue count.
ExecResult execute_traced(const Network& net, const AdfRegistry& registry, const Value& input);

/// Scalar semantics lifted over lists: with no list inputs the function
/// applies directly; otherwise scalars broadcast, equal-length lists zip,
/// and each element result is flattened to one string (space-joining any
/// list it produced). Lists of unequal length yield "[NULL]".
using ScalarFn = std::function<Value(const std::vector<std::string>&)>;
Value apply_elementwise(const ScalarFn& f, const std::vector<Value>& inputs);

/// Runs registry entry `index` on `arg`, mapping element-wise when the
/// argument is a list. Throws ConfigError for an unresolvable index.
Value call_adf(const AdfRegistry& registry, int index, const Value& arg);

/// One line per trace step: "step, node-id, kind-label, result-tag, value".
std::string dump_trace(const Network& net, const AdfRegistry& registry, const Trace& trace);

/// Display label for a node, shared by traces and DOT export.
std::string kind_label(const NodeKind& kind);

} // namespace np4g
