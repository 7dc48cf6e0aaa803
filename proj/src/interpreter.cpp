#include "np4g/interpreter.hpp"

#include <cassert>
#include <cstddef>

#include "np4g/primitives.hpp"

namespace np4g {

namespace {

std::string join_items(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ' ';
    out += item;
  }
  return out;
}

std::string collapse(const Value& v) {
  if (!v.is_list()) return v.text();
  return join_items(v.items());
}

// Lifts a scalar function over list inputs: broadcast scalars, zip
// equal-length lists, "[NULL]" on a length mismatch.
template <typename F>
Value map_elementwise(F&& f, const std::vector<const Value*>& inputs) {
  bool any_list = false;
  size_t len = 0;
  for (const Value* v : inputs) {
    if (!v->is_list()) continue;
    if (any_list && v->items().size() != len) return Value::scalar(std::string(kNull));
    any_list = true;
    len = v->items().size();
  }

  std::vector<std::string> args(inputs.size());
  if (!any_list) {
    for (size_t k = 0; k < inputs.size(); ++k) args[k] = inputs[k]->text();
    return f(args);
  }

  std::vector<std::string> out;
  out.reserve(len);
  for (size_t i = 0; i < len; ++i) {
    for (size_t k = 0; k < inputs.size(); ++k) {
      const Value* v = inputs[k];
      args[k] = v->is_list() ? v->items()[i] : v->text();
    }
    out.push_back(collapse(f(args)));
  }
  return Value::list(std::move(out));
}

struct Plan {
  int start = -1;                  // dense index of the start node
  std::vector<int> index_of;       // node id -> dense index
  std::vector<std::vector<int>> succ; // per link, creation order, multiplicity kept
  size_t dequeue_bound = 0;        // edges + out-degree(start)

  int index(NodeId id) const { return index_of[static_cast<size_t>(id)]; }
};

Plan build_plan(const Network& net) {
  Plan plan;
  NodeId max_id = 0;
  for (const auto& node : net.nodes) {
    if (node.id < 0) throw ConfigError("cannot execute a network with negative node ids");
    if (node.id > max_id) max_id = node.id;
  }
  plan.index_of.assign(static_cast<size_t>(max_id) + 1, -1);
  for (size_t i = 0; i < net.nodes.size(); ++i) {
    if (plan.index_of[static_cast<size_t>(net.nodes[i].id)] != -1)
      throw ConfigError("cannot execute a network with duplicate node ids");
    plan.index_of[static_cast<size_t>(net.nodes[i].id)] = static_cast<int>(i);
  }

  plan.succ.resize(net.nodes.size());
  size_t edges = 0;
  for (size_t i = 0; i < net.nodes.size(); ++i) {
    for (NodeId u : net.nodes[i].inputs) {
      if (u < 0 || u > max_id || plan.index_of[static_cast<size_t>(u)] == -1)
        throw ConfigError("cannot execute a network with dangling input references");
      plan.succ[static_cast<size_t>(plan.index(u))].push_back(static_cast<int>(i));
      ++edges;
    }
  }

  if (net.start_id < 0 || net.start_id > max_id || plan.index(net.start_id) == -1 ||
      net.nodes[static_cast<size_t>(plan.index(net.start_id))].kind.tag != NodeKind::Tag::start)
    throw ConfigError("start_id does not name a start node");
  plan.start = plan.index(net.start_id);
  plan.dequeue_bound = edges + plan.succ[static_cast<size_t>(plan.start)].size();
  return plan;
}

Value eval_node(const Node& node, const std::vector<const Value*>& args,
                const AdfRegistry& registry) {
  if (node.kind.tag == NodeKind::Tag::adf)
    return call_adf(registry, node.kind.adf_index, *args[0]);
  switch (node.kind.op) {
    case Op::split:
      return op_split(*args[0]);
    case Op::sum:
      return op_sum(*args[0], *args[1]);
    case Op::equal:
      return map_elementwise(
          [](const std::vector<std::string>& a) { return Value::scalar(op_equal(a[0], a[1])); },
          args);
    case Op::gate:
      return map_elementwise(
          [](const std::vector<std::string>& a) { return Value::scalar(op_gate(a[0], a[1])); },
          args);
  }
  return Value::scalar(std::string(kNull));
}

Value run_network(const Network& net, const AdfRegistry& registry, const Value& input,
                  Trace* trace) {
  const Plan plan = build_plan(net);
  const size_t n = net.nodes.size();

  std::vector<Value> val(n);
  std::vector<char> avail(n, 0);
  std::vector<char> fired(n, 0);
  avail[static_cast<size_t>(plan.start)] = 1;
  val[static_cast<size_t>(plan.start)] = input;
  for (size_t i = 0; i < n; ++i) {
    if (net.nodes[i].kind.tag == NodeKind::Tag::object) {
      avail[i] = 1;
      val[i] = Value::scalar(net.nodes[i].kind.object_value);
    }
  }

  std::vector<int> frontier;
  frontier.reserve(plan.dequeue_bound + 1);
  for (int s : plan.succ[static_cast<size_t>(plan.start)]) frontier.push_back(s);

  int last = -1;
  size_t head = 0;
  std::vector<const Value*> args;
  while (head < frontier.size()) {
    assert(frontier.size() <= plan.dequeue_bound);
    const int i = frontier[head++];
    const Node& node = net.nodes[static_cast<size_t>(i)];

    if (fired[static_cast<size_t>(i)]) {
      if (trace) trace->push_back({node.id, TraceTag::already_done, std::nullopt});
      continue;
    }

    bool ready = true;
    for (NodeId u : node.inputs) {
      if (!avail[static_cast<size_t>(plan.index(u))]) {
        ready = false;
        break;
      }
    }
    if (!ready) {
      if (trace) trace->push_back({node.id, TraceTag::not_yet, std::nullopt});
      continue;
    }

    args.clear();
    for (NodeId u : node.inputs) args.push_back(&val[static_cast<size_t>(plan.index(u))]);
    val[static_cast<size_t>(i)] = eval_node(node, args, registry);
    avail[static_cast<size_t>(i)] = 1;
    fired[static_cast<size_t>(i)] = 1;
    last = i;
    if (trace) trace->push_back({node.id, TraceTag::fired, val[static_cast<size_t>(i)]});
    for (int s : plan.succ[static_cast<size_t>(i)]) frontier.push_back(s);
  }

  if (last < 0) return Value::scalar(std::string(kNull));
  return val[static_cast<size_t>(last)];
}

} // namespace

Value execute(const Network& net, const AdfRegistry& registry, const Value& input) {
  return run_network(net, registry, input, nullptr);
}

ExecResult execute_traced(const Network& net, const AdfRegistry& registry, const Value& input) {
  ExecResult result;
  result.value = run_network(net, registry, input, &result.trace);
  return result;
}

Value apply_elementwise(const ScalarFn& f, const std::vector<Value>& inputs) {
  std::vector<const Value*> ptrs;
  ptrs.reserve(inputs.size());
  for (const Value& v : inputs) ptrs.push_back(&v);
  return map_elementwise(f, ptrs);
}

Value call_adf(const AdfRegistry& registry, int index, const Value& arg) {
  if (index < 0 || index >= registry.size())
    throw ConfigError("adf index " + std::to_string(index) + " does not resolve in a registry of size " +
                      std::to_string(registry.size()));
  const Network& sub = registry.entries[static_cast<size_t>(index)];
  if (!arg.is_list()) return execute(sub, registry, arg);
  std::vector<std::string> out;
  out.reserve(arg.items().size());
  for (const auto& item : arg.items())
    out.push_back(collapse(execute(sub, registry, Value::scalar(item))));
  return Value::list(std::move(out));
}

std::string trace_tag_name(TraceTag tag) {
  switch (tag) {
    case TraceTag::fired: return "fired";
    case TraceTag::not_yet: return "not_yet";
    case TraceTag::already_done: return "already_done";
  }
  return "?";
}

std::string kind_label(const NodeKind& kind) {
  switch (kind.tag) {
    case NodeKind::Tag::start: return "S";
    case NodeKind::Tag::object: return kind.object_value;
    case NodeKind::Tag::adf: return AdfRegistry::name_of(kind.adf_index);
    case NodeKind::Tag::primitive:
      switch (kind.op) {
        case Op::split: return "split";
        case Op::sum: return "+";
        case Op::equal: return "==";
        case Op::gate: return "gate";
      }
  }
  return "?";
}

std::string dump_trace(const Network& net, const AdfRegistry& registry, const Trace& trace) {
  (void)registry;
  std::string out;
  for (size_t step = 0; step < trace.size(); ++step) {
    const TraceEntry& e = trace[step];
    const Node* node = net.find(e.node);
    out += std::to_string(step) + ", " + std::to_string(e.node) + ", " +
           (node ? kind_label(node->kind) : "?") + ", " + trace_tag_name(e.tag) + ", " +
           (e.value ? e.value->repr() : "-") + "\n";
  }
  return out;
}

} // namespace np4g
