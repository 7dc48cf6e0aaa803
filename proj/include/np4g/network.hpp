#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "np4g/value.hpp"

namespace np4g {

/// Fault in how networks, registries, or configs are put together
/// (e.g. an ADF index that does not resolve). Distinct from ordinary
/// "[NULL]" results, which are data.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class Op { split, sum, equal, gate };

std::string op_name(Op op);

using NodeId = int;

/// What a node is: the run's entry point, a stored constant, one of the
/// four built-in functions, or a call to a previously learned network.
struct NodeKind {
  enum class Tag { start, object, primitive, adf };

  Tag tag = Tag::start;
  std::string object_value; // tag == object
  Op op = Op::split;        // tag == primitive
  int adf_index = -1;       // tag == adf, index into the registry

  static NodeKind start() { return NodeKind{}; }
  static NodeKind object(std::string v) {
    NodeKind k;
    k.tag = Tag::object;
    k.object_value = std::move(v);
    return k;
  }
  static NodeKind primitive(Op op) {
    NodeKind k;
    k.tag = Tag::primitive;
    k.op = op;
    return k;
  }
  static NodeKind adf(int index) {
    NodeKind k;
    k.tag = Tag::adf;
    k.adf_index = index;
    return k;
  }

  /// Fixed input arity: start 0, object 0, split 1, sum 2, equal 2,
  /// gate 2, adf 1.
  int arity() const;

  /// True for nodes the scheduler can fire (primitives and ADF calls).
  bool is_function() const { return tag == Tag::primitive || tag == Tag::adf; }

  bool operator==(const NodeKind&) const = default;
};

struct Node {
  NodeId id = 0;
  NodeKind kind;
  std::vector<NodeId> inputs; // ordered link slots, length == arity

  bool operator==(const Node&) const = default;
};

/// A program: nodes in creation order (which defines the "from the top"
/// tie-breaking during execution) plus the start node's id. The end node
/// is not stored; it is implied by whichever node produces output last.
struct Network {
  std::vector<Node> nodes;
  NodeId start_id = 0;
  std::vector<int> adf_refs; // every ADF index the nodes may call

  const Node* find(NodeId id) const;
  int edge_count() const;
  int out_degree(NodeId id) const;

  bool operator==(const Network&) const = default;
};

/// Networks learned so far, reusable as one-input functions. Entry k is
/// named "adf{k+1}". An entry may only call ADFs with strictly smaller
/// index, so calls can never recurse.
struct AdfRegistry {
  std::vector<Network> entries;

  static std::string name_of(int index) { return "adf" + std::to_string(index + 1); }

  int size() const { return static_cast<int>(entries.size()); }

  /// Appends a learned network; throws ConfigError if it references an
  /// ADF index >= its own position.
  void push(Network net);
};

struct Violation {
  NodeId node = -1; // -1 when the problem is network-wide
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Checks the structural invariants: exactly one start node matching
/// start_id, unique non-negative ids, resolving inputs, per-kind arity,
/// no self-loops, and adf_refs covering every ADF index used.
ValidationReport validate(const Network& net);

/// validate() plus load-time binding of ADF indices against a registry.
ValidationReport validate(const Network& net, const AdfRegistry& registry);

} // namespace np4g
