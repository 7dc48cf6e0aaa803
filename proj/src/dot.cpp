#include "np4g/dot.hpp"

#include "np4g/interpreter.hpp"

namespace np4g {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

} // namespace

std::string export_dot(const Network& net, const AdfRegistry& registry) {
  (void)registry;
  std::string out = "digraph network {\n  rankdir=LR;\n";
  for (const auto& node : net.nodes) {
    const std::string id = "n" + std::to_string(node.id);
    std::string shape = "box";
    std::string label = escape(kind_label(node.kind));
    switch (node.kind.tag) {
      case NodeKind::Tag::start:
      case NodeKind::Tag::object:
        shape = "circle";
        break;
      case NodeKind::Tag::primitive:
        if (node.kind.op == Op::gate) {
          shape = "circle";
          label.clear();
        }
        break;
      case NodeKind::Tag::adf:
        break;
    }
    out += "  " + id + " [shape=" + shape + ", label=\"" + label + "\"];\n";
  }
  for (const auto& node : net.nodes) {
    for (size_t slot = 0; slot < node.inputs.size(); ++slot) {
      out += "  n" + std::to_string(node.inputs[slot]) + " -> n" + std::to_string(node.id) +
             " [label=\"" + std::to_string(slot) + "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

} // namespace np4g
