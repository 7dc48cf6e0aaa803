#include "np4g/primitives.hpp"

#include <cctype>

namespace np4g {

namespace {

void append_tokens(const std::string& s, std::vector<std::string>& out) {
  size_t i = 0;
  const size_t n = s.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t begin = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > begin) out.emplace_back(s, begin, i - begin);
  }
}

void append_item(const std::string& item, bool& first, std::string& out) {
  if (item == kNull) return;
  if (!first) out += ' ';
  out += item;
  first = false;
}

} // namespace

Value op_split(const Value& x) {
  std::vector<std::string> tokens;
  if (x.is_list()) {
    for (const auto& item : x.items()) append_tokens(item, tokens);
    return Value::list(std::move(tokens));
  }
  if (x.text() == kNull) return Value::scalar(std::string(kNull));
  append_tokens(x.text(), tokens);
  if (tokens.empty()) return Value::scalar(std::string(kNull));
  return Value::list(std::move(tokens));
}

Value op_sum(const Value& a, const Value& b) {
  std::string out;
  bool first = true;
  for (const Value* v : {&a, &b}) {
    if (v->is_list()) {
      for (const auto& item : v->items()) append_item(item, first, out);
    } else {
      append_item(v->text(), first, out);
    }
  }
  if (out.empty()) return Value::scalar(std::string(kNull));
  return Value::scalar(std::move(out));
}

std::string op_equal(const std::string& a, const std::string& b) {
  return std::string(a == b ? kTrue : kFalse);
}

std::string op_gate(const std::string& a, const std::string& b) {
  if (a == kTrue) return b;
  if (b == kTrue) return a;
  return std::string(kNull);
}

} // namespace np4g
