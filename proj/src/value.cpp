#include "np4g/value.hpp"

namespace np4g {

std::string Value::display() const {
  if (!is_list_) return text_;
  std::string out;
  for (const auto& item : items_) {
    if (!out.empty()) out += ' ';
    out += item;
  }
  return out;
}

std::string Value::repr() const {
  auto quote = [](const std::string& s) { return '"' + s + '"'; };
  if (!is_list_) return quote(text_);
  std::string out = "[";
  for (size_t i = 0; i < items_.size(); ++i) {
    if (i) out += ", ";
    out += quote(items_[i]);
  }
  out += ']';
  return out;
}

} // namespace np4g
