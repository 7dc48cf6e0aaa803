#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace np4g {

// Reserved tokens. They are ordinary strings; only sum and gate give them
// special treatment.
inline constexpr std::string_view kTrue = "[TRUE]";
inline constexpr std::string_view kFalse = "[FALSE]";
inline constexpr std::string_view kNull = "[NULL]";

/// The only datum that flows on links: a string, or a flat list of strings.
/// List items are always plain strings; nesting does not exist.
class Value {
public:
  Value() : text_(kNull) {}

  static Value scalar(std::string text) {
    Value v;
    v.text_ = std::move(text);
    return v;
  }

  static Value list(std::vector<std::string> items) {
    Value v;
    v.is_list_ = true;
    v.text_.clear();
    v.items_ = std::move(items);
    return v;
  }

  bool is_list() const { return is_list_; }
  bool is_null() const { return !is_list_ && text_ == kNull; }

  const std::string& text() const { return text_; }
  const std::vector<std::string>& items() const { return items_; }

  /// Space-joined rendering; a scalar renders as itself.
  std::string display() const;

  /// Debug rendering that keeps scalars and lists distinguishable.
  std::string repr() const;

  bool operator==(const Value&) const = default;

private:
  bool is_list_ = false;
  std::string text_;
  std::vector<std::string> items_;
};

} // namespace np4g
