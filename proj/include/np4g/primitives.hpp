#pragma once

#include <string>

#include "np4g/value.hpp"

namespace np4g {

/// Tokenizes on runs of whitespace. A scalar becomes the list of its
/// tokens; "[NULL]" and all-whitespace scalars stay "[NULL]"; a list is
/// tokenized per element and flattened.
Value op_split(const Value& x);

/// Flattens both inputs in link order, drops "[NULL]" items, and joins
/// the rest with single spaces. An empty join yields "[NULL]", so the
/// result is always a non-empty scalar string.
Value op_sum(const Value& a, const Value& b);

/// "[TRUE]" iff the two strings are byte-identical, else "[FALSE]".
std::string op_equal(const std::string& a, const std::string& b);

/// If one input is "[TRUE]", passes the other input through; otherwise
/// "[NULL]". When both are "[TRUE]" the first is treated as the key.
std::string op_gate(const std::string& a, const std::string& b);

} // namespace np4g
