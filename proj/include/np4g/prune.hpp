#pragma once

#include "np4g/network.hpp"

namespace np4g {

/// Removes every function/ADF node the scheduler can never fire: nodes
/// with no enqueue path from the start node, and nodes whose inputs can
/// never all become available. Object nodes survive only while some
/// surviving node references them. Execution output is unchanged for
/// every input, and the operation is idempotent.
Network prune_unreachable(const Network& net);

} // namespace np4g
