#pragma once

#include <cstddef>
#include <vector>

#include "memgym/message.hpp"

namespace memgym {

struct RepairResult {
  std::vector<Message> messages;
  std::vector<std::size_t> kept_indices;     // input index of each survivor, ascending
  std::vector<std::size_t> dropped_indices;  // input indices removed, ascending
};

// Restores tool-call pairing after lossy edits. Tool results whose issuing
// assistant call no longer precedes them are removed; assistant tool calls
// with no surviving result later in the sequence are stripped, and the
// assistant message itself is dropped only when the stripped call was its
// sole payload. Order-preserving, idempotent, total.
RepairResult repair_tool_call_pairs_indexed(const std::vector<Message>& messages);
std::vector<Message> repair_tool_call_pairs(const std::vector<Message>& messages);

}  // namespace memgym
