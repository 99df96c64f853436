#pragma once

#include <optional>
#include <string>
#include <vector>

namespace memgym {

enum class Role { system, user, assistant, tool };

std::string role_name(Role role);
Role role_from_name(const std::string& name);

struct ToolCallRef {
  std::string id;
  std::string name;
  std::string arguments;

  friend bool operator==(const ToolCallRef&, const ToolCallRef&) = default;
};

// One transcript turn. tool_call_id is present exactly on tool-role messages;
// tool_calls may be non-empty only on assistant messages.
struct Message {
  Role role = Role::user;
  std::string content;
  std::vector<ToolCallRef> tool_calls;
  std::optional<std::string> tool_call_id;
  int origin_step = 0;

  friend bool operator==(const Message&, const Message&) = default;
};

Message make_system(std::string content, int origin_step = 0);
Message make_user(std::string content, int origin_step = 0);
Message make_assistant(std::string content, int origin_step = 0);
Message make_tool(std::string content, std::string tool_call_id, int origin_step = 0);

// Deterministic character-based heuristic standing in for provider
// tokenizers: ceil(|content| / 4) + 4 per message + 8 per tool call.
// Monotone in content length, so trigger behavior is reproducible offline.
int count_tokens(const Message& message);
int count_tokens(const std::vector<Message>& messages);

}  // namespace memgym
