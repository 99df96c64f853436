#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "memgym/message.hpp"

namespace memgym {

// One policy decision: free text, optionally carrying a single tool call.
struct Action {
  std::string text;
  std::optional<ToolCallRef> tool_call;

  // Canonical text form used for recording and replay:
  //   "call:<name>:<args>" for tool calls, the raw text otherwise.
  std::string render() const;
  static Action parse(const std::string& rendered, int call_counter);

  friend bool operator==(const Action&, const Action&) = default;
};

// Lowercases, collapses whitespace runs, trims. Shared by env matchers and
// divergence detection.
std::string normalize_text(const std::string& s);

enum class PolicyKind { scripted, remote };

struct PolicyRule {
  std::string match;   // normalized substring matched against the newest observation
  std::string action;  // literal text, "call:<name>:<args>", or "answer-from-context:<tag>"
};

struct PolicySpec {
  PolicyKind kind = PolicyKind::scripted;
  std::string id = "scripted";
  std::vector<PolicyRule> rules;  // scripted only
  std::string endpoint;           // remote only
  std::string model;              // remote only
  int max_in_flight = 4;
};

class Policy {
 public:
  virtual ~Policy() = default;
  // Decides on the filtered context only; the raw history is never shown.
  virtual Action act(const std::vector<Message>& context) = 0;
  virtual std::string id() const = 0;
  // Returns per-episode state (tool-call counters) to its initial value.
  virtual void reset() {}
};

// Deterministic table policy. The newest non-assistant message is matched
// against each rule in order; the first hit produces the action. Supported
// action forms:
//   "answer-from-context:<tag>"  scan the visible context for "FACT[<tag>]: v"
//                                and answer v, or "unknown" when absent
//   "call:<name>:<args>"         emit a tool call with a deterministic id
//   anything else                literal answer text
// With no matching rule the policy answers "ack".
class ScriptedPolicy : public Policy {
 public:
  explicit ScriptedPolicy(PolicySpec spec);
  Action act(const std::vector<Message>& context) override;
  std::string id() const override { return spec_.id; }
  void reset() override { call_counter_ = 0; }

 private:
  PolicySpec spec_;
  int call_counter_ = 0;
};

std::unique_ptr<Policy> make_scripted_policy(PolicySpec spec);

}  // namespace memgym
