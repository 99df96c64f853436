#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "memgym/policy.hpp"

namespace memgym {

struct ScriptedTurn {
  std::string observation;
  std::string expect;  // normalized exact match on Action::render(); empty accepts anything
  double reward = 0.0; // granted when expect matches
  std::vector<std::string> gold_facts;  // tags planted by this observation
  bool tool_result = false;  // deliver this observation as the pending call's result
};

struct TerminalQuestion {
  std::string text;
  std::string gold_answer;  // scored by normalized exact match
};

struct EnvSpec {
  std::string env_id;   // registered factory name
  std::string task_id;
  std::vector<ScriptedTurn> script;
  std::optional<int> eviction_point;  // raw prefix evicted before this turn is shown
  std::optional<TerminalQuestion> terminal_question;

  // Throws std::invalid_argument when eviction_point does not precede the
  // terminal question turn or falls outside the script.
  void validate() const;
};

struct EnvStep {
  std::string observation;
  double reward = 0.0;
  bool terminated = false;
  bool truncated = false;
  bool evict_now = false;     // runner must drop the raw prefix before showing this
  bool as_tool_result = false;
  bool matched = true;        // previous action satisfied the turn's matcher
};

class Environment {
 public:
  virtual ~Environment() = default;
  virtual EnvStep reset() = 0;
  virtual EnvStep step(const Action& action) = 0;
  virtual const EnvSpec& spec() const = 0;
};

// Facts planted early, filler turns, optional hard eviction of the raw
// prefix, terminal question scored by normalized exact match. With eviction,
// only retained memory can answer.
class RetentionEnv : public Environment {
 public:
  explicit RetentionEnv(EnvSpec spec);
  EnvStep reset() override;
  EnvStep step(const Action& action) override;
  const EnvSpec& spec() const override { return spec_; }

 private:
  EnvStep emit_turn();

  EnvSpec spec_;
  std::size_t turn_ = 0;
  bool at_terminal_ = false;
  bool done_ = true;
};

// Scripted tool-call/result chains that summarizers can sever; exercises
// repair end to end. Turns whose expect is "call:..." return the scripted
// tool result; a mismatched action yields an error observation instead.
class ToolDialogueEnv : public Environment {
 public:
  explicit ToolDialogueEnv(EnvSpec spec);
  EnvStep reset() override;
  EnvStep step(const Action& action) override;
  const EnvSpec& spec() const override { return spec_; }

 private:
  EnvSpec spec_;
  std::size_t turn_ = 0;
  bool done_ = true;
};

// Spec files use the same line-delimited format as trajectories: one header
// line (env_id, task_id, eviction_point, terminal_question) followed by one
// turn object per line.
EnvSpec load_env_spec_file(const std::string& path);
void save_env_spec_file(const std::string& path, const EnvSpec& spec);
EnvSpec env_spec_from_lines(const std::string& bytes);
std::string env_spec_to_lines(const EnvSpec& spec);

// Deterministic generators used by tests and the CLI demo mode.
EnvSpec make_retention_spec(const std::string& task_id, int filler_turns,
                            bool with_eviction, const std::string& fact_tag = "badge",
                            const std::string& fact_value = "the badge code is ZX-417");
EnvSpec make_tool_dialogue_spec(const std::string& task_id, int tool_turns);

}  // namespace memgym
