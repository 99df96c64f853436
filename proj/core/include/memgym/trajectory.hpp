#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "memgym/message.hpp"

namespace memgym {

enum class CompactionTrigger { message_count, token_budget };

std::string trigger_name(CompactionTrigger trigger);
CompactionTrigger trigger_from_name(const std::string& name);

// Per-stage accounting attached by pipeline strategies.
struct StageStat {
  std::string strategy;
  int tokens_in = 0;
  int tokens_out = 0;
  bool was_compacted = false;

  friend bool operator==(const StageStat&, const StageStat&) = default;
};

// The view actually shown to the policy for one step.
struct FilteredContext {
  std::vector<Message> messages;
  int tokens = 0;           // post-filter
  int original_tokens = 0;  // pre-filter
  double compression_ratio = 1.0;
  bool was_compacted = false;
  std::string strategy;
  std::vector<StageStat> stage_stats;  // populated by pipeline strategies only
  std::vector<std::string> warnings;   // fail-open notes, not failures

  friend bool operator==(const FilteredContext&, const FilteredContext&) = default;
};

// Record of one lossy compaction. forgotten_indices are strictly increasing
// and index into the pre-compaction view the strategy received.
struct CondensationEvent {
  std::string summary;
  std::vector<int> forgotten_indices;
  int pre_tokens = 0;
  int post_tokens = 0;
  CompactionTrigger trigger = CompactionTrigger::message_count;
  std::string strategy;
  int step = 0;

  friend bool operator==(const CondensationEvent&, const CondensationEvent&) = default;
};

struct Step {
  int index = 0;
  double timestamp = 0.0;
  std::string observation;
  std::string reasoning_action;
  std::optional<CondensationEvent> memory_action;
  double reward = 0.0;
  bool terminated = false;
  bool truncated = false;
  FilteredContext context;

  friend bool operator==(const Step&, const Step&) = default;
};

struct Outcome {
  bool resolved = false;
  double final_reward = 0.0;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct EpisodeTokenStats {
  std::vector<double> per_event_ratios;  // pre/post tokens of each compaction
  int compaction_count = 0;
  int peak_tokens = 0;
  int end_tokens = 0;

  friend bool operator==(const EpisodeTokenStats&, const EpisodeTokenStats&) = default;
};

struct Trajectory {
  std::string task_id;
  std::map<std::string, std::string> run_config;
  std::vector<Step> steps;
  Outcome outcome;
  EpisodeTokenStats token_stats;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

struct Violation {
  std::string code;    // short machine-readable tag
  std::string detail;  // human-readable description
  int step = -1;       // -1 when not tied to one step
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks every type invariant plus cross-references: contiguous step indices,
// terminal flags, context arithmetic, tool-call id uniqueness per context,
// and condensation events whose forgotten indices point beyond the
// reconstructable pre-compaction view. Violations are data, not failures.
ValidationReport validate_trajectory(const Trajectory& t);

}  // namespace memgym
