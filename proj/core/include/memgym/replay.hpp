#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "memgym/envs.hpp"
#include "memgym/runner.hpp"
#include "memgym/strategy.hpp"
#include "memgym/trajectory.hpp"

namespace memgym {

// Earliest step at which the compaction trigger would fire on the recorded
// history (each step's recorded pre-action context; exact for passthrough
// recordings). Absent when the trigger never fires: the trajectory is
// structurally ineligible for forking.
std::optional<int> compute_auto_fork_step(const Trajectory& t, const StrategyConfig& cfg);

// A recorded action or observation the environment no longer reproduces.
// Substituted tool results would invalidate tool-call pairing, so divergence
// is a hard error rather than a silent re-query.
class ReplayDivergence : public std::runtime_error {
 public:
  ReplayDivergence(int step, const std::string& what);
  int step() const { return step_; }

 private:
  int step_;
};

// Drives `env` through the recorded actions of steps [0, fork_step), copying
// recorded tool-result messages verbatim and issuing no policy calls. Returns
// the rebuilt raw history; `env` is left at the fork point.
std::vector<Message> replay_to_fork(const Trajectory& parent, Environment& env, int fork_step);

struct ForkRecord {
  std::string parent_task_id;
  int fork_step = 0;
  Outcome baseline_outcome;
  Outcome fork_outcome;
  EpisodeTokenStats baseline_token_stats;
  EpisodeTokenStats fork_token_stats;
  int policy_calls_replayed = 0;
  int policy_calls_live = 0;
};

// Replays to fork_step, then continues live under `strategy`; the forked run
// begins with manage_context at fork_step, so the compaction under study is
// the first live decision. Step records before fork_step are copied from the
// parent byte for byte.
ForkRecord run_fork(const Trajectory& parent, Environment& env, Policy& policy,
                    MemoryStrategy& strategy, int fork_step, const RunnerOptions& opts,
                    Trajectory* fork_out = nullptr);

struct SavingsReport {
  int total_policy_steps = 0;
  int requeried_steps = 0;
  std::optional<double> policy_call_savings;  // total / requeried; absent when requeried = 0
};

// Re-runs a recorded trajectory without an environment: recorded observations
// are replayed, the strategy runs live, and the policy is re-queried only at
// steps where the strategy emits a condensation event; every other action is
// copied from the record.
std::pair<Trajectory, SavingsReport> observation_replay_run(const Trajectory& parent,
                                                            Policy& policy,
                                                            MemoryStrategy& strategy,
                                                            const RunnerOptions& opts);

}  // namespace memgym
