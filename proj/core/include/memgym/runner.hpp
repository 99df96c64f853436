#pragma once

#include <functional>
#include <memory>
#include <string>

#include "memgym/envs.hpp"
#include "memgym/policy.hpp"
#include "memgym/strategy.hpp"
#include "memgym/trajectory.hpp"

namespace memgym {

struct RunnerOptions {
  int step_cap = 250;
  int seed = 0;
};

// Per-step cycle: env emits an observation, the memory strategy wraps the
// accumulated history into a FilteredContext, the policy acts on that context
// only, the env scores the action. The loop ends on terminated, truncated, or
// the step cap. A transport failure marks the episode truncated with an error
// annotation and returns the partial trajectory.
Trajectory run_episode(Environment& env, Policy& policy, MemoryStrategy& strategy,
                       const RunnerOptions& opts);

struct PairedResult {
  std::string task_id;
  std::string env_id;
  std::string strategy;   // the memory side's strategy kind
  std::string policy_id;
  double baseline_score = 0.0;
  double memory_score = 0.0;
  double memory_gain = 0.0;  // memory_score - baseline_score
  std::string baseline_trajectory;  // file reference, empty until persisted
  std::string memory_trajectory;
  bool complete = true;  // incomplete pairs are excluded from aggregates
  std::string error;
};

// Runs the same task twice with the same policy id and seed: once under
// passthrough, once under the supplied memory strategy. The score difference
// is the memory gain.
PairedResult run_paired(const EnvSpec& spec,
                        const std::function<std::unique_ptr<Environment>()>& make_environment,
                        const std::function<std::unique_ptr<Policy>()>& make_policy,
                        const std::function<std::unique_ptr<MemoryStrategy>()>& make_memory,
                        const RunnerOptions& opts,
                        Trajectory* baseline_out = nullptr,
                        Trajectory* memory_out = nullptr);

// Episode score used on both sides of a pair: the final reward.
double episode_score(const Trajectory& t);

}  // namespace memgym
