#pragma once

#include <optional>
#include <string>
#include <vector>

#include "memgym/runner.hpp"
#include "memgym/trajectory.hpp"

namespace memgym {

struct EpisodeAggregate {
  std::string episode_id;
  EpisodeTokenStats token_stats;
  bool resolved = false;
  bool compaction_positive = false;  // K_e >= 1
  std::string group;                 // optional domain key for weighted variants
};

// Mean over compaction-positive episodes of the per-episode mean of
// per-event ratios. Absent when no episode compacted; zero-compaction
// episodes never pull the estimate toward 1.0.
std::optional<double> ratio_swe(const std::vector<EpisodeAggregate>& episodes);

// Mean over compaction-positive episodes of the last event's ratio.
std::optional<double> ratio_tau2(const std::vector<EpisodeAggregate>& episodes);

// Same statistic aggregated as the mean of per-group means of last-event
// ratios; reported alongside the run-scope form since the two can differ.
std::optional<double> ratio_tau2_domain_weighted(const std::vector<EpisodeAggregate>& episodes);

// Mean of peak/end token ratios over compaction-positive episodes whose
// ratio is at least 1.05 (inclusive); episodes that terminated at peak are
// uninformative and excluded.
std::optional<double> ratio_webarena(const std::vector<EpisodeAggregate>& episodes);

struct CoverageInput {
  long n_scale = 0;
  long n_paired = 0;  // <= n_scale
  long scale_baseline_resolved = 0;
  long paired_baseline_resolved = 0;
  long paired_memory_resolved = 0;

  void validate() const;  // throws std::invalid_argument on invariant breach
};

struct CoverageExtrapolation {
  long full_memory_resolved = 0;  // paired_mem + (scale_base - paired_base)
  double delta_paired_pp = 0.0;   // paired delta in percentage points
  double delta_full_pp = 0.0;     // delta_paired * n_paired / n_scale
};

// Extrapolates a paired delta back over the full evaluation set. The count
// form and the percentage form agree within rounding of one count. Absent
// when n_paired is zero.
std::optional<CoverageExtrapolation> extrapolate_coverage(const CoverageInput& cov);

struct GainCell {
  std::string env_id;
  std::string strategy;
  std::string policy_id;
  int n = 0;
  double baseline_rate = 0.0;
  double memory_rate = 0.0;
  double mean_gain = 0.0;
};

struct GainTable {
  int n = 0;              // complete pairs aggregated
  double mean_gain = 0.0;
  std::vector<GainCell> cells;  // keyed by (env, strategy, policy), sorted
};

// Mean memory gain over complete pairs only, with a per-cell breakdown.
GainTable aggregate_memory_gain(const std::vector<PairedResult>& pairs);

struct TrackRow {
  std::string gym;
  std::string model;
  std::string memory;
  int n = 0;
  double baseline = 0.0;
  double memory_rate = 0.0;
  double delta = 0.0;
  std::optional<double> compression;
};

std::string render_track_table(const std::vector<TrackRow>& rows);

}  // namespace memgym
