#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "memgym/trajectory.hpp"

namespace memgym {

enum class Label { SAFE, HARMFUL };
std::string label_name(Label label);
Label label_from_name(const std::string& name);

enum class Provenance { episode_resolution, counterfactual_divergence, judge };
std::string provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

// The (context-before, compressed-context, candidate-action) triple a
// compression-quality scorer is judged on.
struct CompressionEventSample {
  std::string event_id;
  std::vector<Message> context_before;
  std::vector<Message> compressed_context;
  std::string candidate_action;
  std::optional<Label> label;
  std::set<Provenance> provenance;  // non-empty whenever label is set
  std::string group_key;            // repository/instance identifier, split atom
  std::string cohort_id;
  std::optional<std::string> perturbation;
};

enum class PerturbOp {
  aggressive_0_5,
  random_drop_0_2,
  attr_delete_paths,
  summary_redaction,
  summary_noise,
  truncate_last_10,
};
std::string perturb_op_name(PerturbOp op);
PerturbOp perturb_op_from_name(const std::string& name);

// Inputs the paper-level taxonomy leaves external: entity lists for
// redaction, plausible-but-incorrect substitutions for noise, and the
// path-shape patterns (a documented heuristic).
struct PerturbExtras {
  std::vector<std::string> entities;
  std::vector<std::pair<std::string, std::string>> noise_facts;  // (target, wrong fact)
};

struct PerturbResult {
  std::optional<CompressionEventSample> sample;
  std::string skip_reason;  // set iff the op was inapplicable
  bool skipped() const { return !sample.has_value(); }
};

// Builds the HARMFUL counterpart of a sample. Pure in (sample, op, seed,
// extras); inapplicable ops skip with a reason instead of failing.
PerturbResult perturb(const CompressionEventSample& sample, PerturbOp op, std::uint64_t seed,
                      const PerturbExtras& extras = {});

struct SourceVerdicts {
  std::optional<bool> episode_resolved;       // parent episode resolved?
  std::optional<bool> action_diverged;        // counterfactual replay diverged?
  std::optional<bool> judge_flagged_harmful;  // judge flagged the forgotten content?
};

// HARMFUL if any present source says harmful; SAFE only when every present
// source agrees. Provenance carries the deciding sources (all of them for
// SAFE). Zero sources leaves the sample unlabeled (nullopt).
std::optional<std::pair<Label, std::set<Provenance>>> aggregate_label(const SourceVerdicts& v);

// True iff the normalized (whitespace-collapsed, case-folded) action forms
// differ.
bool detect_divergence(const std::string& recorded_action, const std::string& replayed_action);

struct CorpusSplit {
  std::vector<CompressionEventSample> train;
  std::vector<CompressionEventSample> eval;
};

// Group-atomic split: no group_key ever appears on both sides. Throws
// std::invalid_argument when a leakage-free split is impossible (a single
// group with split_fraction in (0,1)) or a sample lacks a group_key.
CorpusSplit build_corpus(const std::vector<CompressionEventSample>& samples,
                         double split_fraction, std::uint64_t seed);

struct ClassWeights {
  double w_safe = 1.0;
  double w_harmful = 1.0;
  double cap = 3.0;
};

// Balanced weights w_y = n_total / (2 * n_y), each capped. Throws
// std::invalid_argument on a zero-count class.
ClassWeights compute_class_weights(std::int64_t n_safe, std::int64_t n_harmful, double cap = 3.0);

struct LinearizedTriple {
  std::string prompt;
  std::string completion;  // "Y" for SAFE, "N" for HARMFUL
};

// Deterministic, byte-stable rendering of (task header, context-before,
// compressed-context, candidate-action) plus the single-token target.
// Throws std::invalid_argument on unlabeled samples.
LinearizedTriple linearize_triple(const CompressionEventSample& sample);

// Harvests one sample per condensation event from a recorded trajectory:
// context-before is the last view shown before the compaction, the compressed
// context is the event step's view, and the candidate action is the action
// taken under it. Episode resolution seeds the label.
std::vector<CompressionEventSample> extract_event_samples(const Trajectory& t,
                                                          const std::string& group_key);

}  // namespace memgym
