#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "memgym/trajectory.hpp"

namespace memgym {

enum class StrategyKind {
  passthrough,
  sliding_window,
  observation_masking,
  llm_summarizing,
  structured_summary,
  pipeline,
};

std::string strategy_kind_name(StrategyKind kind);
StrategyKind strategy_kind_from_name(const std::string& name);

struct StrategyConfig {
  StrategyKind kind = StrategyKind::passthrough;
  int max_size = 100;     // message-count trigger
  int max_tokens = 32000; // heuristic-token trigger
  int keep_first = 1;     // pinned head
  int keep_last = 0;
  double ratio = 0.75;    // fraction of non-pinned messages to compress
  int window = 100;       // sliding_window / observation_masking
  std::vector<StrategyConfig> stages;  // pipeline only
  std::string summarizer;              // endpoint reference, resolved by caller

  // Throws std::invalid_argument on invariant breach:
  // keep_first + keep_last < max_size, ratio in (0,1], pipeline stages non-empty.
  void validate() const;
};

inline constexpr std::string_view kMaskedObservation = "<MASKED: observation too old>";

// True iff message count exceeds max_size or heuristic tokens exceed
// max_tokens, whichever fires first.
bool should_compact(const std::vector<Message>& history, const StrategyConfig& cfg);

// The fixed 17-field state schema used by structured_summary.
struct StructuredState {
  static constexpr std::size_t kFieldCount = 17;
  static const std::array<std::string_view, kFieldCount>& field_names();

  std::array<std::string, kFieldCount> values;

  // "FIELD NAME: value" lines in schema order; byte-stable.
  std::string render() const;
};

class SummarizerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Summarizer {
 public:
  virtual ~Summarizer() = default;
  // Free-text summary of the prefix. Throws SummarizerError on failure.
  virtual std::string summarize(const std::string& instruction,
                                const std::vector<Message>& prefix) = 0;
  // All 17 fields must be produced; missing fields surface as SummarizerError.
  virtual StructuredState summarize_structured(const std::string& instruction,
                                               const std::vector<Message>& prefix) = 0;
};

// Default instruction sent with every summarization request.
extern const std::string kSummaryInstruction;

// Returns a fixed text regardless of input. Doubles as the fact-dropping
// stub: anything in the prefix is gone from the summary.
class FixedTextSummarizer : public Summarizer {
 public:
  explicit FixedTextSummarizer(std::string text = "summary of earlier turns");
  std::string summarize(const std::string& instruction,
                        const std::vector<Message>& prefix) override;
  StructuredState summarize_structured(const std::string& instruction,
                                       const std::vector<Message>& prefix) override;

 private:
  std::string text_;
};

// Copies lines starting with `tag_prefix` (default "FACT[") verbatim into the
// summary, so planted facts survive compaction. Structured output places them
// under "confirmed findings".
class TaggedLineSummarizer : public Summarizer {
 public:
  explicit TaggedLineSummarizer(std::string tag_prefix = "FACT[");
  std::string summarize(const std::string& instruction,
                        const std::vector<Message>& prefix) override;
  StructuredState summarize_structured(const std::string& instruction,
                                       const std::vector<Message>& prefix) override;

 private:
  std::string tag_prefix_;
};

// Always throws; exercises the fail-open path.
class FailingSummarizer : public Summarizer {
 public:
  std::string summarize(const std::string&, const std::vector<Message>&) override;
  StructuredState summarize_structured(const std::string&, const std::vector<Message>&) override;
};

struct ContextResult {
  FilteredContext context;
  std::optional<CondensationEvent> event;
};

// One strategy instance is confined to a single episode; it may hold
// per-episode state (stored condensation records). Distinct episodes can run
// instances in parallel.
class MemoryStrategy {
 public:
  virtual ~MemoryStrategy() = default;

  // Maps the accumulated raw history to the context shown to the policy.
  // Lossy kinds run repair_tool_call_pairs on their output and report any
  // new compression as a CondensationEvent. Summarizer failure fails open:
  // the untouched history comes back with was_compacted=false and a warning.
  virtual ContextResult manage_context(const std::vector<Message>& history, int step) = 0;

  // Called when the environment hard-evicts the raw prefix. Stored summaries
  // survive; raw-history bookkeeping resets.
  virtual void note_eviction() {}

  virtual const StrategyConfig& config() const = 0;
};

std::unique_ptr<MemoryStrategy> make_strategy(const StrategyConfig& cfg,
                                              std::shared_ptr<Summarizer> summarizer = nullptr);

// Per-stage records of a pipeline-produced context; empty for any other kind.
std::vector<StageStat> pipeline_stats(const FilteredContext& ctx);

}  // namespace memgym
