#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace memgym {

struct SubstitutionPair {
  std::string original;
  std::string substitute;
};

class SubstitutionRegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ordered (original -> fictional substitute) mapping applied whole-token,
// case-sensitive, longest original first. Construction rejects registries
// where any original is a substring of any pair's substitute, since applying
// such a registry could resurrect an original it just removed.
class SubstitutionRegistry {
 public:
  static SubstitutionRegistry from_pairs(std::vector<SubstitutionPair> pairs);

  // Stored longest-original-first; registry file order breaks ties.
  const std::vector<SubstitutionPair>& pairs() const { return pairs_; }

 private:
  SubstitutionRegistry() = default;
  std::vector<SubstitutionPair> pairs_;
};

// Whole-token occurrence count: the phrase must start and end at token
// boundaries (token characters are [A-Za-z0-9_]). Case-sensitive.
int count_whole_token_occurrences(const std::string& text, const std::string& phrase);

// Single left-to-right pass replacing every whole-token occurrence of each
// original, longest match first; substituted text is never rescanned.
std::string substitute_text(const SubstitutionRegistry& registry, const std::string& text,
                            int* substitutions = nullptr);

struct FictionSection {
  std::string name;  // questions / answers / facts / documents / distractors
  std::vector<std::string> items;
};

struct LeakReport {
  int substitutions = 0;
  int residual_originals = 0;
  bool pass() const { return residual_originals == 0; }
};

struct FictionResult {
  std::vector<FictionSection> sections;
  LeakReport leaks;
};

// Applies the registry uniformly across every section and scans the output
// for residual originals; a pass requires zero.
FictionResult apply_fictionalization(const SubstitutionRegistry& registry,
                                     const std::vector<FictionSection>& sections);

struct DRVerifierScores {
  double score_all_memory = 0.0;
  double score_long_context = 0.0;
  double score_no_memory = 0.0;
};

struct DRVerdict {
  bool pass = false;
  // (a) all_memory >= 0.85, (b) long_context <= 0.90, (c) no_memory <= 0.5,
  // (d) all_memory >= long_context
  std::array<bool, 4> criteria{};
  std::string reason;  // "criterion (a)" style, empty on pass
};

DRVerdict verify_dr_instance(const DRVerifierScores& scores);

struct CodeQAFilterConfig {
  int min_changed_lines = 5;
  int max_changed_lines = 500;
  int min_hunks = 1;          // strict preset uses 2
  int min_fail_to_pass = 1;   // strict preset uses 2
  int min_statement_chars = 100;

  static CodeQAFilterConfig strict_preset();
};

struct CodeQAFact {
  bool memory_only = false;
  bool critical = false;
};

struct CodeQACheckResults {
  bool solvability = false;
  bool distractor_confusion = false;  // true = check passed
  bool question_leakage = false;      // true = check passed
};

struct CodeQAInstanceMeta {
  std::string instance_id;
  int changed_lines = 0;
  int hunk_count = 0;
  int fail_to_pass_count = 0;
  int problem_statement_chars = 0;
  std::vector<CodeQAFact> facts;
  std::vector<CodeQACheckResults> qa_pairs;
};

struct FilterVerdict {
  bool pass = false;
  std::vector<std::string> reasons;  // "patch too small" etc., empty on pass
};

FilterVerdict filter_codeqa_raw(const CodeQAInstanceMeta& meta,
                                const CodeQAFilterConfig& cfg = {});

enum class PairCategory { valid, broken, confusable, leaky, confusable_and_leaky };
std::string pair_category_name(PairCategory category);

// Solvability failures dominate; among the remaining checks, joint failures
// form the combined category.
PairCategory verify_codeqa_pair(const CodeQACheckResults& checks);

// Keep iff the instance exposes at least two critical memory-only facts and
// at least one QA pair is valid.
bool retain_codeqa_instance(const CodeQAInstanceMeta& meta,
                            const std::vector<PairCategory>& pair_categories);

struct RetentionChain {
  std::string instance_id;
  int hop_count = 0;
  std::vector<int> bridge_spans;  // must be hop_count-1, hop_count-2, ..., 1
  bool terminal_fact = false;
};

// A k-hop chain passes iff its bridge spans are exactly (k-1, k-2, ..., 1)
// and a terminal fact is present.
bool validate_retention_chain(const RetentionChain& chain);

}  // namespace memgym
