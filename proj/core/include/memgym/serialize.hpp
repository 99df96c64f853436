#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "memgym/trajectory.hpp"

namespace memgym {

// Malformed record in a line-delimited stream; line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

void to_json(nlohmann::json& j, const ToolCallRef& v);
void from_json(const nlohmann::json& j, ToolCallRef& v);
void to_json(nlohmann::json& j, const Message& v);
void from_json(const nlohmann::json& j, Message& v);
void to_json(nlohmann::json& j, const StageStat& v);
void from_json(const nlohmann::json& j, StageStat& v);
void to_json(nlohmann::json& j, const FilteredContext& v);
void from_json(const nlohmann::json& j, FilteredContext& v);
void to_json(nlohmann::json& j, const CondensationEvent& v);
void from_json(const nlohmann::json& j, CondensationEvent& v);
void to_json(nlohmann::json& j, const Step& v);
void from_json(const nlohmann::json& j, Step& v);
void to_json(nlohmann::json& j, const Outcome& v);
void from_json(const nlohmann::json& j, Outcome& v);
void to_json(nlohmann::json& j, const EpisodeTokenStats& v);
void from_json(const nlohmann::json& j, EpisodeTokenStats& v);

// Trajectory wire format: one header line (task_id, run_config), one step
// object per line, one footer line (outcome, token_stats). UTF-8 JSONL.
std::string serialize_trajectory(const Trajectory& t);
void write_trajectory(std::ostream& out, const Trajectory& t);

// Parses exactly one trajectory; throws ParseError on malformed or
// truncated input (a missing footer names the offending line).
Trajectory deserialize_trajectory(const std::string& bytes);

// Parses zero or more concatenated trajectories; empty input yields an
// empty list, not an error.
std::vector<Trajectory> read_trajectories(std::istream& in);
std::vector<Trajectory> read_trajectories_from_string(const std::string& bytes);
Trajectory load_trajectory_file(const std::string& path);
std::vector<Trajectory> load_trajectories_file(const std::string& path);
void save_trajectory_file(const std::string& path, const Trajectory& t);

// Shared helper for all line-delimited record files: parses each non-empty
// line as JSON, reporting 1-based line numbers on failure.
std::vector<nlohmann::json> read_json_lines(std::istream& in);
std::vector<nlohmann::json> load_json_lines_file(const std::string& path);

}  // namespace memgym
