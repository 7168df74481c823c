#pragma once

// Command layer behind the gkcrystal tool. Commands return their output and
// exit status instead of writing to the process streams so they can be
// driven from tests.

#include <optional>
#include <string>

#include "gk/series.hpp"

namespace gk::cli {

enum class Command { enumerate, verify, graph, param, convert };
enum class Format { json, tsv, dot };
enum class DatumKind { lusztig, string };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int mismatch = 2;
inline constexpr int parse = 3;
}  // namespace exit_code

struct RunConfig {
  Command command = Command::enumerate;
  std::optional<int> rank;   // default 2; param/convert take it from the input
  std::optional<int> depth;  // default 4, or 6 for verify
  std::optional<Format> format;
  Strategy strategy = Strategy::bfs;
  bool coefficients = false;
  DatumKind from = DatumKind::lusztig;
  std::string input;
  int max_rank = 6;
};

struct CommandResult {
  int exit_code = exit_code::ok;
  std::string out;
  std::string err;
};

/// Thrown for configurations that fail validation.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int effective_depth(const RunConfig& cfg);
Format effective_format(const RunConfig& cfg);
/// Throws UsageError.
void validate(const RunConfig& cfg);

CommandResult cmd_enumerate(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_graph(const RunConfig& cfg);
CommandResult cmd_param(const RunConfig& cfg);
CommandResult cmd_convert(const RunConfig& cfg);

/// Validates and dispatches; maps errors onto exit codes.
CommandResult run(const RunConfig& cfg);

}  // namespace gk::cli
