#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace frobalg::cli {

using Json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kParseError = 2, kBudgetExceeded = 3, kInternalError = 4 };

struct CommandRequest {
  std::string command;
  std::string suite;  // verify only
  std::string ring;
  std::string ideal;
  std::string ideal2;  // colon divisor
  std::string matrix;
  std::string poly;
  std::string fseq;
  std::string root_ideal;
  std::string sequence;
  std::string point;
  std::string order = "grevlex";
  std::uint64_t e = 1;
  std::uint64_t e_max = 4;
  std::size_t window = 2;
  std::uint64_t lift_cap = 6;
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> last;  // defaults to e_max
  std::size_t trials = 64;
  std::uint64_t e_lo = 0;
  std::optional<std::uint64_t> e_hi;  // defaults to e_max
  std::uint64_t levels = 3;
  std::size_t count = 20;
  std::size_t jobs = 1;
  bool timing = false;
  std::string format = "text";
  std::string output;
};

struct CommandResult {
  // {command, inputs, result, budget_used, unresolved_reasons}
  Json report;
  int exit_code = kOk;
};

const std::vector<std::string>& command_names();

CommandResult run_command(const CommandRequest& request);

// Suites: "examples" (alias "paper-examples"), "invariants-random", "oracles".
// The result holds the per-check records and the summary counts; the exit
// code is 0 iff no check failed.
CommandResult verify_suite(const CommandRequest& request);

// Human-readable rendering of a report.
std::string render_text(const Json& report);

// Full front end: parses argv, runs, prints, returns the exit code.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace frobalg::cli
