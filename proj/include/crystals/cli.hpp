#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crystals/crystal.hpp"
#include "crystals/demazure.hpp"
#include "crystals/root_data.hpp"

namespace crystals::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kWriteFailed = 3,
  kResource = 4,
};

enum class Command { crystal, demazure, character, rank_one, verify };
enum class Format { json, dot, text };
enum class LogLevel { error, info, debug };

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg, bool help = false) : std::runtime_error(msg), help_(help) {}
  /// --help was requested; what() holds the help text.
  bool help() const { return help_; }

 private:
  bool help_;
};

struct JobSpec {
  Command command = Command::crystal;
  std::optional<CartanDatum> datum;
  Weight weight;
  std::optional<WeylWord> word;
  Format format = Format::text;
  std::optional<std::string> out;
  std::size_t max_elements = GenerateOptions{}.max_elements;
  LogLevel log = LogLevel::error;
  std::optional<std::string> inject_fault;  // test hook for `verify`
};

/// Parses and validates the command line. `log_env` is the value of
/// CRYSTAL_LOG (nullptr if unset). Throws UsageError.
JobSpec parse_args(int argc, const char* const* argv, const char* log_env);

/// Deterministic JSON: family, rank, highest_weight, elements, edges and,
/// when a Demazure crystal is given, members. One trailing newline.
std::string emit_json(const CrystalGraph& graph, const DemazureCrystal* dc = nullptr);
/// Graphviz digraph; Demazure members are drawn filled.
std::string emit_dot(const CrystalGraph& graph, const DemazureCrystal* dc = nullptr);
std::string emit_text(const CrystalGraph& graph, const DemazureCrystal* dc = nullptr);

struct CheckRow {
  std::string name;
  std::size_t cases = 0;
  Check result;
};

struct VerifyReport {
  std::string family;
  int rank = 0;
  Weight highest_weight;
  std::vector<CheckRow> rows;

  bool passed() const;
  /// First failing row, or nullptr.
  const CheckRow* first_failure() const;
  std::string text() const;
  std::string json() const;
};

/// Runs every crystal-level verifier for the job's (type, weight): normality,
/// eps/phi by iteration, size and Weyl character, and for every w in W the
/// e-closure, string property, filtration structure, reduced-word
/// independence, Demazure character formula, quotient strings along the
/// recursion and extremal vectors. Throws ResourceError past the size cap.
VerifyReport run_verify(const JobSpec& spec);

/// Executes a parsed job, writing results to `out` (or spec.out) and
/// diagnostics to `err`. Returns the exit code.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

/// parse_args + run with exit-code mapping for every failure kind.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crystals::cli
