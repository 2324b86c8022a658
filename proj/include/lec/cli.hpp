#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lec/json_io.hpp"

namespace lec {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitFailure = 2 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct FuzzConfig {
  std::size_t trials = 100;
  std::size_t n_max = 20;
  int offset = 2;  // |L(e)| = Δ + offset
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  double oracle_rate = 0.1;
  std::size_t oracle_max_edges = 24;
  std::uint64_t oracle_node_limit = 1'000'000;
  bool inject_fault = false;
  std::string repro_dir;  // empty: no reproduction files
};

struct FuzzFailure {
  std::size_t trial = 0;
  std::string kind;  // "solve", "checker", "oracle"
  std::string detail;
};

struct FuzzSummary {
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t solve_failures = 0;
  std::size_t checker_failures = 0;
  std::size_t oracle_checked = 0;
  std::size_t oracle_disagreements = 0;
  std::size_t oracle_budget_exceeded = 0;
  std::size_t colourable_but_unsolved = 0;
  std::vector<FuzzFailure> failures;

  /// True iff the campaign should exit nonzero.
  bool failed(int offset) const;
};

/// Deterministic for a fixed config regardless of `jobs`.
FuzzSummary run_fuzz(const FuzzConfig& config);
Json fuzz_summary_to_json(const FuzzConfig& config, const FuzzSummary& summary);

}  // namespace lec
