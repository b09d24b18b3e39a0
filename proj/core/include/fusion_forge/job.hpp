#pragma once

// One command-line job: parse inputs, run a computation, render its output.

#include <cstdint>
#include <optional>
#include <string>

#include "fusion_forge/numeric.hpp"

namespace fusion_forge {

enum class OutputFormat { json, text };

struct JobSpec {
  /// simples, fuse, table, verify, double or selftest.
  std::string command;
  std::optional<std::string> group_path;
  std::optional<std::string> category_path;
  std::optional<std::string> omega;
  std::optional<std::string> table_path;
  /// Labels for `fuse`, written "y,i" or "(y,i)".
  std::string lhs;
  std::string rhs;
  std::optional<std::string> out_path;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::json;
  bool error_json = false;
  bool commutativity = false;
  unsigned threads = 1;
  Tolerances tol{};
};

struct JobResult {
  /// 0 ok, 1 validation failure, 2 parse error, 3 internal invariant breach.
  int exit_code = 0;
  std::string output;
  std::string error;
};

/// Default tolerances, with FUSION_FORGE_TOL (if set) replacing the
/// validation tolerance. Throws ParseError on a malformed value.
Tolerances tolerances_from_environment();

/// Never throws; errors become exit codes and messages.
JobResult run(const JobSpec& job);

}  // namespace fusion_forge
