#pragma once

// kchtool commands as plain functions so that tests can run them in-process.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kch/ideal.hpp"
#include "kch/ngalg.hpp"

namespace kch::cli {

enum ExitCode : int { kPass = 0, kMathFailure = 1, kResource = 2, kUsage = 3 };

struct RunConfig {
  std::string command;
  std::string braid;
  std::optional<int> strands;
  /// markov-test: braids to compare against instead of the built-in moves.
  std::vector<std::string> against;
  Conventions conventions;
  GroebnerLimits limits;
  bool json = false;
};

struct CommandResult {
  int exit_code = kPass;
  std::string output;
  /// Diagnostics for stderr.
  std::string error;
};

CommandResult cmd_present(const RunConfig& cfg);
CommandResult cmd_augpoly(const RunConfig& cfg);
CommandResult cmd_verify_unknot(const RunConfig& cfg);
CommandResult cmd_homfly(const RunConfig& cfg);
CommandResult cmd_markov(const RunConfig& cfg);

/// Dispatches on cfg.command. Library errors become exit codes: bad input
/// is kUsage, resource limits kResource.
CommandResult run_command(const RunConfig& cfg);

/// Full front end: parses argv, runs, writes output. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kch::cli
