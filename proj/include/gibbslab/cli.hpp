#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "gibbslab/errors.hpp"

namespace gibbslab::cli {

/// Exit statuses of `run`.
enum ExitCode : int { kOk = 0, kVerdictFalse = 1, kUsage = 2, kCapacity = 3 };

/// Parsed command line. Unset optionals mean "not supplied".
struct RunConfig {
  std::string command;  // tree, verify-spec, verify-compat, check-law, solve, scan, marginals
  std::string action = "info";
  std::string model = "ising";
  std::optional<double> J;
  std::optional<double> beta;
  std::optional<double> theta;
  std::optional<int> k;
  std::optional<int> depth;
  std::optional<int> m;
  std::optional<int> n;
  std::optional<int> n_max;
  std::optional<int> generation;
  std::string boundary = "uniform:+1";
  std::string field;
  std::optional<double> tol;
  std::optional<double> theta_min;
  std::optional<double> theta_max;
  std::optional<int> steps;
  std::string observable = "magnetization";
  std::string format = "text";
  std::string output;
  std::uint64_t max_states = kDefaultMaxStates;
};

/// Validates `config`, dispatches to the library and writes the artifact to
/// `config.output` (or `out`). Diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace gibbslab::cli
