#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace stconn::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kIdentityViolation = 1, kUsage = 2, kResourceGuard = 3 };

struct RunConfig {
  std::string command;
  std::string graph_path;
  std::optional<std::string> x;
  std::optional<std::size_t> s;
  std::optional<std::size_t> t;
  std::string mode = "exact";
  std::optional<std::uint64_t> seed;
  double epsilon = 0.1;
  std::optional<double> lambda;
  std::size_t kappa = 2;
  std::string basis = "generic";
  std::string format = "json";
  double tol = 1e-8;
  std::size_t threads = 0;  // 0: hardware concurrency
  bool dump_matrix = false;
  std::string dump_program;  // CSV path for [A | tau]
  std::string group;  // "m1,m2,..."
  std::string gens;   // "a,b,...;c,d,..."
  std::string kind;
  std::vector<std::pair<std::string, double>> bound_params;
};

// Command output plus the exit status it implies.
struct CommandResult {
  std::string text;
  int exit_code = kOk;
};

CommandResult cmd_analyze(const RunConfig& cfg);
CommandResult cmd_sweep(const RunConfig& cfg);
CommandResult cmd_spectrum(const RunConfig& cfg);
CommandResult cmd_alg1(const RunConfig& cfg);
CommandResult cmd_alg2(const RunConfig& cfg);
CommandResult cmd_series(const RunConfig& cfg);
CommandResult cmd_bounds(const RunConfig& cfg);
CommandResult cmd_canonicalize(const RunConfig& cfg);

// Parses argv-style arguments (without the program name), dispatches, and
// writes the report to out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stconn::cli
