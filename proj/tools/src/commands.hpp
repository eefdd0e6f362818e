#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <iosfwd>
#include <memory>
#include <thread>
#include <vector>

#include "fokas/transform.hpp"
#include "json.hpp"
#include "run_config.hpp"

namespace fokas::cli {

// Exhaustive, mutually exclusive process exit codes.
enum ExitCode : int { kPass = 0, kNumericalFailure = 1, kPreconditionFailure = 2, kConfigError = 3 };

struct CommandResult {
  int exit_code = kPass;
  nlohmann::json report;
};

struct SolveRow {
  double x = 0.0;
  double t = 0.0;
  Complex q{};
  double error_estimate = 0.0;
  bool converged = true;
};

// Runs f(0) .. f(n - 1) on `workers` threads. Results must be written by
// index; the first exception by index is rethrown after all workers finish.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& f);

// Transform pair of a configured problem (rho selection for heat-nonlocal).
// Diagnostics of the construction are added to `notes`. Throws ConfigError
// for the control problem, which has no transform pair.
std::shared_ptr<const TransformPair> build_pair(const RunConfig& config, nlohmann::json& notes);

// Solution on the configured grid, rows ordered by x, then t.
std::vector<SolveRow> solve_grid(const RunConfig& config, nlohmann::json& notes);

// CSV with header x,t,re_q,im_q,quad_err_est,converged; shortest round-trip
// decimals.
void write_csv(std::ostream& out, const std::vector<SolveRow>& rows);
std::string format_double(double value);

CommandResult cmd_solve(const RunConfig& config, std::ostream& csv);
CommandResult cmd_verify(const RunConfig& config);
CommandResult cmd_compare(const RunConfig& config);
nlohmann::json list_problems();

// Runs a command and maps exceptions to exit codes and a status report:
// ConfigError, DomainError and InvalidGeometry -> 3; PreconditionError -> 2;
// other failures -> 1.
CommandResult run_guarded(const std::function<CommandResult()>& command);

}  // namespace fokas::cli
