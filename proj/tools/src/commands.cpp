#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>

#include "fokas/problem_bbm.hpp"
#include "fokas/problem_heat_nonlocal.hpp"
#include "fokas/problem_stokes.hpp"
#include "fokas/reference_solvers.hpp"

namespace fokas::cli {
namespace {

using json = nlohmann::json;

// Fraction of a step by which a time may miss the oracle's time grid.
constexpr double kGridSlack = 1e-9;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json config_echo(const RunConfig& config) {
  json echo = json::object();
  for (const auto& [key, value] : describe(config)) echo[key] = value;
  return echo;
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json report_json(const VerificationReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples) {
    samples.push_back({{"label", s.label}, {"point", complex_json(s.point)}, {"magnitude", s.magnitude}});
  }
  return {{"check", r.check},
          {"pass", r.pass},
          {"max_magnitude", r.max_magnitude},
          {"tolerance", r.tolerance},
          {"max_error_estimate", r.max_error_estimate},
          {"evaluations", r.evaluations},
          {"seconds", r.seconds},
          {"samples", samples}};
}

bool on_step_grid(double value, double step) {
  const double n = value / step;
  return std::abs(n - std::round(n)) <= kGridSlack * std::max(1.0, n);
}

// Closed form for Q = c x e^{-a x^2}: the heat kernel keeps the Gaussian shape.
std::optional<std::function<double(double, double)>> control_closed_form(const RunConfig& config) {
  const DatumSpec& d = config.datum;
  if (d.family != "gaussian" || d.n != 1) return std::nullopt;
  const double c = d.coefficient, a = d.a;
  return [c, a](double x, double t) {
    const double s = 1.0 + 4.0 * a * t;
    return c * x * std::exp(-a * x * x / s) / std::pow(s, 1.5);
  };
}

void require_shared_grid(const RunConfig& config, double dx, double dt, double T, double length) {
  if (!on_step_grid(length, dx)) {
    throw ConfigError("oracle.dx", "must divide the oracle domain length " + format_double(length));
  }
  if (!on_step_grid(T, dt)) throw ConfigError("oracle.dt", "must divide oracle.T = " + format_double(T));
  for (double t : config.grid.t) {
    if (t > T * (1.0 + kGridSlack)) {
      throw ConfigError("grid.t", "t = " + format_double(t) + " lies beyond oracle.T = " + format_double(T));
    }
    if (!on_step_grid(t, dt)) {
      throw ConfigError("grid.t", "t = " + format_double(t) + " is not on the oracle time grid (dt = " +
                                      format_double(dt) + ")");
    }
  }
  const double reach = problem_domain(config.problem) == SpatialDomain::HalfLine ? 0.5 * length : length;
  if (config.grid.x_max > reach) {
    throw ConfigError("grid.x_max", "must not exceed " + format_double(reach) + " for the oracle domain");
  }
}

struct OracleRun {
  GridSolution coarse;
  GridSolution fine;
  std::string scheme;
};

OracleRun run_fd_oracle(const RunConfig& config, const InitialDatum& Q) {
  const double T = config.oracle_T(), dt = config.oracle_dt(), dx = config.oracle_dx();
  const double length = problem_domain(config.problem) == SpatialDomain::HalfLine ? config.oracle.length : 1.0;
  if (!(T > 0.0)) throw ConfigError("oracle.T", "the oracle needs a positive final time");
  require_shared_grid(config, dx, dt, T, length);
  auto run = [&](double h, double k) {
    switch (config.problem) {
      case ProblemTag::StokesNeumann:
        return fd_stokes_halfline(Q, {StokesBoundary::Neumann}, h, k, T, length);
      case ProblemTag::StokesDirichlet:
        return fd_stokes_halfline(Q, {StokesBoundary::Dirichlet}, h, k, T, length);
      case ProblemTag::HeatNonlocal:
        return fd_heat_nonlocal(SensorKernel::bump(config.kernel.eps), Q, h, k, T);
      case ProblemTag::BbmDirichlet:
        return fd_bbm_halfline(Q, h, k, T, length);
      case ProblemTag::HeatDirichletControl:
        return fd_heat_dirichlet_halfline(Q, h, k, T, length);
    }
    throw ConfigError("problem.tag", "no oracle");
  };
  OracleRun out{run(dx, dt), run(0.5 * dx, 0.5 * dt), ""};
  out.scheme = out.coarse.scheme;
  return out;
}

}  // namespace

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& f) {
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string format_double(double value) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, r.ptr);
}

std::shared_ptr<const TransformPair> build_pair(const RunConfig& config, json& notes) {
  const double r_max = config.contour.r_max;
  switch (config.problem) {
    case ProblemTag::StokesNeumann:
      return stokes_pair({StokesBoundary::Neumann}, r_max);
    case ProblemTag::StokesDirichlet:
      return stokes_pair({StokesBoundary::Dirichlet}, r_max);
    case ProblemTag::BbmDirichlet:
      return bbm_pair(config.contour.circle_radius, r_max);
    case ProblemTag::HeatNonlocal: {
      const auto K = SensorKernel::bump(config.kernel.eps);
      const Stopwatch clock;
      RhoSelection rho = config.contour.rho ? certify_rho(*config.contour.rho, locate_delta_zeros(K))
                                            : select_rho(K);
      notes["rho"] = rho.rho;
      notes["rho_selected"] = !config.contour.rho.has_value();
      notes["delta_zero_count"] = rho.certificate.zero_count;
      notes["delta_max_abs_imag"] = rho.certificate.max_abs_imag;
      notes["rho_seconds"] = clock.seconds();
      return heat_pair(K, rho, r_max);
    }
    case ProblemTag::HeatDirichletControl:
      break;
  }
  throw ConfigError("problem.tag", "heat-dirichlet-control is solved by the sine transform and has no transform pair");
}

std::vector<SolveRow> solve_grid(const RunConfig& config, json& notes) {
  const InitialDatum Q = build_datum(config);
  std::vector<SolveRow> rows;
  for (double x : config.grid.xs()) {
    for (double t : config.grid.t) rows.push_back({x, t});
  }
  if (config.problem == ProblemTag::HeatDirichletControl) {
    const Stopwatch clock;
    parallel_for(rows.size(), config.workers, [&](std::size_t i) {
      SolveRow& row = rows[i];
      try {
        const QuadratureResult r = heat_dirichlet_sine_solution(Q, row.x, row.t, config.quadrature);
        row.q = r.value;
        row.error_estimate = r.error_estimate;
        row.converged = r.converged;
      } catch (const Unconverged& e) {
        row.q = std::numeric_limits<double>::quiet_NaN();
        row.error_estimate = e.estimate();
        row.converged = false;
      }
    });
    notes["evaluate_seconds"] = clock.seconds();
    return rows;
  }
  const auto pair = build_pair(config, notes);
  if (config.problem == ProblemTag::BbmDirichlet) {
    const double trace = std::abs(Q.value(0.0));
    if (trace > kDomainTolerance) throw PreconditionError("Q(0) = 0", trace);
  }
  const Stopwatch build_clock;
  const SpectralCoefficient coefficient =
      build_spectral_coefficient(pair, Q, config.quadrature, {config.grid.xs(), config.grid.t});
  notes["build_seconds"] = build_clock.seconds();
  notes["coefficient_nodes"] = coefficient.node_count();
  notes["build_error"] = coefficient.build_error();
  const Stopwatch clock;
  parallel_for(rows.size(), config.workers, [&](std::size_t i) {
    const QuadratureResult r = coefficient.evaluate(rows[i].x, rows[i].t);
    rows[i].q = r.value;
    rows[i].error_estimate = r.error_estimate;
    rows[i].converged = r.converged;
  });
  notes["evaluate_seconds"] = clock.seconds();
  return rows;
}

void write_csv(std::ostream& out, const std::vector<SolveRow>& rows) {
  out << "x,t,re_q,im_q,quad_err_est,converged\n";
  for (const auto& r : rows) {
    out << format_double(r.x) << ',' << format_double(r.t) << ',' << format_double(r.q.real()) << ','
        << format_double(r.q.imag()) << ',' << format_double(r.error_estimate) << ','
        << (r.converged ? "true" : "false") << '\n';
  }
}

CommandResult cmd_solve(const RunConfig& config, std::ostream& csv) {
  const Stopwatch clock;
  json notes = json::object();
  const auto rows = solve_grid(config, notes);
  write_csv(csv, rows);
  double max_error = 0.0;
  std::size_t unconverged = 0;
  for (const auto& r : rows) {
    max_error = std::max(max_error, r.error_estimate);
    if (!r.converged) ++unconverged;
  }
  CommandResult out;
  out.exit_code = unconverged == 0 ? kPass : kNumericalFailure;
  out.report = {{"command", "solve"},
                {"status", unconverged == 0 ? "pass" : "unconverged"},
                {"config", config_echo(config)},
                {"rows", rows.size()},
                {"unconverged_rows", unconverged},
                {"max_error_estimate", max_error},
                {"diagnostics", notes},
                {"seconds", clock.seconds()}};
  return out;
}

CommandResult cmd_verify(const RunConfig& config) {
  const Stopwatch clock;
  json notes = json::object();
  const auto pair = build_pair(config, notes);
  const InitialDatum phi = build_datum(config);
  const auto& checks = config.verify.checks;
  const bool needs_domain = std::any_of(checks.begin(), checks.end(), [](const std::string& c) {
    return c == "diagonalization" || c == "remainder";
  });
  if (needs_domain) pair->require_domain(phi);
  json reports = json::array();
  bool pass = true;
  auto add = [&](const VerificationReport& r) {
    pass = pass && r.pass;
    reports.push_back(report_json(r));
  };
  for (const auto& check : checks) {
    if (check == "inversion") {
      add(verify_inversion(pair, phi, config.grid.xs(), config.verify.inversion_tol, config.quadrature));
    } else if (check == "diagonalization") {
      add(verify_diagonalization(*pair, phi, default_lambda_samples(*pair),
                                 config.verify.diagonalization_tol, config.quadrature));
    } else {
      const ManufacturedSolution q(phi, config.verify.kappa);
      for (double t : config.verify.remainder_t) {
        add(verify_remainder_vanishing(*pair, q, config.grid.xs(), t, config.verify.remainder_tol,
                                       config.quadrature));
      }
    }
  }
  CommandResult out;
  out.exit_code = pass ? kPass : kNumericalFailure;
  out.report = {{"command", "verify"},     {"status", pass ? "pass" : "fail"},
                {"config", config_echo(config)}, {"reports", reports},
                {"diagnostics", notes},    {"seconds", clock.seconds()}};
  return out;
}

CommandResult cmd_compare(const RunConfig& config) {
  const Stopwatch clock;
  const InitialDatum Q = build_datum(config);
  const auto closed_form =
      config.problem == ProblemTag::HeatDirichletControl ? control_closed_form(config) : std::nullopt;

  // Oracle first: grid mismatches are configuration errors and cheap to find.
  std::optional<OracleRun> fd;
  json oracle = json::object();
  const Stopwatch oracle_clock;
  if (closed_form) {
    oracle["kind"] = "closed-form";
    oracle["tolerance"] = config.oracle.exact_tol;
  } else {
    try {
      fd = run_fd_oracle(config, Q);
    } catch (const PreconditionError&) {
      throw;
    } catch (const Error& e) {
      CommandResult failed;
      failed.exit_code = kNumericalFailure;
      failed.report = {{"command", "compare"},
                       {"status", "oracle_failed"},
                       {"message", e.what()},
                       {"config", config_echo(config)}};
      return failed;
    }
    oracle["kind"] = "finite-difference";
    oracle["scheme"] = fd->scheme;
    oracle["dx"] = fd->coarse.dx;
    oracle["dt"] = fd->coarse.dt;
    oracle["T"] = fd->coarse.t.back();
    oracle["length"] = fd->coarse.length;
  }
  oracle["seconds"] = oracle_clock.seconds();

  json notes = json::object();
  const auto rows = solve_grid(config, notes);
  json points = json::array();
  double max_diff = 0.0, sum_diff = 0.0, max_oracle_error = 0.0;
  bool converged = true;
  // The FD estimate is a grid quantity: a pointwise Richardson estimate
  // vanishes where the leading error term changes sign. Each output time
  // passes when its largest difference over x is within its largest
  // allowance over x.
  std::map<double, std::pair<double, double>> slices;
  for (const auto& r : rows) {
    converged = converged && r.converged;
    double reference = 0.0, oracle_error = 0.0, allowed = 0.0;
    if (closed_form) {
      reference = (*closed_form)(r.x, r.t);
      allowed = config.oracle.exact_tol;
    } else {
      const RichardsonEstimate e = richardson(fd->coarse, fd->fine, r.x, r.t);
      reference = e.value;
      oracle_error = e.error;
      allowed = 5.0 * e.error;
    }
    const double diff = std::abs(r.q.real() - reference);
    auto& [slice_diff, slice_allowed] = slices[r.t];
    slice_diff = std::max(slice_diff, diff);
    slice_allowed = std::max(slice_allowed, allowed);
    max_diff = std::max(max_diff, diff);
    sum_diff += diff;
    max_oracle_error = std::max(max_oracle_error, oracle_error);
    points.push_back({{"x", r.x}, {"t", r.t}, {"spectral", r.q.real()}, {"oracle", reference},
                      {"oracle_error", oracle_error}, {"diff", diff}, {"within_pointwise", diff <= allowed}});
  }
  bool pass = converged;
  double worst_ratio = 0.0;
  json slice_report = json::array();
  for (const auto& [t, slice] : slices) {
    const auto [slice_diff, slice_allowed] = slice;
    const bool ok = slice_diff <= slice_allowed;
    pass = pass && ok;
    worst_ratio = std::max(worst_ratio, slice_allowed > 0.0 ? slice_diff / slice_allowed
                                                            : std::numeric_limits<double>::infinity());
    slice_report.push_back({{"t", t}, {"max_diff", slice_diff}, {"allowed", slice_allowed}, {"pass", ok}});
  }
  CommandResult out;
  out.exit_code = pass ? kPass : kNumericalFailure;
  out.report = {{"command", "compare"},
                {"status", pass ? "pass" : (converged ? "fail" : "unconverged")},
                {"config", config_echo(config)},
                {"oracle", oracle},
                {"max_abs_diff", max_diff},
                {"mean_abs_diff", rows.empty() ? 0.0 : sum_diff / static_cast<double>(rows.size())},
                {"max_oracle_error", max_oracle_error},
                {"worst_diff_to_allowed", worst_ratio},
                {"slices", slice_report},
                {"points", points},
                {"diagnostics", notes},
                {"seconds", clock.seconds()}};
  return out;
}

json list_problems() {
  json out = json::array();
  for (const auto& p : problem_catalog()) {
    out.push_back({{"tag", p.name},
                   {"description", p.description},
                   {"domain", std::string(to_string(problem_domain(p.tag)))}});
  }
  return out;
}

CommandResult run_guarded(const std::function<CommandResult()>& command) {
  auto failure = [](int code, std::string status, const std::string& message, json extra = json::object()) {
    CommandResult r;
    r.exit_code = code;
    r.report = {{"status", std::move(status)}, {"message", message}};
    r.report.update(extra);
    return r;
  };
  try {
    return command();
  } catch (const ConfigError& e) {
    return failure(kConfigError, "config_error", e.what(), {{"field", e.field()}});
  } catch (const PreconditionError& e) {
    return failure(kPreconditionFailure, "precondition_failed", e.what(),
                   {{"condition", e.condition()}, {"measured", e.measured()}});
  } catch (const DomainError& e) {
    return failure(kConfigError, "config_error", e.what());
  } catch (const InvalidGeometry& e) {
    return failure(kConfigError, "config_error", e.what());
  } catch (const Unconverged& e) {
    return failure(kNumericalFailure, "unconverged", e.what(), {{"estimate", e.estimate()}});
  } catch (const SchemeFailure& e) {
    return failure(kNumericalFailure, "oracle_failed", e.what());
  } catch (const DiscretizationError& e) {
    return failure(kNumericalFailure, "oracle_failed", e.what());
  } catch (const std::exception& e) {
    return failure(kNumericalFailure, "error", e.what());
  }
}

}  // namespace fokas::cli
