#include <cmath>
#include <cstdlib>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"

using namespace fokas;
using namespace fokas::cli;

namespace {

RunConfig config_from(const std::string& text) { return make_config(parse_key_values(text)); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string line; std::getline(ss, line);) out.push_back(line);
  return out;
}

const char* kControl = R"(
[problem]
tag = heat-dirichlet-control   # sine-transform reference
[grid]
x_min = 0.5
x_max = 1.5
x_count = 3
t = 0, 0.25
)";

}  // namespace

TEST_CASE("key = value parsing with sections and comments") {
  const auto kv = parse_key_values("# header\n[grid]\nx_count = 4\n t=0.1,0.2 \n[run]\nworkers=2\n");
  CHECK(kv.at("grid.x_count") == "4");
  CHECK(kv.at("grid.t") == "0.1,0.2");
  CHECK(kv.at("run.workers") == "2");
  CHECK_THROWS_AS(parse_key_values("[grid\nx = 1\n"), ConfigError);
  CHECK_THROWS_AS(parse_key_values("no equals sign\n"), ConfigError);
}

TEST_CASE("configuration validation names the offending field") {
  auto field_of = [](const std::string& text) {
    try {
      config_from(text);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return std::string("none");
  };
  CHECK(field_of("") == "problem.tag");
  CHECK(field_of("problem.tag = wave") == "problem.tag");
  CHECK(field_of("problem.tag = stokes-neumann\ngrid.t =\n") == "grid.t");
  CHECK(field_of("problem.tag = stokes-neumann\ngrid.x_count = 0\n") == "grid.x_count");
  CHECK(field_of("problem.tag = heat-nonlocal\ngrid.x_max = 1.5\n") == "grid.x_max");
  CHECK(field_of("problem.tag = heat-nonlocal\nproblem.kernel = uniform\n") == "problem.kernel");
  CHECK(field_of("problem.tag = stokes-neumann\ndatum.family = cosine\n") == "datum.family");
  CHECK(field_of("problem.tag = stokes-neumann\ncolour = blue\n") == "colour");
  CHECK(field_of("problem.tag = bbm-dirichlet\ncontour.circle_radius = 1.2\n") == "contour.circle_radius");
  CHECK(field_of("problem.tag = stokes-neumann\nquadrature.rel_tol = -1\n") == "quadrature");
  CHECK(field_of("problem.tag = stokes-neumann\nverify.checks = inversion, magic\n") == "verify.checks");
  CHECK(field_of("problem.tag = stokes-neumann\nrun.workers = x\n") == "run.workers");
  CHECK(field_of(kControl) == "none");
}

TEST_CASE("environment overrides") {
  setenv("FOKAS_GRID_X_COUNT", "7", 1);
  setenv("FOKAS_PROBLEM_TAG", "bbm-dirichlet", 1);
  const auto env = environment_overrides();
  unsetenv("FOKAS_GRID_X_COUNT");
  unsetenv("FOKAS_PROBLEM_TAG");
  CHECK(env.at("grid.x_count") == "7");
  const RunConfig c = make_config(env);
  CHECK(c.problem == ProblemTag::BbmDirichlet);
  CHECK(c.grid.xs().size() == 7);
}

TEST_CASE("shortest round-trip formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(0.25) == "0.25");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("control solve: CSV layout, realness, t = 0 rows, determinism") {
  RunConfig c = config_from(kControl);
  std::ostringstream a, b;
  const auto result = cmd_solve(c, a);
  CHECK(result.exit_code == kPass);
  CHECK(result.report["rows"] == 6);
  const auto rows = lines(a.str());
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == "x,t,re_q,im_q,quad_err_est,converged");
  nlohmann::json notes;
  for (const auto& r : solve_grid(c, notes)) {
    CHECK(std::abs(r.q.imag()) < 1e-10);
    CHECK(r.converged);
    if (r.t == 0.0) CHECK(std::abs(r.q.real() - r.x * std::exp(-r.x * r.x)) < 1e-5);
  }
  c.workers = 3;
  cmd_solve(c, b);
  CHECK(a.str() == b.str());
}

TEST_CASE("verify: pass, and the Dom L gate") {
  const RunConfig bbm = config_from("problem.tag = bbm-dirichlet\nverify.checks = inversion\n");
  const auto ok = cmd_verify(bbm);
  CHECK(ok.exit_code == kPass);
  CHECK(ok.report["reports"][0]["check"] == "inversion");
  const RunConfig bad = config_from(
      "problem.tag = stokes-neumann\ndatum.n = 0\nverify.checks = diagonalization\n");
  const auto gated = run_guarded([&] { return cmd_verify(bad); });
  CHECK(gated.exit_code == kPreconditionFailure);
  CHECK(gated.report["status"] == "precondition_failed");
  const RunConfig control = config_from(kControl);
  CHECK(run_guarded([&] { return cmd_verify(control); }).exit_code == kConfigError);
}

TEST_CASE("compare: closed-form control and grid mismatches") {
  const RunConfig c = config_from("problem.tag = heat-dirichlet-control\ngrid.x_count = 5\ngrid.t = 0.1, 0.2, 0.5\n");
  const auto r = cmd_compare(c);
  CHECK(r.exit_code == kPass);
  CHECK(r.report["oracle"]["kind"] == "closed-form");
  CHECK(r.report["max_abs_diff"].get<double>() < 1e-6);

  const RunConfig fd = config_from(
      "problem.tag = heat-dirichlet-control\ndatum.n = 3\ngrid.t = 0.1, 0.2\ngrid.x_count = 3\n");
  const auto f = cmd_compare(fd);
  CHECK(f.exit_code == kPass);
  CHECK(f.report["oracle"]["kind"] == "finite-difference");

  const RunConfig mismatched = config_from(
      "problem.tag = bbm-dirichlet\ngrid.t = 0.1301\noracle.T = 0.2\n");
  const auto m = run_guarded([&] { return cmd_compare(mismatched); });
  CHECK(m.exit_code == kConfigError);
  CHECK(m.report["field"] == "grid.t");
  const RunConfig far = config_from("problem.tag = bbm-dirichlet\ngrid.x_max = 20\n");
  CHECK(run_guarded([&] { return cmd_compare(far); }).report["field"] == "grid.x_max");
}

TEST_CASE("problem catalogue") {
  const auto list = list_problems();
  REQUIRE(list.size() == 5);
  CHECK(list[0]["tag"] == "stokes-neumann");
  CHECK(list[4]["tag"] == "heat-dirichlet-control");
}

TEST_CASE("worker pool keeps index order and rethrows the first failure") {
  std::vector<int> out(50);
  parallel_for(out.size(), 4, [&](std::size_t i) { out[i] = static_cast<int>(i * i); });
  for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i));
  CHECK_THROWS_WITH(parallel_for(10, 3,
                                 [](std::size_t i) {
                                   if (i == 4 || i == 7) throw std::runtime_error(std::to_string(i));
                                 }),
                    "4");
}
