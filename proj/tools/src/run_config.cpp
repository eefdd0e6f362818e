#include "run_config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

#include "fokas/problem_heat_nonlocal.hpp"

namespace fokas::cli {
namespace {

std::string trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_double(const std::string& field, const std::string& value) {
  const std::string v = trim(value);
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size() || !std::isfinite(d)) {
    throw ConfigError(field, "expected a finite number, got '" + value + "'");
  }
  return d;
}

int parse_int(const std::string& field, const std::string& value) {
  const std::string v = trim(value);
  char* end = nullptr;
  const long i = std::strtol(v.c_str(), &end, 10);
  if (v.empty() || end != v.c_str() + v.size() || i < -1000000000L || i > 1000000000L) {
    throw ConfigError(field, "expected an integer, got '" + value + "'");
  }
  return static_cast<int>(i);
}

std::vector<double> parse_doubles(const std::string& field, const std::string& value) {
  std::vector<double> out;
  for (const auto& item : split_list(value)) out.push_back(parse_double(field, item));
  return out;
}

std::string join(const std::vector<double>& values) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

std::string number(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void require(bool ok, const std::string& field, const std::string& message) {
  if (!ok) throw ConfigError(field, message);
}

}  // namespace

const std::vector<ProblemInfo>& problem_catalog() {
  static const std::vector<ProblemInfo> catalog = {
      {ProblemTag::StokesNeumann, "stokes-neumann", "q_t + q_xxx = 0 on x > 0, q_x(0, t) = 0"},
      {ProblemTag::StokesDirichlet, "stokes-dirichlet", "q_t + q_xxx = 0 on x > 0, q(0, t) = 0"},
      {ProblemTag::HeatNonlocal, "heat-nonlocal",
       "q_t = q_xx on (0, 1), int K q = 0, q_x(1, t) = 0"},
      {ProblemTag::BbmDirichlet, "bbm-dirichlet", "(1 - d_xx) q_t + q_x = 0 on x > 0, q(0, t) = 0"},
      {ProblemTag::HeatDirichletControl, "heat-dirichlet-control",
       "q_t = q_xx on x > 0, q(0, t) = 0, by the sine transform"},
  };
  return catalog;
}

std::string_view to_string(ProblemTag tag) {
  for (const auto& p : problem_catalog()) {
    if (p.tag == tag) return p.name;
  }
  return "unknown";
}

SpatialDomain problem_domain(ProblemTag tag) {
  return tag == ProblemTag::HeatNonlocal ? SpatialDomain::UnitInterval : SpatialDomain::HalfLine;
}

std::vector<double> GridSpec::xs() const {
  std::vector<double> out;
  if (x_count == 1) return {x_min};
  for (int i = 0; i < x_count; ++i) out.push_back(x_min + (x_max - x_min) * i / (x_count - 1));
  return out;
}

double RunConfig::oracle_T() const {
  if (oracle.T > 0.0) return oracle.T;
  return grid.t.empty() ? 0.0 : *std::max_element(grid.t.begin(), grid.t.end());
}

double RunConfig::oracle_dt() const { return oracle.dt > 0.0 ? oracle.dt : oracle_T() / 400.0; }

double RunConfig::oracle_dx() const {
  if (oracle.dx > 0.0) return oracle.dx;
  return problem_domain(problem) == SpatialDomain::UnitInterval ? 1.0 / 200.0
                                                               : oracle.length / 1500.0;
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string line, section;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      require(line.back() == ']' && line.size() > 2, "line " + std::to_string(line_no),
              "malformed section header");
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    require(eq != std::string::npos, "line " + std::to_string(line_no), "expected key = value");
    std::string key = trim(line.substr(0, eq));
    require(!key.empty(), "line " + std::to_string(line_no), "empty key");
    if (!section.empty()) key = section + "." + key;
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys = {
      "problem.tag",        "problem.kernel",          "problem.kernel_eps",
      "datum.family",       "datum.coefficient",       "datum.n",
      "datum.a",            "datum.coefficients",      "datum.k",
      "quadrature.rel_tol", "quadrature.abs_tol",      "quadrature.max_subdivisions",
      "quadrature.initial_panels", "quadrature.max_tail_doublings",
      "contour.r_max",      "contour.rho",             "contour.circle_radius",
      "grid.x_min",         "grid.x_max",              "grid.x_count",
      "grid.t",             "verify.checks",           "verify.inversion_tol",
      "verify.diagonalization_tol", "verify.remainder_tol", "verify.remainder_t",
      "verify.kappa",       "oracle.dx",               "oracle.dt",
      "oracle.T",           "oracle.length",           "oracle.exact_tol",
      "output.csv",         "output.json",             "run.workers",
  };
  return keys;
}

std::map<std::string, std::string> environment_overrides() {
  std::map<std::string, std::string> out;
  for (const auto& key : known_keys()) {
    std::string name = "FOKAS_";
    for (char c : key) name += c == '.' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (const char* value = std::getenv(name.c_str())) out[key] = value;
  }
  return out;
}

RunConfig make_config(const std::map<std::string, std::string>& values) {
  const std::set<std::string> known(known_keys().begin(), known_keys().end());
  for (const auto& [key, value] : values) require(known.count(key) > 0, key, "unknown key");
  auto get = [&](const std::string& key) -> const std::string* {
    const auto it = values.find(key);
    return it == values.end() ? nullptr : &it->second;
  };

  RunConfig c;
  const std::string* tag = get("problem.tag");
  require(tag != nullptr, "problem.tag", "missing");
  bool found = false;
  for (const auto& p : problem_catalog()) {
    if (p.name == trim(*tag)) {
      c.problem = p.tag;
      found = true;
    }
  }
  require(found, "problem.tag", "unknown problem '" + *tag + "'");
  const SpatialDomain domain = problem_domain(c.problem);

  if (auto v = get("problem.kernel")) c.kernel.shape = trim(*v);
  if (auto v = get("problem.kernel_eps")) c.kernel.eps = parse_double("problem.kernel_eps", *v);
  require(c.kernel.shape == "bump" || c.kernel.shape == "uniform", "problem.kernel",
          "expected bump or uniform");
  require(c.kernel.eps > 0.0 && c.kernel.eps <= 1.0, "problem.kernel_eps", "must lie in (0, 1]");
  if (c.problem == ProblemTag::HeatNonlocal) {
    require(c.kernel.shape == "bump", "problem.kernel",
            "the uniform kernel has no admissible transform pair");
  }

  // Default Dom L datum per problem; individual parameters still apply.
  switch (c.problem) {
    case ProblemTag::StokesNeumann:
      c.datum.family = "exponential";
      c.datum.n = 2;
      break;
    case ProblemTag::StokesDirichlet:
    case ProblemTag::BbmDirichlet:
      c.datum.family = "exponential";
      break;
    case ProblemTag::HeatDirichletControl:
      c.datum.family = "gaussian";
      break;
    case ProblemTag::HeatNonlocal:
      c.datum.family = "heat-cosine";
      break;
  }
  if (auto v = get("datum.family")) c.datum.family = trim(*v);
  if (auto v = get("datum.coefficient")) c.datum.coefficient = parse_double("datum.coefficient", *v);
  if (auto v = get("datum.n")) c.datum.n = parse_int("datum.n", *v);
  if (auto v = get("datum.a")) c.datum.a = parse_double("datum.a", *v);
  if (auto v = get("datum.coefficients")) c.datum.coefficients = parse_doubles("datum.coefficients", *v);
  if (auto v = get("datum.k")) c.datum.k = parse_int("datum.k", *v);
  const std::string& family = c.datum.family;
  if (domain == SpatialDomain::HalfLine) {
    require(family == "exponential" || family == "gaussian", "datum.family",
            "half-line problems take exponential or gaussian data");
    require(c.datum.n >= 0 && c.datum.n <= 3, "datum.n", "must lie in 0..3");
    require(c.datum.a > 0.0, "datum.a", "must be positive");
  } else {
    require(family == "polynomial" || family == "cosine" || family == "heat-cosine",
            "datum.family", "interval problems take polynomial, cosine or heat-cosine data");
    require(family != "polynomial" || (!c.datum.coefficients.empty() && c.datum.coefficients.size() <= 7),
            "datum.coefficients", "polynomial data need 1 to 7 coefficients");
    require(c.datum.k >= 0, "datum.k", "must be non-negative");
  }

  auto& q = c.quadrature;
  if (auto v = get("quadrature.rel_tol")) q.rel_tol = parse_double("quadrature.rel_tol", *v);
  if (auto v = get("quadrature.abs_tol")) q.abs_tol = parse_double("quadrature.abs_tol", *v);
  if (auto v = get("quadrature.max_subdivisions")) q.max_subdivisions = parse_int("quadrature.max_subdivisions", *v);
  if (auto v = get("quadrature.initial_panels")) q.initial_panels_per_segment = parse_int("quadrature.initial_panels", *v);
  if (auto v = get("quadrature.max_tail_doublings")) q.max_tail_doublings = parse_int("quadrature.max_tail_doublings", *v);
  try {
    q.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("quadrature", e.what());
  }

  if (auto v = get("contour.r_max")) c.contour.r_max = parse_double("contour.r_max", *v);
  if (auto v = get("contour.rho")) c.contour.rho = parse_double("contour.rho", *v);
  if (auto v = get("contour.circle_radius")) c.contour.circle_radius = parse_double("contour.circle_radius", *v);
  require(c.contour.r_max > 0.0, "contour.r_max", "must be positive");
  require(!c.contour.rho || (*c.contour.rho > 0.0 && *c.contour.rho < c.contour.r_max), "contour.rho",
          "must lie in (0, r_max)");
  require(c.contour.circle_radius > 0.0 && c.contour.circle_radius < 1.0, "contour.circle_radius",
          "must lie in (0, 1)");

  const bool interval = domain == SpatialDomain::UnitInterval;
  c.grid.x_min = interval ? 0.2 : 0.5;
  c.grid.x_max = interval ? 0.8 : 2.5;
  c.grid.x_count = interval ? 4 : 5;
  c.grid.t = {0.1};
  if (auto v = get("grid.x_min")) c.grid.x_min = parse_double("grid.x_min", *v);
  if (auto v = get("grid.x_max")) c.grid.x_max = parse_double("grid.x_max", *v);
  if (auto v = get("grid.x_count")) c.grid.x_count = parse_int("grid.x_count", *v);
  if (auto v = get("grid.t")) c.grid.t = parse_doubles("grid.t", *v);
  require(c.grid.x_count >= 1, "grid.x_count", "must be at least 1");
  require(c.grid.x_min <= c.grid.x_max, "grid.x_max", "must not be below grid.x_min");
  require(c.grid.x_min >= 0.0, "grid.x_min", "must be non-negative");
  require(!interval || c.grid.x_max <= 1.0, "grid.x_max", "must not exceed 1 on [0, 1]");
  require(!c.grid.t.empty(), "grid.t", "must list at least one time");
  for (double t : c.grid.t) require(t >= 0.0, "grid.t", "times must be non-negative");

  if (auto v = get("verify.checks")) {
    c.verify.checks = split_list(*v);
    require(!c.verify.checks.empty(), "verify.checks", "must name at least one check");
    for (const auto& check : c.verify.checks) {
      require(check == "inversion" || check == "diagonalization" || check == "remainder",
              "verify.checks", "unknown check '" + check + "'");
    }
  }
  if (auto v = get("verify.inversion_tol")) c.verify.inversion_tol = parse_double("verify.inversion_tol", *v);
  if (auto v = get("verify.diagonalization_tol")) c.verify.diagonalization_tol = parse_double("verify.diagonalization_tol", *v);
  if (auto v = get("verify.remainder_tol")) c.verify.remainder_tol = parse_double("verify.remainder_tol", *v);
  if (auto v = get("verify.remainder_t")) c.verify.remainder_t = parse_doubles("verify.remainder_t", *v);
  if (auto v = get("verify.kappa")) c.verify.kappa = parse_double("verify.kappa", *v);
  require(!c.verify.remainder_t.empty(), "verify.remainder_t", "must list at least one time");
  for (double t : c.verify.remainder_t) require(t > 0.0, "verify.remainder_t", "times must be positive");

  if (auto v = get("oracle.dx")) c.oracle.dx = parse_double("oracle.dx", *v);
  if (auto v = get("oracle.dt")) c.oracle.dt = parse_double("oracle.dt", *v);
  if (auto v = get("oracle.T")) c.oracle.T = parse_double("oracle.T", *v);
  if (auto v = get("oracle.length")) c.oracle.length = parse_double("oracle.length", *v);
  if (auto v = get("oracle.exact_tol")) c.oracle.exact_tol = parse_double("oracle.exact_tol", *v);
  require(c.oracle.dx >= 0.0, "oracle.dx", "must be non-negative");
  require(c.oracle.dt >= 0.0, "oracle.dt", "must be non-negative");
  require(c.oracle.T >= 0.0, "oracle.T", "must be non-negative");
  require(c.oracle.length >= 30.0, "oracle.length", "must be at least 30");
  require(c.oracle.exact_tol > 0.0, "oracle.exact_tol", "must be positive");

  if (auto v = get("output.csv")) c.csv_path = trim(*v);
  if (auto v = get("output.json")) c.json_path = trim(*v);
  if (auto v = get("run.workers")) c.workers = parse_int("run.workers", *v);
  require(c.workers >= 1 && c.workers <= 256, "run.workers", "must lie in 1..256");
  return c;
}

InitialDatum build_datum(const RunConfig& config) {
  const DatumSpec& d = config.datum;
  if (d.family == "exponential") return InitialDatum::exponential(d.coefficient, d.n, d.a);
  if (d.family == "gaussian") return InitialDatum::gaussian(d.coefficient, d.n, d.a);
  if (d.family == "polynomial") return InitialDatum::polynomial(d.coefficients);
  if (d.family == "cosine") return InitialDatum::cosine(d.coefficient, d.k);
  return heat_cosine_datum(SensorKernel::bump(config.kernel.eps)) * d.coefficient;
}

std::map<std::string, std::string> describe(const RunConfig& c) {
  std::map<std::string, std::string> out;
  out["problem.tag"] = std::string(to_string(c.problem));
  if (c.problem == ProblemTag::HeatNonlocal) {
    out["problem.kernel"] = c.kernel.shape;
    out["problem.kernel_eps"] = number(c.kernel.eps);
  }
  out["datum"] = build_datum(c).describe();
  out["quadrature.rel_tol"] = number(c.quadrature.rel_tol);
  out["quadrature.abs_tol"] = number(c.quadrature.abs_tol);
  out["contour.r_max"] = number(c.contour.r_max);
  if (c.contour.rho) out["contour.rho"] = number(*c.contour.rho);
  if (c.problem == ProblemTag::BbmDirichlet) out["contour.circle_radius"] = number(c.contour.circle_radius);
  out["grid.x"] = join(c.grid.xs());
  out["grid.t"] = join(c.grid.t);
  out["run.workers"] = std::to_string(c.workers);
  return out;
}

}  // namespace fokas::cli
