#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fokas/initial_datum.hpp"
#include "fokas/quadrature.hpp"

namespace fokas::cli {

// Invalid configuration; `field` names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class ProblemTag { StokesNeumann, StokesDirichlet, HeatNonlocal, BbmDirichlet, HeatDirichletControl };

struct ProblemInfo {
  ProblemTag tag;
  std::string_view name;
  std::string_view description;
};
const std::vector<ProblemInfo>& problem_catalog();
std::string_view to_string(ProblemTag tag);
SpatialDomain problem_domain(ProblemTag tag);

struct DatumSpec {
  // exponential | gaussian | polynomial | cosine | heat-cosine. Defaults per
  // problem: x^2 e^{-x} (stokes-neumann), x e^{-x} (stokes-dirichlet,
  // bbm-dirichlet), x e^{-x^2} (control), the kernel's cosine datum (heat).
  std::string family;
  double coefficient = 1.0;
  int n = 1;
  double a = 1.0;
  std::vector<double> coefficients;
  int k = 1;
};

struct KernelSpec {
  std::string shape = "bump";  // bump | uniform
  double eps = 0.2;
};

struct ContourSpec {
  double r_max = 40.0;
  std::optional<double> rho;
  double circle_radius = 0.5;
};

struct GridSpec {
  double x_min = 0.0;
  double x_max = 0.0;
  int x_count = 0;
  std::vector<double> t;
  std::vector<double> xs() const;
};

struct VerifySpec {
  std::vector<std::string> checks{"inversion", "diagonalization", "remainder"};
  double inversion_tol = 1e-6;
  double diagonalization_tol = 1e-8;
  double remainder_tol = 1e-6;
  std::vector<double> remainder_t{0.25, 0.5};
  double kappa = 1.0;
};

struct OracleSpec {
  double dx = 0.0;  // 0: 1/200 on [0, 1], length/1500 on the half-line
  double dt = 0.0;  // 0: T/400
  double T = 0.0;   // 0: the largest output time
  double length = 30.0;
  // Closed-form oracles have no discretization error; they pass when the
  // difference is below this tolerance.
  double exact_tol = 1e-6;
};

struct RunConfig {
  ProblemTag problem = ProblemTag::StokesNeumann;
  DatumSpec datum;
  KernelSpec kernel;
  QuadratureSettings quadrature;
  ContourSpec contour;
  GridSpec grid;
  VerifySpec verify;
  OracleSpec oracle;
  std::string csv_path;
  std::string json_path;
  int workers = 1;

  // Resolved oracle steps.
  double oracle_T() const;
  double oracle_dt() const;
  double oracle_dx() const;
};

// Flat key=value text with optional [section] headers; keys inside a section
// are addressed as "section.key". '#' starts a comment.
std::map<std::string, std::string> parse_key_values(const std::string& text);

// Every key the configuration understands, as "section.key".
const std::vector<std::string>& known_keys();

// FOKAS_SECTION_KEY environment overrides (for example FOKAS_GRID_X_COUNT)
// for every known key that is set in the environment.
std::map<std::string, std::string> environment_overrides();

// Builds and validates a configuration from merged key/value pairs. Throws
// ConfigError naming the first offending field.
RunConfig make_config(const std::map<std::string, std::string>& values);

InitialDatum build_datum(const RunConfig& config);

// Flat echo of the resolved configuration.
std::map<std::string, std::string> describe(const RunConfig& config);

}  // namespace fokas::cli
