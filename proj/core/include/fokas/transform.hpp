#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fokas/contour.hpp"
#include "fokas/initial_datum.hpp"
#include "fokas/quadrature.hpp"

namespace fokas {

// Second symbol pair of a composite problem M q_t + L q = 0:
// F[L phi] = omega_L F[phi] + R_L[phi] and F[M phi] = omega_M F[phi] + R_M[phi].
class CompositeSymbols {
 public:
  virtual ~CompositeSymbols() = default;
  virtual Complex omega_L(Region region, Complex lambda) const = 0;
  virtual Complex omega_M(Region region, Complex lambda) const = 0;
  virtual Complex remainder_L(Region region, Complex lambda, const InitialDatum& phi) const = 0;
  virtual Complex remainder_M(Region region, Complex lambda, const InitialDatum& phi) const = 0;
  virtual InitialDatum apply_L(const InitialDatum& phi) const = 0;
  virtual InitialDatum apply_M(const InitialDatum& phi) const = 0;
};

// A transform pair F, F^{-1} for one initial boundary value problem
// q_t + L q = 0, with F[L phi] = omega F[phi] + R[phi].
class TransformPair {
 public:
  virtual ~TransformPair() = default;

  virtual std::string name() const = 0;
  virtual SpatialDomain domain() const = 0;
  // Regions of the inverse contour, in summation order.
  virtual std::vector<Region> regions() const = 0;
  virtual Contour contour(Region region) const = 0;

  virtual QuadratureResult forward(Region region, Complex lambda, const InitialDatum& phi,
                                   const QuadratureSettings& settings) const = 0;
  virtual Complex symbol(Region region, Complex lambda) const = 0;
  virtual Complex symbol_derivative(Region region, Complex lambda) const = 0;
  virtual Complex remainder(Region region, Complex lambda, const InitialDatum& phi) const = 0;

  // L phi; for composite pairs the operator L of M q_t + L q = 0.
  virtual InitialDatum apply_operator(const InitialDatum& phi) const = 0;
  // Throws PreconditionError naming the first boundary or nonlocal condition
  // of Dom L that phi violates beyond 1e-10.
  virtual void require_domain(const InitialDatum& phi) const = 0;
  virtual const CompositeSymbols* composite() const { return nullptr; }

  // Real shifts s such that forward transforms behave like sums of
  // e^{-i lambda s} times slowly varying functions on the real line.
  virtual std::vector<double> transform_shifts() const { return {0.0}; }
  // How the unbounded tail of each ray of a region is handled by inverse
  // integrals.
  virtual TailMode tail_mode(Region region) const;
  // Remainder-vanishing integrands only: angle by which real-line tails beyond
  // the truncation radius may be turned into the upper half-plane, where they
  // decay (0: keep the literal real line and extrapolate).
  virtual double remainder_tail_rotation() const { return 0.0; }
};

inline constexpr double kDomainTolerance = 1e-10;

// Forward transform; throws Unconverged on quadrature failure.
Complex forward(const TransformPair& pair, const InitialDatum& phi, Region region,
                Complex lambda, const QuadratureSettings& settings = {});

// Kernel term c e^{-s y} of a half-line forward transform.
struct ExponentialKernelTerm {
  Complex coefficient;
  Complex exponent;
};

// Integral over y in [0, inf) of sum_k c_k e^{-s_k y} phi(y). Built-in
// half-line data are entire and decay in a sector |arg y| < theta, so when the
// kernel oscillates the integral is taken along the ray y = r e^{i psi}
// (|psi| < theta) on which the integrand decays fastest; by Cauchy's theorem
// the value equals the integral along the real half-line. Throws DomainError
// when no admissible ray gives a decaying integrand.
QuadratureResult halfline_exponential_transform(const std::vector<ExponentialKernelTerm>& kernel,
                                                const InitialDatum& phi,
                                                const QuadratureSettings& settings);

// Spectral function given per region.
using SpectralFunction = std::function<Complex(Region, Complex)>;

// (1/2pi) sum over regions of the contour integral of e^{i lambda x} f(lambda).
QuadratureResult inverse(const TransformPair& pair, const SpectralFunction& f, double x,
                         const QuadratureSettings& settings = {});

// Points at which solutions will be requested; they shape the quadrature
// partition of a SpectralCoefficient.
struct SolveHints {
  std::vector<double> xs;
  std::vector<double> ts{0.0};
};
SolveHints default_hints(const TransformPair& pair);

// F[Q] tabulated at the quadrature nodes of each region's inverse contour.
class SpectralCoefficient {
 public:
  struct Segment {
    ContourSegment segment;
    SegmentPartition partition;
    std::vector<QuadratureNode> nodes;
    std::vector<Complex> values;
    bool extrapolated_tail = false;
    double reach = 0.0;  // arc length from the anchor covered by nodes (rays)
  };
  struct RegionTable {
    Region region;
    std::vector<Segment> segments;
  };

  SpectralCoefficient(std::shared_ptr<const TransformPair> pair, InitialDatum datum,
                      QuadratureSettings settings, std::vector<RegionTable> regions,
                      double build_error);

  const TransformPair& pair() const { return *pair_; }
  const InitialDatum& datum() const { return datum_; }
  const std::vector<RegionTable>& regions() const { return regions_; }
  std::size_t node_count() const;
  // Largest error estimate, summed over segments, among the probe
  // integrands (hint points) that shaped the partition.
  double build_error() const { return build_error_; }

  // q(x, t) = (1/2pi) sum over nodes of w e^{i lambda x} e^{-omega t} F[Q],
  // plus extrapolated real-line tails. The error estimate is the build error
  // plus the tail estimates; points away from the hints inherit the
  // partition's accuracy only approximately. Safe to call concurrently.
  QuadratureResult evaluate(double x, double t) const;

 private:
  std::shared_ptr<const TransformPair> pair_;
  InitialDatum datum_;
  QuadratureSettings settings_;
  std::vector<RegionTable> regions_;
  double build_error_;
};

SpectralCoefficient build_spectral_coefficient(std::shared_ptr<const TransformPair> pair,
                                               const InitialDatum& q0,
                                               const QuadratureSettings& settings = {},
                                               const SolveHints& hints = {});

// q(x, t) by the coefficient route (a one-point coefficient build). Throws
// DomainError for t < 0 or x outside the domain, Unconverged on failure.
Complex solve(std::shared_ptr<const TransformPair> pair, const InitialDatum& q0, double x,
              double t, const QuadratureSettings& settings = {});

// Same integral, fully adaptive per point with fresh forward transforms at
// every node; an independent route used for cross-checks.
QuadratureResult solve_direct(const TransformPair& pair, const InitialDatum& q0, double x,
                              double t, const QuadratureSettings& settings = {});

struct VerificationSample {
  std::string label;
  Complex point;
  double magnitude = 0.0;
};

struct VerificationReport {
  std::string check;
  std::vector<VerificationSample> samples;
  double max_magnitude = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  // Quadrature diagnostics.
  double max_error_estimate = 0.0;
  long evaluations = 0;
  double seconds = 0.0;

  void add(std::string label, Complex point, double magnitude);
  void finish();
};

VerificationReport verify_inversion(std::shared_ptr<const TransformPair> pair,
                                    const InitialDatum& phi, const std::vector<double>& xs,
                                    double tol, const QuadratureSettings& settings = {});

// Sample points per region.
using RegionSamples = std::map<Region, std::vector<Complex>>;
RegionSamples default_lambda_samples(const TransformPair& pair, int per_region = 10);

VerificationReport verify_diagonalization(const TransformPair& pair, const InitialDatum& phi,
                                          const RegionSamples& samples, double tol,
                                          const QuadratureSettings& settings = {});

VerificationReport verify_remainder_vanishing(const TransformPair& pair,
                                              const ManufacturedSolution& q,
                                              const std::vector<double>& xs, double t,
                                              double tol,
                                              const QuadratureSettings& settings = {});

}  // namespace fokas
