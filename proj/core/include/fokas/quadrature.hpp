#pragma once

#include <array>
#include <functional>
#include <vector>

#include "fokas/contour.hpp"

namespace fokas {

struct QuadratureSettings {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  // Adaptive bisections allowed per segment, on top of the panels the
  // oscillation pre-split creates from a phase-rate hint.
  int max_subdivisions = 2000;
  int initial_panels_per_segment = 8;
  // Truncated rays: how often R_max may be doubled when the outermost
  // stretch of the ray is not negligible.
  int max_tail_doublings = 4;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
  // Same budget with both tolerances divided by `factor`.
  QuadratureSettings tightened(double factor) const;
  double target(double magnitude) const;
};

struct QuadratureResult {
  Complex value{};
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;

  QuadratureResult& operator+=(const QuadratureResult& other);
  QuadratureResult& operator*=(Complex factor);
};

using ContourIntegrand = std::function<Complex(Complex)>;
using RealIntegrand = std::function<Complex(double)>;
// Local angular frequency |d(phase)/dz| of an integrand at a point.
using PhaseRate = std::function<double(Complex)>;

enum class TailMode {
  // Integrate up to the truncation radius, monitor the outermost stretch and
  // double the radius while it is not negligible.
  Truncate,
  // Integrate up to the truncation radius, then sum half-period cycles of the
  // remaining oscillatory tail and accelerate them with Wynn's epsilon
  // algorithm. Requires a phase rate.
  Extrapolate,
};

struct OscillationHint {
  PhaseRate rate;
  TailMode tail = TailMode::Truncate;
};

// Gauss-Kronrod 7/15 abscissae on [-1, 1]: index 0..6 are +/- pairs listed by
// decreasing abscissa, index 7 is the centre. Gauss nodes are the odd indices.
struct KronrodRule {
  static constexpr std::array<double, 8> abscissae = {
      0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
      0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
      0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
      0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
  static constexpr std::array<double, 8> kronrod_weights = {
      0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
      0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
      0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
      0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
  static constexpr std::array<double, 4> gauss_weights = {
      0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
      0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

  // The 15 nodes on [a, b] in a fixed order: for k = 0..6 the pair
  // (c - h x_k, c + h x_k), then the centre.
  static std::array<double, 15> nodes(double a, double b);
  // Weights aligned with nodes(); Gauss weights are zero at Kronrod-only nodes.
  static std::array<double, 15> kronrod_weights_on(double a, double b);
  static std::array<double, 15> gauss_weights_on(double a, double b);
};

// Panel-level estimate used by every adaptive routine: Kronrod value and the
// QUADPACK-style error heuristic built from the embedded Gauss rule.
struct PanelEstimate {
  Complex kronrod{};
  double error = 0.0;
  double absolute = 0.0;  // integral of |f|
};
PanelEstimate estimate_panel(const std::array<Complex, 15>& values, double a, double b);

// A parameter sub-interval of a segment chosen by the adaptive routine.
struct Panel {
  double u0;
  double u1;
};

struct SegmentPartition {
  // One result per integrand component, in the segment's own orientation.
  std::vector<QuadratureResult> results;
  // Parameter panels of the canonical parametrization.
  std::vector<Panel> panels;
  // Rays only: linear extension pieces [s0, s1] in arc length from the anchor,
  // appended by tail doubling.
  std::vector<Panel> extension;
};

// A quadrature node of a partition: point on the path and the complex weight
// (Kronrod weight times dz/du times orientation).
struct QuadratureNode {
  Complex z;
  Complex weight;
};
std::vector<QuadratureNode> partition_nodes(const ContourSegment& segment,
                                            const SegmentPartition& partition);

// Vector-valued integrand: writes `count` values for the point z.
using MultiIntegrand = std::function<void(Complex z, Complex* out)>;

QuadratureResult integrate_segment(const ContourIntegrand& f, const ContourSegment& segment,
                                   const QuadratureSettings& settings,
                                   const OscillationHint& hint = {});

// Sum over segments in order; error estimates add.
QuadratureResult integrate_contour(const ContourIntegrand& f, const Contour& contour,
                                   const QuadratureSettings& settings,
                                   const OscillationHint& hint = {});

// Adaptive partition of the finite part of a segment (for rays: the truncated
// ray plus any doubling extensions). Extrapolated tails are not included.
SegmentPartition partition_segment(const ContourIntegrand& f, const ContourSegment& segment,
                                   const QuadratureSettings& settings,
                                   const OscillationHint& hint = {});
// Same for `count` integrands sharing one partition; a panel is refined while
// any component misses its tolerance.
SegmentPartition partition_segment(const MultiIntegrand& f, int count,
                                   const ContourSegment& segment,
                                   const QuadratureSettings& settings,
                                   const OscillationHint& hint = {});

// Integral of f along a ray from `from_reach` (arc length from the anchor) to
// infinity, in the ray's orientation, by Wynn-accelerated half-period cycles.
// `scale` sets the magnitude for the relative tolerance.
QuadratureResult integrate_ray_tail(const ContourIntegrand& f, const ContourSegment& ray,
                                    double from_reach, const QuadratureSettings& settings,
                                    const PhaseRate& rate, double scale);

// Adaptive integral of f over the real interval [a, b]. `rate` is an optional
// local phase rate in the real variable.
QuadratureResult integrate_interval(const RealIntegrand& f, double a, double b,
                                    const QuadratureSettings& settings,
                                    const std::function<double(double)>& rate = {});

// Integral over [0, inf) of an integrand bounded by C e^{-decay_rate y}.
// Truncates at y_max = max(40, 40 / decay_rate) and adds the neglected tail
// bound |f(y_max)| / decay_rate to the error estimate.
QuadratureResult integrate_real_halfline(const RealIntegrand& f, double decay_rate,
                                         const QuadratureSettings& settings,
                                         const std::function<double(double)>& rate = {});

double halfline_cutoff(double decay_rate);

// Wynn epsilon extrapolation of a sequence of partial sums. Returns the
// estimate and a heuristic error (difference of the last estimates).
struct Extrapolation {
  Complex value{};
  double error = 0.0;
};
Extrapolation wynn_epsilon(const std::vector<Complex>& partial_sums);

// (1 / 2 pi i) times the integral of 1/(z - z0) along the given closed path.
double winding_number(const std::vector<ContourSegment>& closed_path, Complex z0,
                      const QuadratureSettings& settings = {});

}  // namespace fokas
