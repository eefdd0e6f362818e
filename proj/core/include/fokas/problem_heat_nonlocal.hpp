#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fokas/transform.hpp"

namespace fokas {

// Sensor kernel K of the nonlocal condition int_0^1 K(y) q(y, t) dy = 0.
class SensorKernel {
 public:
  // K(y) = cos^2(pi y / (2 eps)) on [0, eps], 0 elsewhere.
  static SensorKernel bump(double eps = 0.2);
  // K = 1 on [0, 1]. Not supported near 0; meant for closed-form checks of
  // Delta and zeta only.
  static SensorKernel degenerate_uniform();

  double operator()(double y) const;
  double support_width() const { return eps_; }
  bool degenerate() const { return degenerate_; }
  std::string describe() const;

 private:
  SensorKernel(double eps, bool degenerate) : eps_(eps), degenerate_(degenerate) {}
  double eps_;
  bool degenerate_;
};

// Which exponentially scaled form of Delta / zeta to evaluate. Upper:
// e^{i lambda} Delta and e^{i lambda} zeta^+, bounded for Im lambda >= 0.
// Lower: e^{-i lambda} Delta and e^{-2 i lambda} zeta^-, bounded for
// Im lambda <= 0.
enum class HeatScaling { None, Upper, Lower };

// Delta(lambda) = int_0^1 K(y) cos((1 - y) lambda) dy.
QuadratureResult delta_integral(const SensorKernel& K, Complex lambda,
                                const QuadratureSettings& settings = {},
                                HeatScaling scaling = HeatScaling::None);
// Delta'(lambda) by the differentiated integrand.
QuadratureResult delta_derivative_integral(const SensorKernel& K, Complex lambda,
                                           const QuadratureSettings& settings = {});
// zeta^+(lambda; phi) = int K(y) cos((1-y) lambda) int_0^y e^{-i lambda z} phi dz dy
//                     + int K(y) e^{-i lambda y} int_y^1 cos((1-z) lambda) phi dz dy.
// Nested quadrature: outer over the support of K, inner per outer node with
// 10x tighter tolerance.
QuadratureResult zeta_plus_integral(const SensorKernel& K, const InitialDatum& phi, Complex lambda,
                                    const QuadratureSettings& settings = {},
                                    HeatScaling scaling = HeatScaling::None);
// zeta^-(lambda; phi) = int K(y) int_y^1 sin((z - y) lambda) phi(z) dz dy.
QuadratureResult zeta_minus_integral(const SensorKernel& K, const InitialDatum& phi,
                                     Complex lambda, const QuadratureSettings& settings = {},
                                     HeatScaling scaling = HeatScaling::None);

// Unscaled values; throw Unconverged on quadrature failure.
Complex delta(const SensorKernel& K, Complex lambda, const QuadratureSettings& settings = {});
Complex zeta_plus(const SensorKernel& K, const InitialDatum& phi, Complex lambda,
                  const QuadratureSettings& settings = {});
Complex zeta_minus(const SensorKernel& K, const InitialDatum& phi, Complex lambda,
                   const QuadratureSettings& settings = {});

// Number of zeros of Delta inside the rectangle [lo.re, hi.re] x [lo.im, hi.im]
// by the argument principle (continuous tracking of arg Delta along the
// boundary). Throws SelectionFailure if Delta vanishes on the boundary.
int delta_zero_count(const SensorKernel& K, Complex lo, Complex hi,
                     const QuadratureSettings& settings = {});

struct ZeroCertificate {
  double search_bound = 0.0;
  int resolution = 0;       // initial boxes per side of the search square
  int boxes_searched = 0;   // boxes whose winding number was computed
  int zero_count = 0;       // with multiplicity
  double max_abs_imag = 0.0;
  std::vector<Complex> zeros;
};

// Zeros of Delta in |Re|, |Im| <= search_bound: argument-principle quadtree
// down to box diameter 1e-3, then Newton polish.
ZeroCertificate locate_delta_zeros(const SensorKernel& K, double search_bound = 20.0,
                                   int resolution = 8, const QuadratureSettings& settings = {});

struct RhoSelection {
  double rho = 0.0;
  ZeroCertificate certificate;
};

inline constexpr double kRhoLadder[] = {2.0, 4.0, 8.0, 16.0, 32.0};
inline constexpr double kContourClearance = 0.1;

// Smallest ladder value rho with all located zeros |Im| < rho / sqrt(2) and
// no zero within 0.1 of the contours dD_rho^+-. Throws SelectionFailure.
RhoSelection select_rho(const SensorKernel& K, double search_bound = 20.0,
                        const QuadratureSettings& settings = {});
// Certifies a user-chosen rho against a zero certificate; throws
// SelectionFailure if it does not satisfy the selection conditions.
RhoSelection certify_rho(double rho, const ZeroCertificate& certificate);
bool rho_admissible(double rho, const ZeroCertificate& certificate);

// r_+(lambda; phi) = -phi'(0) - i lambda phi(0); r_-(lambda; phi) = -i lambda phi(1).
Complex heat_r_plus(Complex lambda, const InitialDatum& phi);
Complex heat_r_minus(Complex lambda, const InitialDatum& phi);

// Transform pair for q_t = q_xx on (0, 1) with int K q = 0 and q_x(1, t) = 0.
// Regions REAL_LINE, BOUNDARY_D_RHO_PLUS, BOUNDARY_D_RHO_MINUS; omega = lambda^2.
std::shared_ptr<const TransformPair> heat_pair(const SensorKernel& K, const RhoSelection& rho,
                                               double truncation = kDefaultTruncation);

// int K phi = 0 (by quadrature) and phi'(1) = 0, both to 1e-10.
bool heat_domain_check(const SensorKernel& K, const InitialDatum& phi);
double heat_nonlocal_integral(const SensorKernel& K, const InitialDatum& phi);

// a cos(pi x) + b cos(2 pi x) with (a, b) solving int K phi = 0, normalized
// to a^2 + b^2 = 1 and a >= 0: a member of Dom L for any kernel.
InitialDatum heat_cosine_datum(const SensorKernel& K);

}  // namespace fokas
