#pragma once

#include <string>
#include <vector>

#include "fokas/initial_datum.hpp"
#include "fokas/problem_heat_nonlocal.hpp"
#include "fokas/problem_stokes.hpp"
#include "fokas/quadrature.hpp"

namespace fokas {

// Real samples on a uniform space-time grid, row-major in time:
// values[k * x.size() + j] = q(x[j], t[k]).
struct GridSolution {
  std::vector<double> x;
  std::vector<double> t;
  std::vector<double> values;
  double dx = 0.0;
  double dt = 0.0;      // time step of the scheme (recorded rows may be sparser)
  double length = 0.0;  // spatial domain length, truncated for half-line problems
  std::string scheme;

  double at(std::size_t time_index, std::size_t space_index) const;
  // Row index of a recorded time; throws DomainError if t is not recorded.
  std::size_t time_index(double time) const;
  // Cubic Lagrange interpolation in x on the recorded row at time t.
  double sample(double x, double time) const;
};

// Time stepping and recording controls shared by the finite-difference
// solvers. Rows are recorded at t = 0 and every `record_every` steps.
struct FdOptions {
  int record_every = 1;
};

// (2/pi) int_0^inf sin(lambda x) e^{-lambda^2 t} S(lambda) dlambda with
// S(lambda) = int_0^inf sin(lambda y) Q(y) dy: the classical solution of
// q_t = q_xx on the half-line with q(0, t) = 0. Requires Q(0) = 0.
QuadratureResult heat_dirichlet_sine_solution(const InitialDatum& Q, double x, double t,
                                              const QuadratureSettings& settings = {});

// q_t = q_xx on (0, 1) with int K q = 0 (trapezoid rule, replacing the x = 0
// row) and q_x(1, t) = 0 (second-order one-sided); Crank-Nicolson in time.
GridSolution fd_heat_nonlocal(const SensorKernel& K, const InitialDatum& Q, double dx, double dt,
                              double T, FdOptions options = {});

// q_t = q_xx on (0, L) with q(0, t) = q(L, t) = 0; Crank-Nicolson. Reference
// for the half-line Dirichlet control problem.
GridSolution fd_heat_dirichlet_halfline(const InitialDatum& Q, double dx, double dt, double T,
                                        double length = 30.0, FdOptions options = {});

// q_t + q_xxx = 0 on (0, L): five-point centred third difference, one-sided
// next to x = 0, the variant's boundary condition at 0, q = q_x = 0 at L and a
// quadratic sponge on the last quarter; implicit trapezoidal time stepping.
GridSolution fd_stokes_halfline(const InitialDatum& Q, StokesVariant variant, double dx,
                                double dt, double T, double length = 30.0,
                                FdOptions options = {});

// (1 - d_xx) q_t + q_x = 0 on (0, L) with q(0, t) = q(L, t) = 0: each step
// solves the tridiagonal Helmholtz-type system of the implicit trapezoidal
// rule.
GridSolution fd_bbm_halfline(const InitialDatum& Q, double dx, double dt, double T,
                             double length = 30.0, FdOptions options = {});

// Richardson estimate for a second-order scheme from solutions at steps h and
// h/2: error of the coarse value ~ 4/3 |u_h - u_{h/2}|.
struct RichardsonEstimate {
  double value = 0.0;         // u_h
  double refined = 0.0;       // u_{h/2}
  double extrapolated = 0.0;  // (4 u_{h/2} - u_h) / 3
  double error = 0.0;         // 4/3 |u_h - u_{h/2}|
};
RichardsonEstimate richardson(const GridSolution& coarse, const GridSolution& fine, double x,
                              double t);

// log2 of max |u_h - u_{h/2}| / max |u_{h/2} - u_{h/4}| over the sample points.
double observed_order(const GridSolution& h, const GridSolution& h2, const GridSolution& h4,
                      const std::vector<double>& xs, const std::vector<double>& ts);

// Finite-difference weights for the m-th derivative at x0 from the given
// nodes (Fornberg's recursion).
std::vector<double> fd_weights(double x0, const std::vector<double>& nodes, int m);

}  // namespace fokas
