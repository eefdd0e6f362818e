#pragma once

#include <memory>

#include "fokas/transform.hpp"

namespace fokas {

// Linearized BBM equation (1 - d_xx) q_t + q_x = 0 on [0, inf) with
// q(0, t) = 0, written as M q_t + L q = 0 with L = d_x and M = 1 - d_xx.
//
// Regions REAL_LINE (kernel e^{-i lambda y}) and CIRCLE_C, a circle of the
// given radius about lambda = i (kernel -e^{-i y / lambda} / lambda^2).
// Composite symbols: omega_L = i lambda, omega_M = 1 + lambda^2 on the real
// line; omega_L = i / lambda, omega_M = 1 + 1 / lambda^2 on C; effective
// omega = i lambda / (1 + lambda^2) on both. R_L = 0, R_M = phi'(0) on the
// real line and -phi'(0) / lambda^2 on C.
std::shared_ptr<const TransformPair> bbm_pair(double circle_radius = kDefaultCircleRadius,
                                               double truncation = kDefaultTruncation);

// q(x, t) = F^{-1}[e^{-omega t} F[Q]](x). The remainder term vanishes for
// solutions in Dom L and is not computed here. Throws PreconditionError if
// Q(0) != 0 beyond 1e-10.
Complex bbm_solve(std::shared_ptr<const TransformPair> pair, const InitialDatum& Q, double x,
                  double t, const QuadratureSettings& settings = {});

// True iff phi lives on the half-line and |phi(0)| <= 1e-10.
bool bbm_domain_check(const InitialDatum& phi);

}  // namespace fokas
