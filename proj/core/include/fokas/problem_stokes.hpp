#pragma once

#include <memory>
#include <string_view>

#include "fokas/transform.hpp"

namespace fokas {

// Linearized Stokes (third-order) equation q_t + q_xxx = 0 on the half-line.
enum class StokesBoundary { Neumann, Dirichlet };

struct StokesVariant {
  StokesBoundary bc = StokesBoundary::Neumann;
};

std::string_view to_string(StokesBoundary bc);

// Transform pair for q_t + q_xxx = 0 on [0, inf) with q_x(0, t) = 0 (Neumann)
// or q(0, t) = 0 (Dirichlet). Regions: REAL_LINE and BOUNDARY_D_PLUS, both
// with omega = -i lambda^3.
std::shared_ptr<const TransformPair> stokes_pair(StokesVariant variant,
                                                 double truncation = kDefaultTruncation);

// True iff the variant's boundary trace of phi vanishes to 1e-10.
bool stokes_domain_check(StokesVariant variant, const InitialDatum& phi);

// r(lambda; phi): phi''(0) - lambda^2 phi(0) (Neumann) or
// phi''(0) + i lambda phi'(0) (Dirichlet).
Complex stokes_r(StokesVariant variant, Complex lambda, const InitialDatum& phi);

}  // namespace fokas
