#include "fokas/problem_stokes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fokas {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);
const Complex kAlpha = std::polar(1.0, 2.0 * kPi / 3.0);
const Complex kAlpha2 = kAlpha * kAlpha;

// A kernel term c e^{-i kappa lambda y}.
struct KernelTerm {
  Complex c;
  Complex kappa;
};

class StokesPair final : public TransformPair {
 public:
  StokesPair(StokesVariant variant, double truncation)
      : variant_(variant), truncation_(truncation) {}

  std::string name() const override {
    return variant_.bc == StokesBoundary::Neumann ? "stokes-neumann" : "stokes-dirichlet";
  }
  SpatialDomain domain() const override { return SpatialDomain::HalfLine; }
  std::vector<Region> regions() const override {
    return {Region::RealLine, Region::BoundaryDPlus};
  }

  Contour contour(Region region) const override {
    switch (region) {
      case Region::RealLine: return real_line(truncation_);
      case Region::BoundaryDPlus: return boundary_D_plus(truncation_);
      default: throw DomainError("region not used by the Stokes pair");
    }
  }

  QuadratureResult forward(Region region, Complex lambda, const InitialDatum& phi,
                           const QuadratureSettings& settings) const override {
    if (phi.domain() != SpatialDomain::HalfLine) {
      throw DomainError("Stokes transforms act on half-line data");
    }
    if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
      throw DomainError("lambda must be finite");
    }
    std::vector<ExponentialKernelTerm> terms;
    for (const auto& k : kernel(region)) terms.push_back({k.c, kI * k.kappa * lambda});
    return halfline_exponential_transform(terms, phi, settings);
  }

  Complex symbol(Region region, Complex lambda) const override {
    check_region(region);
    return -kI * lambda * lambda * lambda;
  }
  Complex symbol_derivative(Region region, Complex lambda) const override {
    check_region(region);
    return -3.0 * kI * lambda * lambda;
  }
  Complex remainder(Region region, Complex lambda, const InitialDatum& phi) const override {
    check_region(region);
    const Complex r = stokes_r(variant_, lambda, phi);
    return region == Region::RealLine ? -r : r;
  }

  InitialDatum apply_operator(const InitialDatum& phi) const override {
    return phi.differentiated(3);
  }

  void require_domain(const InitialDatum& phi) const override {
    if (phi.domain() != SpatialDomain::HalfLine) {
      throw PreconditionError("datum must live on the half-line", 0.0);
    }
    if (variant_.bc == StokesBoundary::Neumann) {
      const double v = phi.d1(0.0);
      if (std::abs(v) > kDomainTolerance) throw PreconditionError("phi'(0) = 0", std::abs(v));
    } else {
      const double v = phi.value(0.0);
      if (std::abs(v) > kDomainTolerance) throw PreconditionError("phi(0) = 0", std::abs(v));
    }
  }

  double remainder_tail_rotation() const override { return kPi / 6.0; }

 private:
  std::vector<KernelTerm> kernel(Region region) const {
    check_region(region);
    if (region == Region::RealLine) return {{1.0, 1.0}};
    if (variant_.bc == StokesBoundary::Neumann) return {{kAlpha2, kAlpha}, {kAlpha, kAlpha2}};
    return {{kAlpha, kAlpha}, {kAlpha2, kAlpha2}};
  }

  static void check_region(Region region) {
    if (region != Region::RealLine && region != Region::BoundaryDPlus) {
      throw DomainError("region not used by the Stokes pair");
    }
  }

  StokesVariant variant_;
  double truncation_;
};

}  // namespace

std::string_view to_string(StokesBoundary bc) {
  return bc == StokesBoundary::Neumann ? "neumann" : "dirichlet";
}

std::shared_ptr<const TransformPair> stokes_pair(StokesVariant variant, double truncation) {
  require_truncation(truncation);
  return std::make_shared<StokesPair>(variant, truncation);
}

bool stokes_domain_check(StokesVariant variant, const InitialDatum& phi) {
  if (phi.domain() != SpatialDomain::HalfLine) return false;
  const double trace = variant.bc == StokesBoundary::Neumann ? phi.d1(0.0) : phi.value(0.0);
  return std::abs(trace) <= kDomainTolerance;
}

Complex stokes_r(StokesVariant variant, Complex lambda, const InitialDatum& phi) {
  if (variant.bc == StokesBoundary::Neumann) return phi.d2(0.0) - lambda * lambda * phi.value(0.0);
  return phi.d2(0.0) + kI * lambda * phi.d1(0.0);
}

}  // namespace fokas
