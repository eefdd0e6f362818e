#include "fokas/problem_bbm.hpp"

#include <cmath>
#include <sstream>

namespace fokas {
namespace {

const Complex kI(0.0, 1.0);

void require_finite(Complex lambda) {
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
    throw DomainError("lambda must be finite");
  }
}

class BbmPair final : public TransformPair, public CompositeSymbols {
 public:
  BbmPair(double radius, double truncation) : radius_(radius), truncation_(truncation) {
    if (!(radius > 0.0 && radius < 1.0)) {
      throw InvalidGeometry("circle C radius must lie in (0, 1)");
    }
  }

  std::string name() const override { return "bbm-dirichlet"; }
  SpatialDomain domain() const override { return SpatialDomain::HalfLine; }
  std::vector<Region> regions() const override { return {Region::RealLine, Region::CircleC}; }

  Contour contour(Region region) const override {
    check_region(region);
    return region == Region::RealLine ? real_line(truncation_) : circle_C(radius_);
  }

  QuadratureResult forward(Region region, Complex lambda, const InitialDatum& phi,
                           const QuadratureSettings& settings) const override {
    check_region(region);
    require_finite(lambda);
    if (phi.domain() != SpatialDomain::HalfLine) {
      throw DomainError("BBM transforms act on half-line data");
    }
    if (region == Region::RealLine) {
      return halfline_exponential_transform({{1.0, kI * lambda}}, phi, settings);
    }
    if (lambda == Complex{}) throw DomainError("the C kernel is singular at lambda = 0");
    return halfline_exponential_transform({{-1.0 / (lambda * lambda), kI / lambda}}, phi, settings);
  }

  Complex symbol(Region region, Complex lambda) const override {
    check_region(region);
    require_off_poles(lambda);
    return kI * lambda / (1.0 + lambda * lambda);
  }
  Complex symbol_derivative(Region region, Complex lambda) const override {
    check_region(region);
    require_off_poles(lambda);
    const Complex d = 1.0 + lambda * lambda;
    return kI * (1.0 - lambda * lambda) / (d * d);
  }
  // F[L phi] = omega_L F[phi] + R_L[phi] with R_L = 0; the effective symbol
  // carries no remainder of its own.
  Complex remainder(Region region, Complex lambda, const InitialDatum& phi) const override {
    return remainder_L(region, lambda, phi);
  }

  InitialDatum apply_operator(const InitialDatum& phi) const override { return apply_L(phi); }

  void require_domain(const InitialDatum& phi) const override {
    if (phi.domain() != SpatialDomain::HalfLine) {
      throw PreconditionError("datum must live on the half-line", 0.0);
    }
    const double v = std::abs(phi.value(0.0));
    if (v > kDomainTolerance) throw PreconditionError("phi(0) = 0", v);
  }

  const CompositeSymbols* composite() const override { return this; }

  Complex omega_L(Region region, Complex lambda) const override {
    check_region(region);
    if (region == Region::RealLine) return kI * lambda;
    require_nonzero(lambda);
    return kI / lambda;
  }
  Complex omega_M(Region region, Complex lambda) const override {
    check_region(region);
    if (region == Region::RealLine) return 1.0 + lambda * lambda;
    require_nonzero(lambda);
    return 1.0 + 1.0 / (lambda * lambda);
  }
  Complex remainder_L(Region region, Complex, const InitialDatum&) const override {
    check_region(region);
    return 0.0;
  }
  Complex remainder_M(Region region, Complex lambda, const InitialDatum& phi) const override {
    check_region(region);
    if (region == Region::RealLine) return phi.d1(0.0);
    require_nonzero(lambda);
    return -phi.d1(0.0) / (lambda * lambda);
  }
  InitialDatum apply_L(const InitialDatum& phi) const override { return phi.differentiated(1); }
  InitialDatum apply_M(const InitialDatum& phi) const override {
    return phi - phi.differentiated(2);
  }

 private:
  static void check_region(Region region) {
    if (region != Region::RealLine && region != Region::CircleC) {
      throw DomainError("region not used by the BBM pair");
    }
  }
  static void require_nonzero(Complex lambda) {
    if (lambda == Complex{}) throw DomainError("C symbols are singular at lambda = 0");
  }
  static void require_off_poles(Complex lambda) {
    if (1.0 + lambda * lambda == Complex{}) {
      std::ostringstream os;
      os << "omega has a pole at lambda = " << lambda;
      throw DomainError(os.str());
    }
  }

  double radius_;
  double truncation_;
};

}  // namespace

std::shared_ptr<const TransformPair> bbm_pair(double circle_radius, double truncation) {
  require_truncation(truncation);
  return std::make_shared<BbmPair>(circle_radius, truncation);
}

Complex bbm_solve(std::shared_ptr<const TransformPair> pair, const InitialDatum& Q, double x,
                  double t, const QuadratureSettings& settings) {
  if (!pair || !pair->composite()) throw std::invalid_argument("bbm_solve needs a composite pair");
  if (Q.domain() != SpatialDomain::HalfLine) throw DomainError("Q must live on the half-line");
  const double trace = std::abs(Q.value(0.0));
  if (trace > kDomainTolerance) throw PreconditionError("Q(0) = 0", trace);
  return solve(std::move(pair), Q, x, t, settings);
}

bool bbm_domain_check(const InitialDatum& phi) {
  return phi.domain() == SpatialDomain::HalfLine && std::abs(phi.value(0.0)) <= kDomainTolerance;
}

}  // namespace fokas
