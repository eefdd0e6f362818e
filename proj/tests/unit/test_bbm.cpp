#include <cmath>

#include "doctest.h"
#include "fokas/problem_bbm.hpp"

using namespace fokas;

namespace {
const Complex I(0.0, 1.0);
}  // namespace

TEST_CASE("effective and composite symbols") {
  const auto pair = bbm_pair();
  const auto* comp = pair->composite();
  REQUIRE(comp != nullptr);
  CHECK(std::abs(pair->symbol(Region::RealLine, 1.0) - 0.5 * I) < 1e-15);
  CHECK(pair->symbol(Region::RealLine, 0.0) == Complex{});
  const Complex l = 2.0 * I;
  CHECK(std::abs(comp->omega_L(Region::CircleC, l) - 0.5) < 1e-15);
  CHECK(std::abs(comp->omega_M(Region::CircleC, l) - 0.75) < 1e-15);
  CHECK(std::abs(pair->symbol(Region::CircleC, l) - 2.0 / 3.0) < 1e-15);
  for (Region r : {Region::RealLine, Region::CircleC}) {
    for (Complex z : {Complex(0.4, 0.9), Complex(-3.0, 0.2), Complex(0.0, 1.3)}) {
      CHECK(std::abs(pair->symbol(r, z) * comp->omega_M(r, z) - comp->omega_L(r, z)) < 1e-14);
    }
  }
  CHECK_THROWS_AS(pair->symbol(Region::RealLine, I), DomainError);
  CHECK_THROWS_AS(pair->symbol(Region::CircleC, -I), DomainError);
}

TEST_CASE("omega is purely imaginary on the real line") {
  const auto pair = bbm_pair();
  for (double l = -50.0; l <= 50.0; l += 0.73) {
    CHECK(pair->symbol(Region::RealLine, l).real() == 0.0);
  }
}

TEST_CASE("remainders") {
  const auto pair = bbm_pair();
  const auto* comp = pair->composite();
  const auto phi = InitialDatum::exponential(1.0, 1, 1.0);  // phi'(0) = 1
  CHECK(comp->remainder_L(Region::RealLine, 2.0, phi) == Complex{});
  CHECK(comp->remainder_L(Region::CircleC, I, phi) == Complex{});
  CHECK(std::abs(comp->remainder_M(Region::RealLine, 2.0, phi) - 1.0) < 1e-15);
  CHECK(std::abs(comp->remainder_M(Region::CircleC, 2.0 * I, phi) - 0.25) < 1e-15);
  CHECK(pair->remainder(Region::RealLine, 3.0, phi) == Complex{});
}

TEST_CASE("domain check") {
  CHECK(bbm_domain_check(InitialDatum::exponential(1.0, 1, 1.0)));
  CHECK_FALSE(bbm_domain_check(InitialDatum::exponential(1.0, 0, 1.0)));
  CHECK(bbm_domain_check(InitialDatum::gaussian(1.0, 2, 1.0)));
  CHECK_FALSE(bbm_domain_check(InitialDatum::polynomial({0.0, 1.0})));
  CHECK_THROWS_AS(bbm_pair()->require_domain(InitialDatum::exponential(1.0, 0, 1.0)),
                  PreconditionError);
  CHECK_THROWS_AS(bbm_pair(1.0), InvalidGeometry);
  CHECK_THROWS_AS(bbm_pair(0.0), InvalidGeometry);
}

TEST_CASE("forward transforms of x e^{-x}") {
  const auto pair = bbm_pair();
  const auto phi = InitialDatum::exponential(1.0, 1, 1.0);
  for (double l : {0.3, -4.0, 120.0}) {
    const Complex exact = 1.0 / ((1.0 + I * l) * (1.0 + I * l));
    CHECK(std::abs(forward(*pair, phi, Region::RealLine, l) - exact) < 1e-12);
  }
  for (double theta : {0.0, 1.0, 2.5, 4.0}) {
    const Complex l = I + std::polar(0.5, theta);
    const Complex exact = -1.0 / ((l + I) * (l + I));
    CHECK(std::abs(forward(*pair, phi, Region::CircleC, l) - exact) < 1e-12);
  }
  CHECK_THROWS_AS(pair->forward(Region::CircleC, 0.0, phi, {}), DomainError);
}

TEST_CASE("composite diagonalization") {
  const auto pair = bbm_pair();
  for (const auto& phi : {InitialDatum::exponential(1.0, 1, 1.0),
                          InitialDatum::gaussian(1.0, 2, 1.0) + InitialDatum::exponential(0.5, 3, 2.0)}) {
    const auto samples = default_lambda_samples(*pair);
    CHECK(samples.at(Region::RealLine).size() >= 10);
    CHECK(samples.at(Region::CircleC).size() >= 10);
    const auto report = verify_diagonalization(*pair, phi, samples, 1e-8);
    CHECK(report.pass);
    // Both the L and the M identity are reported for every lambda.
    CHECK(report.samples.size() == 2 * (samples.at(Region::RealLine).size() +
                                        samples.at(Region::CircleC).size()));
  }
}

TEST_CASE("the C part of a forward transform inverts to zero") {
  const auto pair = bbm_pair();
  for (const auto& phi : {InitialDatum::exponential(1.0, 1, 1.0), InitialDatum::gaussian(1.0, 0, 1.0),
                          InitialDatum::exponential(2.0, 3, 0.5)}) {
    auto only_c = [&](Region r, Complex l) {
      return r == Region::CircleC ? forward(*pair, phi, r, l, QuadratureSettings{}.tightened(10))
                                  : Complex{};
    };
    for (double x : {0.5, 2.0}) CHECK(std::abs(inverse(*pair, only_c, x).value) < 1e-12);
  }
}

TEST_CASE("solve: t = 0, compatibility, radius independence") {
  const auto pair = bbm_pair(0.5);
  const auto Q = InitialDatum::exponential(1.0, 1, 1.0);
  for (double x : {0.5, 1.0, 3.0}) CHECK(std::abs(bbm_solve(pair, Q, x, 0.0) - Q.value(x)) < 1e-5);
  CHECK_THROWS_AS(bbm_solve(pair, InitialDatum::exponential(1.0, 0, 1.0), 1.0, 0.1), PreconditionError);
  const auto small = bbm_pair(0.3);
  const QuadratureSettings settings;
  for (auto [x, t] : {std::pair{1.0, 0.1}, std::pair{2.5, 0.5}, std::pair{0.4, 1.0}}) {
    const Complex a = bbm_solve(pair, Q, x, t), b = bbm_solve(small, Q, x, t);
    CHECK(std::abs(a - b) <= 2.0 * settings.target(std::abs(a)));
    CHECK(std::abs(a.imag()) < 1e-10);
  }
}

TEST_CASE("solution satisfies (1 - d_xx) q_t + q_x = 0") {
  const auto pair = bbm_pair();
  const auto Q = InitialDatum::exponential(1.0, 1, 1.0);
  const double x = 1.0, t = 0.3;
  const auto c = build_spectral_coefficient(pair, Q, {}, {{0.9, 1.0, 1.1}, {0.2, 0.3, 0.4}});
  auto q = [&](double xx, double tt) { return c.evaluate(xx, tt).value; };
  auto residual = [&](double h) {
    auto qt = [&](double xx) { return (q(xx, t + h) - q(xx, t - h)) / (2.0 * h); };
    const Complex qxxt = (qt(x + h) - 2.0 * qt(x) + qt(x - h)) / (h * h);
    const Complex qx = (q(x + h, t) - q(x - h, t)) / (2.0 * h);
    return std::abs(qt(x) - qxxt + qx);
  };
  const double r1 = residual(0.08), r2 = residual(0.04);
  CHECK(r2 < r1);
  CHECK(std::log2(r1 / r2) > 1.8);
}

TEST_CASE("remainder vanishes for a manufactured solution") {
  const auto pair = bbm_pair();
  const ManufacturedSolution q(InitialDatum::exponential(1.0, 1, 1.0), 1.0);
  for (double t : {0.25, 0.5}) {
    const auto report = verify_remainder_vanishing(*pair, q, {0.5, 1.0, 2.0}, t, 1e-6);
    CHECK(report.pass);
    CHECK(report.max_magnitude < 1e-6);
  }
}
