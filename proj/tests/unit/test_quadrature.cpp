#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fokas/quadrature.hpp"

using fokas::Complex;
using fokas::ContourSegment;
using fokas::QuadratureSettings;

namespace {
constexpr double kPi = std::numbers::pi;
const Complex I(0.0, 1.0);
}  // namespace

TEST_CASE("unit integrand on a unit segment") {
  const auto r = fokas::integrate_segment([](Complex) { return Complex(1.0); },
                                          ContourSegment::segment(0.0, 1.0), {});
  CHECK(std::abs(r.value - 1.0) < 1e-15);
  CHECK(r.converged);
}

TEST_CASE("Cauchy integrals on circles") {
  const auto r = fokas::integrate_segment([](Complex z) { return 1.0 / z; },
                                          ContourSegment::circle(0.0, 0.5), {});
  CHECK(std::abs(r.value - Complex(0.0, 2.0 * kPi)) < 1e-12);
  const auto c = fokas::integrate_contour([](Complex z) { return 1.0 / (z - I); },
                                          fokas::circle_C(0.5), {});
  CHECK(std::abs(c.value - Complex(0.0, 2.0 * kPi)) < 1e-12);
  const auto zero = fokas::integrate_contour([](Complex) { return Complex{}; },
                                             fokas::boundary_D_rho(1, 2.0, 40.0), {});
  CHECK(zero.value == Complex{});
  CHECK(zero.converged);
}

TEST_CASE("exponential along the positive real ray") {
  const auto r = fokas::integrate_segment([](Complex z) { return std::exp(-z); },
                                          ContourSegment::ray(0.0, 1.0, 40.0), {});
  CHECK(std::abs(r.value - 1.0) < 1e-12);
  CHECK(r.converged);
}

TEST_CASE("e^{iz} over the boundary of D+ vanishes") {
  fokas::OscillationHint hint{[](Complex) { return 1.0; }, fokas::TailMode::Truncate};
  const auto r = fokas::integrate_contour([](Complex z) { return std::exp(I * z); },
                                          fokas::boundary_D_plus(40.0), {}, hint);
  CHECK(std::abs(r.value) < 2e-8);
}

TEST_CASE("real half-line transforms") {
  const QuadratureSettings s;
  auto transform = [&](double lambda, auto phi, double decay) {
    return fokas::integrate_real_halfline(
               [&](double y) { return std::exp(Complex(0.0, -lambda * y)) * phi(y); }, decay, s,
               [lambda](double) { return std::abs(lambda); })
        .value;
  };
  auto e = [](double y) { return std::exp(-y); };
  CHECK(std::abs(transform(0.0, e, 1.0) - 1.0) < 1e-12);
  CHECK(std::abs(transform(1.0, e, 1.0) - 1.0 / Complex(1.0, 1.0)) < 1e-12);
  CHECK(std::abs(transform(0.0, [](double y) { return y * std::exp(-y * y); }, 1.0) - 0.5) <
        1e-12);
  CHECK(fokas::halfline_cutoff(0.5) == 80.0);
  CHECK(fokas::halfline_cutoff(2.0) == 40.0);
}

TEST_CASE("settings validation") {
  QuadratureSettings s;
  s.rel_tol = 0.0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = {};
  s.max_subdivisions = 4;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  CHECK_NOTHROW(QuadratureSettings{}.validate());
}

TEST_CASE("non-finite integrand raises with the offending point") {
  const auto seg = ContourSegment::segment(-1.0, 1.0);
  QuadratureSettings s;
  s.initial_panels_per_segment = 1;  // the centre node is z = 0
  try {
    fokas::integrate_segment(
        [](Complex z) { return z == 0.0 ? Complex(std::nan("")) : Complex(1.0); }, seg, s);
    FAIL("expected a singularity");
  } catch (const fokas::IntegrandSingularity& e) {
    CHECK(std::abs(e.point()) < 1e-15);
  }
}

TEST_CASE("budget exhaustion is reported, never silent") {
  QuadratureSettings s;
  s.max_subdivisions = 10;
  const auto r = fokas::integrate_interval([](double x) { return Complex(std::sqrt(x)); }, 0.0,
                                           1.0, s);
  CHECK_FALSE(r.converged);
  CHECK(r.error_estimate > 0.0);
}

TEST_CASE("polynomials up to degree 22 are exact on finite segments") {
  const auto seg = ContourSegment::segment(Complex(-1.0, 0.5), Complex(2.0, 1.0));
  const Complex a = seg.start(), b = seg.end();
  for (int n : {0, 1, 5, 13, 22}) {
    QuadratureSettings s;
    s.initial_panels_per_segment = 1;
    s.max_subdivisions = 1;
    const auto r = fokas::integrate_segment([n](Complex z) { return std::pow(z, n); }, seg, s);
    const Complex exact = (std::pow(b, n + 1) - std::pow(a, n + 1)) / double(n + 1);
    CHECK(std::abs(r.value - exact) < 1e-13 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("orientation antisymmetry is exact") {
  auto f = [](Complex z) { return std::exp(I * z) / (1.0 + z * z); };
  for (const auto& seg : {ContourSegment::ray(Complex(1.0, 1.0), std::polar(1.0, 0.7), 30.0),
                          ContourSegment::arc(0.0, 2.0, 0.2, 2.5),
                          ContourSegment::circle(Complex(0.0, 3.0), 0.5)}) {
    const auto fwd = fokas::integrate_segment(f, seg, {});
    const auto back = fokas::integrate_segment(f, seg.reversed(), {});
    CHECK(fwd.value == -back.value);
  }
}

TEST_CASE("additivity under splitting") {
  auto f = [](Complex z) { return std::cos(3.0 * z) * std::exp(-z * z / 4.0); };
  const Complex a(-2.0, 0.3), b(3.0, -0.7);
  const auto whole = fokas::integrate_segment(f, ContourSegment::segment(a, b), {});
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> unif(0.05, 0.95);
  for (int k = 0; k < 5; ++k) {
    const Complex m = a + unif(rng) * (b - a);
    const auto left = fokas::integrate_segment(f, ContourSegment::segment(a, m), {});
    const auto right = fokas::integrate_segment(f, ContourSegment::segment(m, b), {});
    CHECK(std::abs(left.value + right.value - whole.value) <=
          whole.error_estimate + left.error_estimate + right.error_estimate + 1e-15);
  }
}

TEST_CASE("error estimates are honest on a closed-form suite") {
  struct Case {
    std::function<Complex(double)> f;
    double a, b;
    Complex exact;
  };
  const std::vector<Case> suite = {
      {[](double x) { return Complex(std::exp(x)); }, 0, 1, std::exp(1.0) - 1.0},
      {[](double x) { return Complex(std::sqrt(x)); }, 0, 1, 2.0 / 3.0},
      {[](double x) { return Complex(std::log(x)); }, 0, 1, -1.0},
      {[](double x) { return Complex(1.0 / (1.0 + x * x)); }, -5, 5, 2.0 * std::atan(5.0)},
      {[](double x) { return Complex(std::cos(50.0 * x)); }, 0, 1, std::sin(50.0) / 50.0},
      {[](double x) { return std::exp(Complex(0.0, 20.0 * x)); }, 0, 2,
       (std::exp(Complex(0.0, 40.0)) - 1.0) / Complex(0.0, 20.0)},
      {[](double x) { return Complex(x * x * x * x * x); }, -1, 2, (64.0 - 1.0) / 6.0},
      {[](double x) { return Complex(std::exp(-x * x)); }, -6, 6, std::sqrt(kPi) * std::erf(6.0)},
      {[](double x) { return Complex(std::abs(x - 0.3)); }, 0, 1, 0.5 * (0.09 + 0.49)},
      {[](double x) { return Complex(1.0 / (x * x + 1e-4)); }, -1, 1, 2.0 * 100.0 * std::atan(100.0)},
      {[](double x) { return Complex(std::sin(x) / x); }, 1e-300, kPi, 1.851937051982466},
      {[](double x) { return Complex(std::pow(x, -0.5)); }, 0, 1, 2.0},
      {[](double x) { return Complex(x * std::exp(-x)); }, 0, 40, 1.0 - 41.0 * std::exp(-40.0)},
      {[](double x) { return Complex(std::cos(x), std::sin(2.0 * x)); }, 0, kPi, Complex(0.0, 0.0)},
      {[](double x) { return Complex(1.0 / (1.0 + x)); }, 0, 1, std::log(2.0)},
      {[](double x) { return Complex(std::tanh(20.0 * (x - 0.5))); }, 0, 1, 0.0},
      {[](double x) { return Complex(std::exp(-x) * std::sin(10.0 * x)); }, 0, 10,
       (10.0 - std::exp(-10.0) * (std::sin(100.0) + 10.0 * std::cos(100.0))) / 101.0},
      {[](double x) { return Complex(std::cbrt(x)); }, 0, 8, 12.0},
      {[](double x) { return Complex(x * x) * std::exp(Complex(0.0, x)); }, 0, 1,
       Complex(2.0 * std::cos(1.0) - std::sin(1.0), 2.0 * std::sin(1.0) + std::cos(1.0) - 2.0)},
      {[](double x) { return Complex(std::exp(std::cos(x))); }, 0, 2.0 * kPi,
       2.0 * kPi * std::cyl_bessel_i(0.0, 1.0)},
  };
  int honest = 0;
  for (const auto& c : suite) {
    const auto r = fokas::integrate_interval(c.f, c.a, c.b, {});
    const double err = std::abs(r.value - c.exact);
    if (err <= 10.0 * r.error_estimate || err < 1e-15) ++honest;
  }
  CHECK(honest >= 19);
}

TEST_CASE("Wynn epsilon accelerates an alternating series") {
  std::vector<Complex> sums;
  Complex s{};
  for (int k = 0; k < 20; ++k) {
    s += (k % 2 == 0 ? 1.0 : -1.0) / (k + 1.0);
    sums.push_back(s);
  }
  const auto e = fokas::wynn_epsilon(sums);
  CHECK(std::abs(e.value - std::log(2.0)) < 1e-12);
}

TEST_CASE("extrapolated oscillatory tail on the real ray") {
  // Integral over [0, inf) of e^{i x lambda} / (1 + lambda) for x = 0.7;
  // reference value from an independent high-precision oscillatory quadrature.
  const double x = 0.7;
  fokas::OscillationHint hint{[x](Complex) { return x; }, fokas::TailMode::Extrapolate};
  const auto r = fokas::integrate_segment(
      [x](Complex l) { return std::exp(I * l * x) / (1.0 + l); },
      ContourSegment::ray(0.0, 1.0, 40.0), {}, hint);
  const Complex expected(0.49620147302773905, 0.74513714305410932);
  CHECK(std::abs(r.value - expected) < 1e-9);
  CHECK(r.converged);
}
