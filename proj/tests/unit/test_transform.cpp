#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "fokas/problem_stokes.hpp"

using namespace fokas;

namespace {
constexpr double kPi = std::numbers::pi;
const Complex I(0.0, 1.0);

std::shared_ptr<const TransformPair> stokes() { return stokes_pair({StokesBoundary::Neumann}); }
}  // namespace

TEST_CASE("rotated half-line transform equals the literal real-axis integral") {
  const auto phi = InitialDatum::exponential(1.0, 3, 0.8) + InitialDatum::gaussian(-0.7, 1, 0.5);
  for (Complex s : {Complex(0.0, 4.0), Complex(0.3, -12.0), Complex(0.0, 60.0)}) {
    const auto rotated = halfline_exponential_transform({{1.0, s}}, phi, {});
    const auto literal = integrate_real_halfline(
        [&](double y) { return std::exp(-s * y) * phi.value(y); }, 0.4, QuadratureSettings{}.tightened(10),
        [&](double) { return std::abs(s.imag()); });
    CHECK(rotated.converged);
    CHECK(std::abs(rotated.value - literal.value) < 1e-11);
  }
}

TEST_CASE("rotated half-line transform rejects growing kernels") {
  const auto phi = InitialDatum::gaussian(1.0, 0, 1.0);
  CHECK_THROWS_AS(halfline_exponential_transform({{1.0, Complex(-100.0, 0.0)}}, phi, {}), DomainError);
}

TEST_CASE("inverse of the zero function vanishes") {
  const auto pair = stokes();
  for (double x : {0.3, 1.0, 4.0}) {
    const auto r = inverse(*pair, [](Region, Complex) { return Complex{}; }, x);
    CHECK(r.value == Complex{});
  }
}

TEST_CASE("inverse recovers e^{-y} at x = 1 and is linear") {
  const auto pair = stokes();
  const auto e = InitialDatum::exponential(1.0, 0, 1.0);
  const auto g = InitialDatum::exponential(1.0, 2, 2.0);
  const QuadratureSettings inner = QuadratureSettings{}.tightened(10);
  auto Fe = [&](Region r, Complex l) { return forward(*pair, e, r, l, inner); };
  auto Fg = [&](Region r, Complex l) { return forward(*pair, g, r, l, inner); };
  const auto at1 = inverse(*pair, Fe, 1.0);
  CHECK(std::abs(at1.value - std::exp(-1.0)) < 1e-6);
  const Complex a(0.3, -1.2), b(2.0, 0.5);
  const auto combined = inverse(*pair, [&](Region r, Complex l) { return a * Fe(r, l) + b * Fg(r, l); }, 1.5);
  const auto ge = inverse(*pair, Fg, 1.5);
  const auto ee = inverse(*pair, Fe, 1.5);
  CHECK(std::abs(combined.value - (a * ee.value + b * ge.value)) < 1e-9);
}

TEST_CASE("forward transform is linear in the datum") {
  const auto pair = stokes();
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const auto p = InitialDatum::exponential(1.0, 1, 1.5);
  const auto q = InitialDatum::gaussian(1.0, 2, 0.7);
  for (int k = 0; k < 5; ++k) {
    const double a = u(rng), b = u(rng);
    const Complex l(u(rng) * 3.0, 0.0);
    const Complex lhs = forward(*pair, a * p + b * q, Region::RealLine, l);
    const Complex rhs = a * forward(*pair, p, Region::RealLine, l) + b * forward(*pair, q, Region::RealLine, l);
    CHECK(std::abs(lhs - rhs) < 1e-11);
  }
}

TEST_CASE("spectral coefficient structure") {
  const auto pair = stokes();
  SUBCASE("zero datum stores zeros") {
    const auto c = build_spectral_coefficient(pair, InitialDatum::zero(SpatialDomain::HalfLine), {},
                                              {{1.0}, {0.0}});
    for (const auto& region : c.regions()) {
      for (const auto& seg : region.segments) {
        for (Complex v : seg.values) CHECK(v == Complex{});
      }
    }
    CHECK(c.evaluate(1.0, 0.0).value == Complex{});
  }
  SUBCASE("node count and stored values") {
    const auto q = InitialDatum::exponential(1.0, 2, 1.0);
    const QuadratureSettings settings;
    const auto c = build_spectral_coefficient(pair, q, settings, {{1.0}, {0.0}});
    std::size_t n = 0;
    for (const auto& region : c.regions()) {
      for (const auto& seg : region.segments) {
        CHECK(seg.nodes.size() == seg.values.size());
        CHECK(seg.nodes.size() == 15 * (seg.partition.panels.size() + seg.partition.extension.size()));
        n += seg.nodes.size();
        // Stored values are forward transforms at the build's nested tolerance.
        for (std::size_t k = 0; k < seg.nodes.size(); k += 97) {
          CHECK(seg.values[k] == forward(*pair, q, region.region, seg.nodes[k].z, settings.tightened(10)));
        }
      }
    }
    CHECK(n == c.node_count());
  }
}

TEST_CASE("solve: inversion at t = 0, linearity, domain errors") {
  const auto pair = stokes();
  const auto q = InitialDatum::exponential(1.0, 2, 1.0);
  CHECK(std::abs(solve(pair, q, 1.0, 0.0) - q.value(1.0)) < 1e-5);
  const auto c1 = build_spectral_coefficient(pair, q, {}, {{0.7}, {0.05}});
  const auto c2 = build_spectral_coefficient(pair, -2.5 * q, {}, {{0.7}, {0.05}});
  CHECK(std::abs(c2.evaluate(0.7, 0.05).value + 2.5 * c1.evaluate(0.7, 0.05).value) < 1e-9);
  CHECK_THROWS_AS(solve(pair, q, 1.0, -0.1), DomainError);
  CHECK_THROWS_AS(solve(pair, q, -1.0, 0.1), DomainError);
  CHECK_THROWS_AS(solve(pair, InitialDatum::polynomial({1.0}), 0.5, 0.1), DomainError);
}

TEST_CASE("coefficient route agrees with the fully adaptive route") {
  const auto pair = stokes();
  const auto q = InitialDatum::exponential(1.0, 2, 1.0);
  const auto c = build_spectral_coefficient(pair, q, {}, {{1.0}, {0.05}});
  const auto direct = solve_direct(*pair, q, 1.0, 0.05);
  CHECK(direct.converged);
  CHECK(std::abs(c.evaluate(1.0, 0.05).value - direct.value) < 1e-9);
}

TEST_CASE("verification report semantics") {
  VerificationReport r;
  r.tolerance = 1e-6;
  r.add("a", 0.0, 5e-7);
  r.add("b", 1.0, 2e-7);
  r.finish();
  CHECK(r.pass);
  CHECK(r.max_magnitude == 5e-7);
  r.add("c", 2.0, 2e-6);
  r.finish();
  CHECK_FALSE(r.pass);
}

TEST_CASE("default lambda samples lie on the contours") {
  const auto pair = stokes();
  const auto samples = default_lambda_samples(*pair, 10);
  for (const auto& [region, pts] : samples) {
    CHECK(pts.size() == 10);
    for (Complex l : pts) {
      if (region == Region::RealLine) {
        CHECK(l.imag() == 0.0);
      } else {
        const double a = std::arg(l);
        CHECK((std::abs(a - kPi / 3.0) < 1e-12 || std::abs(a - 2.0 * kPi / 3.0) < 1e-12));
      }
    }
  }
}
