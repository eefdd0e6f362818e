#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fokas/error.hpp"

namespace fokas {

enum class SpatialDomain { HalfLine, UnitInterval };

std::string_view to_string(SpatialDomain domain);

// Smooth real datum with closed-form derivatives of every order.
//
// Half-line families: c x^n e^{-a x} and c x^n e^{-a x^2} (n <= 3, a > 0).
// Interval families on [0, 1]: polynomials of degree <= 6 and c cos(k pi x).
// Data of the same domain combine linearly.
class InitialDatum {
 public:
  static InitialDatum zero(SpatialDomain domain);
  static InitialDatum exponential(double coefficient, int n, double a);
  static InitialDatum gaussian(double coefficient, int n, double a);
  // coefficients[j] multiplies x^j.
  static InitialDatum polynomial(std::vector<double> coefficients);
  static InitialDatum cosine(double coefficient, int k);

  SpatialDomain domain() const { return domain_; }
  double value(double x) const { return derivative(0, x); }
  double d1(double x) const { return derivative(1, x); }
  double d2(double x) const { return derivative(2, x); }
  double d3(double x) const { return derivative(3, x); }
  double derivative(int order, double x) const;
  // Half-line data extend to entire functions; value at complex z.
  Complex value(Complex z) const;
  // Half-line data: half-angle theta of the sector |arg z| < theta in which
  // the datum decays as |z| grows (0 for interval data).
  double decay_sector() const;
  // The datum differentiated `order` times, as a datum of the same kind.
  InitialDatum differentiated(int order) const;

  // Half-line data: a with |d^k phi(y)| <= C e^{-a y} for large y.
  std::optional<double> decay_rate() const;
  bool is_zero() const { return terms_.empty(); }
  std::string describe() const;

  InitialDatum operator+(const InitialDatum& other) const;
  InitialDatum operator-(const InitialDatum& other) const;
  InitialDatum operator*(double scale) const;

 private:
  // coefficient * P(x) * e^{-rate x^power} (power 0, 1 or 2), or
  // coefficient * cos(k pi x) when cosine is set (derivative order folded in).
  struct Term {
    std::vector<double> poly;  // P(x), low order first
    double rate = 0.0;
    int power = 0;
    bool cosine = false;
    int k = 0;
    int cos_shift = 0;  // number of derivatives taken of cos(k pi x)
    double coefficient = 1.0;
  };

  explicit InitialDatum(SpatialDomain domain) : domain_(domain) {}
  static Term differentiate(const Term& term);
  static double evaluate(const Term& term, double x);
  static Complex evaluate(const Term& term, Complex z);

  SpatialDomain domain_;
  std::vector<Term> terms_;
};

inline InitialDatum operator*(double scale, const InitialDatum& d) { return d * scale; }

// Separable manufactured solution q(x, s) = e^{-kappa s} phi(x).
class ManufacturedSolution {
 public:
  ManufacturedSolution(InitialDatum profile, double kappa = 1.0);

  const InitialDatum& profile() const { return profile_; }
  double kappa() const { return kappa_; }
  double time_factor(double s) const;
  double time_factor_derivative(double s) const;
  // The time factor is entire; values at complex s.
  Complex time_factor(Complex s) const;
  Complex time_factor_derivative(Complex s) const;
  // q(., s) and q_t(., s) as data.
  InitialDatum at(double s) const;
  InitialDatum time_derivative_at(double s) const;

 private:
  InitialDatum profile_;
  double kappa_;
};

}  // namespace fokas
