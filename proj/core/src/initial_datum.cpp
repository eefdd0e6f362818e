#include "fokas/initial_datum.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fokas {
namespace {

constexpr double kPi = std::numbers::pi;

double horner(const std::vector<double>& p, double x) {
  double v = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

std::vector<double> poly_derivative(const std::vector<double>& p) {
  if (p.size() <= 1) return {};
  std::vector<double> d(p.size() - 1);
  for (std::size_t j = 1; j < p.size(); ++j) d[j - 1] = static_cast<double>(j) * p[j];
  return d;
}

void trim(std::vector<double>& p) {
  while (!p.empty() && p.back() == 0.0) p.pop_back();
}

void require_positive(double a, const char* what) {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::invalid_argument(std::string(what) + " must be positive");
}

}  // namespace

std::string_view to_string(SpatialDomain domain) {
  return domain == SpatialDomain::HalfLine ? "half-line" : "unit-interval";
}

InitialDatum InitialDatum::zero(SpatialDomain domain) { return InitialDatum(domain); }

InitialDatum InitialDatum::exponential(double coefficient, int n, double a) {
  if (n < 0 || n > 3) throw std::invalid_argument("exponential family needs 0 <= n <= 3");
  require_positive(a, "decay rate a");
  InitialDatum d(SpatialDomain::HalfLine);
  Term t;
  t.poly.assign(static_cast<std::size_t>(n) + 1, 0.0);
  t.poly.back() = 1.0;
  t.rate = a;
  t.power = 1;
  t.coefficient = coefficient;
  if (coefficient != 0.0) d.terms_.push_back(std::move(t));
  return d;
}

InitialDatum InitialDatum::gaussian(double coefficient, int n, double a) {
  if (n < 0 || n > 3) throw std::invalid_argument("gaussian family needs 0 <= n <= 3");
  require_positive(a, "decay rate a");
  InitialDatum d(SpatialDomain::HalfLine);
  Term t;
  t.poly.assign(static_cast<std::size_t>(n) + 1, 0.0);
  t.poly.back() = 1.0;
  t.rate = a;
  t.power = 2;
  t.coefficient = coefficient;
  if (coefficient != 0.0) d.terms_.push_back(std::move(t));
  return d;
}

InitialDatum InitialDatum::polynomial(std::vector<double> coefficients) {
  trim(coefficients);
  if (coefficients.size() > 7) throw std::invalid_argument("polynomial degree must be <= 6");
  InitialDatum d(SpatialDomain::UnitInterval);
  if (!coefficients.empty()) {
    Term t;
    t.poly = std::move(coefficients);
    d.terms_.push_back(std::move(t));
  }
  return d;
}

InitialDatum InitialDatum::cosine(double coefficient, int k) {
  if (k < 0) throw std::invalid_argument("cosine wavenumber must be non-negative");
  InitialDatum d(SpatialDomain::UnitInterval);
  Term t;
  t.cosine = true;
  t.k = k;
  t.coefficient = coefficient;
  if (coefficient != 0.0) d.terms_.push_back(std::move(t));
  return d;
}

InitialDatum::Term InitialDatum::differentiate(const Term& term) {
  Term t = term;
  if (term.cosine) {
    t.cos_shift += 1;
    return t;
  }
  // (P e^{-a x^p})' = (P' - a p x^{p-1} P) e^{-a x^p}
  std::vector<double> d = poly_derivative(term.poly);
  if (term.power == 1) {
    d.resize(std::max(d.size(), term.poly.size()), 0.0);
    for (std::size_t j = 0; j < term.poly.size(); ++j) d[j] -= term.rate * term.poly[j];
  } else if (term.power == 2) {
    d.resize(std::max(d.size(), term.poly.size() + 1), 0.0);
    for (std::size_t j = 0; j < term.poly.size(); ++j) d[j + 1] -= 2.0 * term.rate * term.poly[j];
  }
  trim(d);
  t.poly = std::move(d);
  return t;
}

double InitialDatum::evaluate(const Term& term, double x) {
  if (term.cosine) {
    const double w = term.k * kPi;
    const double arg = w * x;
    double v = 0.0;
    switch (term.cos_shift % 4) {
      case 0: v = std::cos(arg); break;
      case 1: v = -std::sin(arg); break;
      case 2: v = -std::cos(arg); break;
      case 3: v = std::sin(arg); break;
    }
    return term.coefficient * std::pow(w, term.cos_shift) * v;
  }
  const double p = horner(term.poly, x);
  if (p == 0.0) return 0.0;
  double e = 1.0;
  if (term.power == 1) e = std::exp(-term.rate * x);
  if (term.power == 2) e = std::exp(-term.rate * x * x);
  return term.coefficient * p * e;
}

Complex InitialDatum::evaluate(const Term& term, Complex z) {
  if (term.cosine) throw std::logic_error("complex evaluation is defined for half-line data only");
  Complex p{};
  for (auto it = term.poly.rbegin(); it != term.poly.rend(); ++it) p = p * z + *it;
  Complex e = 1.0;
  if (term.power == 1) e = std::exp(-term.rate * z);
  if (term.power == 2) e = std::exp(-term.rate * z * z);
  return term.coefficient * p * e;
}

Complex InitialDatum::value(Complex z) const {
  if (domain_ != SpatialDomain::HalfLine) {
    throw std::logic_error("complex evaluation is defined for half-line data only");
  }
  Complex sum{};
  for (const auto& term : terms_) sum += evaluate(term, z);
  return sum;
}

double InitialDatum::decay_sector() const {
  if (domain_ != SpatialDomain::HalfLine) return 0.0;
  double sector = kPi / 2.0;
  for (const auto& t : terms_) {
    if (t.power == 2) sector = std::min(sector, kPi / 4.0);
  }
  return sector;
}

double InitialDatum::derivative(int order, double x) const {
  if (order < 0) throw std::invalid_argument("derivative order must be non-negative");
  double sum = 0.0;
  if (order == 0) {
    for (const auto& term : terms_) sum += evaluate(term, x);
    return sum;
  }
  for (const auto& term : terms_) {
    Term t = term;
    for (int k = 0; k < order; ++k) t = differentiate(t);
    sum += evaluate(t, x);
  }
  return sum;
}

InitialDatum InitialDatum::differentiated(int order) const {
  if (order < 0) throw std::invalid_argument("derivative order must be non-negative");
  InitialDatum d(domain_);
  for (const auto& term : terms_) {
    Term t = term;
    for (int k = 0; k < order; ++k) t = differentiate(t);
    if (t.cosine ? (t.k != 0 || t.cos_shift == 0) : !t.poly.empty()) d.terms_.push_back(std::move(t));
  }
  return d;
}

std::optional<double> InitialDatum::decay_rate() const {
  if (domain_ != SpatialDomain::HalfLine) return std::nullopt;
  double rate = std::numeric_limits<double>::infinity();
  for (const auto& t : terms_) {
    // e^{-a y^2} <= e^{-40 a y} once y >= 40, which is where truncation starts.
    const double r = t.power == 2 ? 40.0 * t.rate : t.rate;
    rate = std::min(rate, r);
  }
  if (!std::isfinite(rate)) rate = 1.0;
  return rate;
}

std::string InitialDatum::describe() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  out.precision(17);
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out << " + ";
    first = false;
    out << t.coefficient << "*";
    if (t.cosine) {
      if (t.cos_shift) out << "d" << t.cos_shift << "/dx " ;
      out << "cos(" << t.k << "*pi*x)";
      continue;
    }
    out << "(";
    for (std::size_t j = 0; j < t.poly.size(); ++j) {
      if (j) out << " + ";
      out << t.poly[j] << "*x^" << j;
    }
    out << ")";
    if (t.power == 1) out << "*exp(-" << t.rate << "*x)";
    if (t.power == 2) out << "*exp(-" << t.rate << "*x^2)";
  }
  return out.str();
}

InitialDatum InitialDatum::operator+(const InitialDatum& other) const {
  if (domain_ != other.domain_) throw std::invalid_argument("cannot combine data on different domains");
  InitialDatum d = *this;
  d.terms_.insert(d.terms_.end(), other.terms_.begin(), other.terms_.end());
  return d;
}

InitialDatum InitialDatum::operator-(const InitialDatum& other) const { return *this + other * -1.0; }

InitialDatum InitialDatum::operator*(double scale) const {
  InitialDatum d(domain_);
  if (scale == 0.0) return d;
  d.terms_ = terms_;
  for (auto& t : d.terms_) t.coefficient *= scale;
  return d;
}

ManufacturedSolution::ManufacturedSolution(InitialDatum profile, double kappa)
    : profile_(std::move(profile)), kappa_(kappa) {
  if (!std::isfinite(kappa)) throw std::invalid_argument("kappa must be finite");
}

double ManufacturedSolution::time_factor(double s) const { return std::exp(-kappa_ * s); }

double ManufacturedSolution::time_factor_derivative(double s) const {
  return -kappa_ * std::exp(-kappa_ * s);
}

Complex ManufacturedSolution::time_factor(Complex s) const { return std::exp(-kappa_ * s); }

Complex ManufacturedSolution::time_factor_derivative(Complex s) const {
  return -kappa_ * std::exp(-kappa_ * s);
}

InitialDatum ManufacturedSolution::at(double s) const { return profile_ * time_factor(s); }

InitialDatum ManufacturedSolution::time_derivative_at(double s) const {
  return profile_ * time_factor_derivative(s);
}

}  // namespace fokas
