#include "fokas/problem_heat_nonlocal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fokas {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

// Nested integrals: inner integrals run this much tighter than the outer one.
constexpr double kInnerTightening = 10.0;
// Quadtree boxes are refined down to this diameter before Newton polishing.
constexpr double kZeroBoxDiameter = 1e-3;
// Largest phase increment accepted between neighbouring samples of Delta on a
// box edge.
constexpr double kMaxPhaseStep = kPi / 4.0;

double oscillation(Complex lambda) { return std::abs(lambda.real()); }

// Settings for the many short nested integrals: the phase-rate pre-split
// already resolves oscillation, so start from a single panel.
QuadratureSettings single_panel(QuadratureSettings s) {
  s.initial_panels_per_segment = 1;
  return s;
}

void absorb(QuadratureResult& into, const QuadratureResult& part) {
  into.evaluations += part.evaluations;
  into.converged = into.converged && part.converged;
}

// Outer integral over the support of K of K(y) inner(y), where inner(y) may
// itself be a quadrature; inner failures mark the result unconverged.
template <typename Inner>
QuadratureResult outer_integral(const SensorKernel& K, Complex lambda,
                                const QuadratureSettings& settings, Inner inner) {
  QuadratureResult nested;
  const auto rate = [lambda](double) { return oscillation(lambda); };
  QuadratureResult out = integrate_interval(
      [&](double y) {
        const double k = K(y);
        if (k == 0.0) return Complex{};
        return k * inner(y, nested);
      },
      0.0, K.support_width(), single_panel(settings), rate);
  out.error_estimate += nested.error_estimate;
  absorb(out, nested);
  return out;
}

template <typename Kernel>
Complex inner_integral(const InitialDatum& phi, double a, double b, Complex lambda,
                       const QuadratureSettings& inner, QuadratureResult& acc, Kernel kernel) {
  if (a == b) return {};
  const auto rate = [lambda](double) { return oscillation(lambda); };
  const QuadratureResult r = integrate_interval(
      [&](double z) { return kernel(z) * phi.value(z); }, a, b, single_panel(inner), rate);
  // The outer rule weights each inner error by K <= 1 and weights summing to
  // the support width <= 1, so the largest inner error bounds their effect.
  acc.error_estimate = std::max(acc.error_estimate, r.error_estimate);
  absorb(acc, r);
  return r.value;
}

Complex value_or_throw(const QuadratureResult& r, const char* what, Complex lambda) {
  if (!r.converged) {
    std::ostringstream os;
    os << what << " did not converge at lambda = " << lambda;
    throw Unconverged(os.str(), r.error_estimate);
  }
  return r.value;
}

double distance_to_ray(Complex z, Complex anchor, Complex direction) {
  const double s = std::max(0.0, std::real((z - anchor) * std::conj(direction)));
  return std::abs(z - (anchor + s * direction));
}

// Distance from z to dD_rho^{sign}: the arc |lambda| = rho between the two
// rays of arg sign*pi/4 and sign*3pi/4, plus those rays.
double distance_to_boundary(Complex z, double rho, int sign) {
  const double a0 = sign * kPi / 4.0, a1 = sign * 3.0 * kPi / 4.0;
  const Complex d0 = std::polar(1.0, a0), d1 = std::polar(1.0, a1);
  double d = std::min(distance_to_ray(z, rho * d0, d0), distance_to_ray(z, rho * d1, d1));
  const double lo = std::min(a0, a1), hi = std::max(a0, a1);
  const double arg = std::arg(z);
  if (std::abs(z) > 0.0 && arg >= lo && arg <= hi) d = std::min(d, std::abs(std::abs(z) - rho));
  return d;
}

// Accumulated change of arg Delta along the straight edge z0 -> z1.
class PhaseTracker {
 public:
  PhaseTracker(const SensorKernel& K, const QuadratureSettings& settings, double scale)
      : K_(K), settings_(settings), floor_(1e-12 * std::max(1.0, scale)) {}

  Complex value(Complex z) {
    ++evaluations_;
    const Complex v = value_or_throw(delta_integral(K_, z, settings_), "Delta", z);
    if (std::abs(v) < 1e-13) throw SelectionFailure("Delta vanishes on a box edge");
    return v;
  }

  double edge(Complex z0, Complex z1, Complex f0, Complex f1) {
    constexpr int kInitial = 16;
    double total = 0.0;
    Complex a = z0, fa = f0;
    for (int k = 1; k <= kInitial; ++k) {
      const Complex b = k == kInitial ? z1 : z0 + (z1 - z0) * (double(k) / kInitial);
      const Complex fb = k == kInitial ? f1 : value(b);
      total += piece(a, b, fa, fb);
      a = b;
      fa = fb;
    }
    return total;
  }

  long evaluations() const { return evaluations_; }

 private:
  double piece(Complex a, Complex b, Complex fa, Complex fb) {
    const double whole = std::arg(fb / fa);
    const Complex m = 0.5 * (a + b);
    const Complex fm = value(m);
    const double left = std::arg(fm / fa), right = std::arg(fb / fm);
    const bool small = std::abs(left) < kMaxPhaseStep && std::abs(right) < kMaxPhaseStep;
    if (small && std::abs(left + right - whole) < 1e-9) return whole;
    if (std::abs(b - a) < floor_) throw SelectionFailure("Delta vanishes on a box edge");
    return piece(a, m, fa, fm) + piece(m, b, fm, fb);
  }

  const SensorKernel& K_;
  QuadratureSettings settings_;
  double floor_;
  long evaluations_ = 0;
};

struct Box {
  Complex lo;
  Complex hi;
  int count;
};

class ZeroSearch {
 public:
  ZeroSearch(const SensorKernel& K, const QuadratureSettings& settings, double scale)
      : K_(K), settings_(settings), tracker_(K, settings, scale) {}

  // Winding number of Delta around the box boundary.
  int count(Complex lo, Complex hi) {
    ++boxes_;
    const std::array<Complex, 4> c = {lo, Complex(hi.real(), lo.imag()), hi,
                                      Complex(lo.real(), hi.imag())};
    std::array<Complex, 4> f;
    for (int k = 0; k < 4; ++k) f[k] = tracker_.value(c[k]);
    double phase = 0.0;
    for (int k = 0; k < 4; ++k) phase += tracker_.edge(c[k], c[(k + 1) % 4], f[k], f[(k + 1) % 4]);
    const double n = phase / (2.0 * kPi);
    const double rounded = std::round(n);
    if (std::abs(n - rounded) > 0.1 || rounded < 0) {
      throw SelectionFailure("argument principle gave a non-integer winding number");
    }
    return static_cast<int>(rounded);
  }

  void refine(const Box& box, std::vector<Complex>& zeros) {
    if (box.count == 0) return;
    if (std::abs(box.hi - box.lo) <= kZeroBoxDiameter) {
      const Complex z = polish(0.5 * (box.lo + box.hi), std::abs(box.hi - box.lo));
      for (int k = 0; k < box.count; ++k) zeros.push_back(z);
      return;
    }
    // Off-centre splits keep split lines away from symmetric zero sets; a
    // different split is tried if a zero sits on a line.
    static constexpr std::array<std::pair<double, double>, 3> kSplits = {
        std::pair{0.5173, 0.4869}, std::pair{0.4711, 0.5291}, std::pair{0.5427, 0.4583}};
    for (const auto& [fx, fy] : kSplits) {
      const double xm = box.lo.real() + fx * (box.hi.real() - box.lo.real());
      const double ym = box.lo.imag() + fy * (box.hi.imag() - box.lo.imag());
      const std::array<std::pair<Complex, Complex>, 4> children = {
          std::pair{box.lo, Complex(xm, ym)},
          std::pair{Complex(xm, box.lo.imag()), Complex(box.hi.real(), ym)},
          std::pair{Complex(box.lo.real(), ym), Complex(xm, box.hi.imag())},
          std::pair{Complex(xm, ym), box.hi}};
      std::vector<Box> sub;
      int total = 0;
      try {
        for (const auto& [lo, hi] : children) {
          const int n = count(lo, hi);
          total += n;
          sub.push_back({lo, hi, n});
        }
      } catch (const SelectionFailure&) {
        continue;
      }
      if (total != box.count) continue;
      for (const auto& b : sub) refine(b, zeros);
      return;
    }
    throw SelectionFailure("could not subdivide a box without cutting through a zero");
  }

  int boxes() const { return boxes_; }

 private:
  Complex polish(Complex z0, double diameter) {
    const QuadratureSettings tight = settings_.tightened(100.0);
    Complex z = z0;
    for (int it = 0; it < 50; ++it) {
      const Complex d = delta_integral(K_, z, tight).value;
      const Complex dd = delta_derivative_integral(K_, z, tight).value;
      if (dd == Complex{}) break;
      const Complex step = d / dd;
      z -= step;
      if (std::abs(z - z0) > diameter) return z0;
      if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(z))) return z;
    }
    return z;
  }

  const SensorKernel& K_;
  QuadratureSettings settings_;
  PhaseTracker tracker_;
  int boxes_ = 0;
};

class HeatPair final : public TransformPair {
 public:
  HeatPair(SensorKernel K, RhoSelection rho, double truncation)
      : K_(K), rho_(std::move(rho)), truncation_(truncation) {}

  std::string name() const override { return "heat-nonlocal"; }
  SpatialDomain domain() const override { return SpatialDomain::UnitInterval; }
  std::vector<Region> regions() const override {
    return {Region::RealLine, Region::BoundaryDRhoPlus, Region::BoundaryDRhoMinus};
  }

  Contour contour(Region region) const override {
    switch (region) {
      case Region::RealLine: return real_line(truncation_);
      case Region::BoundaryDRhoPlus: return boundary_D_rho(+1, rho_.rho, truncation_);
      case Region::BoundaryDRhoMinus: return boundary_D_rho(-1, rho_.rho, truncation_);
      default: throw DomainError("region not used by the nonlocal heat pair");
    }
  }

  QuadratureResult forward(Region region, Complex lambda, const InitialDatum& phi,
                           const QuadratureSettings& settings) const override {
    check_region(region);
    if (phi.domain() != SpatialDomain::UnitInterval) {
      throw DomainError("nonlocal heat transforms act on data on [0, 1]");
    }
    if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
      throw DomainError("lambda must be finite");
    }
    if (region == Region::RealLine) {
      return integrate_interval([&](double y) { return std::exp(-kI * lambda * y) * phi.value(y); },
                                0.0, 1.0, settings,
                                [lambda](double) { return oscillation(lambda); });
    }
    // Scaled forms keep every exponential bounded in the relevant half-plane.
    const bool upper = region == Region::BoundaryDRhoPlus;
    const QuadratureResult d =
        delta_integral(K_, lambda, settings, upper ? HeatScaling::Upper : HeatScaling::Lower);
    const QuadratureResult z = upper ? zeta_plus_integral(K_, phi, lambda, settings, HeatScaling::Upper)
                                     : zeta_minus_integral(K_, phi, lambda, settings, HeatScaling::Lower);
    if (d.value == Complex{}) throw DomainError("lambda is a zero of Delta");
    const Complex factor = upper ? Complex(-1.0) : -kI;
    QuadratureResult out;
    out.value = factor * z.value / d.value;
    out.error_estimate = z.error_estimate / std::abs(d.value) +
                         std::abs(z.value) * d.error_estimate / std::norm(d.value);
    out.evaluations = d.evaluations + z.evaluations;
    out.converged = d.converged && z.converged;
    return out;
  }

  Complex symbol(Region region, Complex lambda) const override {
    check_region(region);
    return lambda * lambda;
  }
  Complex symbol_derivative(Region region, Complex lambda) const override {
    check_region(region);
    return 2.0 * lambda;
  }
  Complex remainder(Region region, Complex lambda, const InitialDatum& phi) const override {
    check_region(region);
    switch (region) {
      case Region::RealLine:
        return heat_r_minus(lambda, phi) * std::exp(-kI * lambda) - heat_r_plus(lambda, phi);
      case Region::BoundaryDRhoPlus: return heat_r_plus(lambda, phi);
      default: return heat_r_minus(lambda, phi) * std::exp(-kI * lambda);
    }
  }

  InitialDatum apply_operator(const InitialDatum& phi) const override {
    return -1.0 * phi.differentiated(2);
  }

  void require_domain(const InitialDatum& phi) const override {
    if (phi.domain() != SpatialDomain::UnitInterval) {
      throw PreconditionError("datum must live on [0, 1]", 0.0);
    }
    const double nonlocal = std::abs(heat_nonlocal_integral(K_, phi));
    if (nonlocal > kDomainTolerance) throw PreconditionError("int K phi = 0", nonlocal);
    const double flux = std::abs(phi.d1(1.0));
    if (flux > kDomainTolerance) throw PreconditionError("phi'(1) = 0", flux);
  }

  std::vector<double> transform_shifts() const override { return {0.0, 1.0}; }

 private:
  static void check_region(Region region) {
    if (region != Region::RealLine && region != Region::BoundaryDRhoPlus &&
        region != Region::BoundaryDRhoMinus) {
      throw DomainError("region not used by the nonlocal heat pair");
    }
  }

  SensorKernel K_;
  RhoSelection rho_;
  double truncation_;
};

}  // namespace

SensorKernel SensorKernel::bump(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("bump width must lie in (0, 1]");
  return SensorKernel(eps, false);
}

SensorKernel SensorKernel::degenerate_uniform() { return SensorKernel(1.0, true); }

double SensorKernel::operator()(double y) const {
  if (y < 0.0 || y > eps_) return 0.0;
  if (degenerate_) return 1.0;
  const double c = std::cos(kPi * y / (2.0 * eps_));
  return c * c;
}

std::string SensorKernel::describe() const {
  if (degenerate_) return "uniform K = 1 (degenerate)";
  std::ostringstream os;
  os << "bump cos^2(pi y / " << 2.0 * eps_ << ") on [0, " << eps_ << "]";
  return os.str();
}

QuadratureResult delta_integral(const SensorKernel& K, Complex lambda,
                                const QuadratureSettings& settings, HeatScaling scaling) {
  const auto kernel = [lambda, scaling](double y) -> Complex {
    switch (scaling) {
      case HeatScaling::Upper:
        return 0.5 * (std::exp(kI * lambda * (2.0 - y)) + std::exp(kI * lambda * y));
      case HeatScaling::Lower:
        return 0.5 * (std::exp(-kI * lambda * y) + std::exp(-kI * lambda * (2.0 - y)));
      default: return std::cos((1.0 - y) * lambda);
    }
  };
  return integrate_interval([&](double y) { return K(y) * kernel(y); }, 0.0, K.support_width(),
                            single_panel(settings),
                            [lambda](double) { return oscillation(lambda); });
}

QuadratureResult delta_derivative_integral(const SensorKernel& K, Complex lambda,
                                           const QuadratureSettings& settings) {
  return integrate_interval(
      [&](double y) { return -K(y) * (1.0 - y) * std::sin((1.0 - y) * lambda); }, 0.0,
      K.support_width(), single_panel(settings), [lambda](double) { return oscillation(lambda); });
}

// Scaled forms. Their kernels are sums of separable exponentials, so for
// y <= eps each inner integral over [y, 1] splits into an adaptive piece over
// [y, eps] and a y-independent piece over [eps, 1] (or [0, 1]) computed once.
// All factors are written so that no exponential exceeds its bounded product.

QuadratureResult zeta_plus_integral(const SensorKernel& K, const InitialDatum& phi, Complex lambda,
                                    const QuadratureSettings& settings, HeatScaling scaling) {
  if (scaling == HeatScaling::Lower) {
    throw std::invalid_argument("zeta^+ has no lower-half-plane scaling");
  }
  const QuadratureSettings inner = settings.tightened(kInnerTightening);
  if (scaling == HeatScaling::None) {
    return outer_integral(K, lambda, settings, [&](double y, QuadratureResult& acc) {
      const Complex below = inner_integral(phi, 0.0, y, lambda, inner, acc, [&](double z) {
        return std::cos((1.0 - y) * lambda) * std::exp(-kI * lambda * z);
      });
      const Complex above = inner_integral(phi, y, 1.0, lambda, inner, acc, [&](double z) {
        return std::exp(-kI * lambda * y) * std::cos((1.0 - z) * lambda);
      });
      return below + above;
    });
  }
  // 2 e^{i l} zeta^+ = int K [ e^{i l (1-y)} G + int_0^y e^{i l (y-z)} phi
  //                           + int_y^eps e^{i l (z-y)} phi + e^{i l (eps-y)} H ],
  // G = int_0^1 e^{i l (1-z)} phi, H = int_eps^1 e^{i l (z-eps)} phi.
  const double eps = K.support_width();
  QuadratureResult shared;
  const Complex G = inner_integral(phi, 0.0, 1.0, lambda, inner, shared,
                                   [&](double z) { return std::exp(kI * lambda * (1.0 - z)); });
  const Complex H = inner_integral(phi, eps, 1.0, lambda, inner, shared,
                                   [&](double z) { return std::exp(kI * lambda * (z - eps)); });
  QuadratureResult out = outer_integral(K, lambda, settings, [&](double y, QuadratureResult& acc) {
    const Complex below = inner_integral(phi, 0.0, y, lambda, inner, acc,
                                         [&](double z) { return std::exp(kI * lambda * (y - z)); });
    const Complex above = inner_integral(phi, y, eps, lambda, inner, acc,
                                         [&](double z) { return std::exp(kI * lambda * (z - y)); });
    return std::exp(kI * lambda * (1.0 - y)) * G + below + above + std::exp(kI * lambda * (eps - y)) * H;
  });
  out *= 0.5;
  // Both shared factors have modulus at most 1 on the support.
  out.error_estimate += eps * shared.error_estimate;
  absorb(out, shared);
  return out;
}

QuadratureResult zeta_minus_integral(const SensorKernel& K, const InitialDatum& phi,
                                     Complex lambda, const QuadratureSettings& settings,
                                     HeatScaling scaling) {
  if (scaling == HeatScaling::Upper) {
    throw std::invalid_argument("zeta^- has no upper-half-plane scaling");
  }
  const QuadratureSettings inner = settings.tightened(kInnerTightening);
  if (scaling == HeatScaling::None) {
    return outer_integral(K, lambda, settings, [&](double y, QuadratureResult& acc) {
      return inner_integral(phi, y, 1.0, lambda, inner, acc,
                            [&](double z) { return std::sin((z - y) * lambda); });
    });
  }
  // 2i e^{-2 i l} zeta^- = int K [ int_y^eps (e^{i l (z-y-2)} - e^{-i l (z-y+2)}) phi
  //                              + e^{-i l (y+1)} P - e^{i l (y-2)} Q ],
  // P = int_eps^1 e^{i l (z-1)} phi, Q = int_eps^1 e^{-i l z} phi.
  const double eps = K.support_width();
  QuadratureResult shared;
  const Complex P = inner_integral(phi, eps, 1.0, lambda, inner, shared,
                                   [&](double z) { return std::exp(kI * lambda * (z - 1.0)); });
  const Complex Q = inner_integral(phi, eps, 1.0, lambda, inner, shared,
                                   [&](double z) { return std::exp(-kI * lambda * z); });
  QuadratureResult out = outer_integral(K, lambda, settings, [&](double y, QuadratureResult& acc) {
    const Complex near = inner_integral(phi, y, eps, lambda, inner, acc, [&](double z) {
      return std::exp(kI * lambda * (z - y - 2.0)) - std::exp(-kI * lambda * (z - y + 2.0));
    });
    return near + std::exp(-kI * lambda * (y + 1.0)) * P - std::exp(kI * lambda * (y - 2.0)) * Q;
  });
  out *= 1.0 / (2.0 * kI);
  // Both shared factors are bounded by e^{-|Im l|} on the support.
  out.error_estimate += std::exp(-std::abs(lambda.imag())) * eps * shared.error_estimate;
  absorb(out, shared);
  return out;
}

Complex delta(const SensorKernel& K, Complex lambda, const QuadratureSettings& settings) {
  return value_or_throw(delta_integral(K, lambda, settings), "Delta", lambda);
}

Complex zeta_plus(const SensorKernel& K, const InitialDatum& phi, Complex lambda,
                  const QuadratureSettings& settings) {
  return value_or_throw(zeta_plus_integral(K, phi, lambda, settings), "zeta^+", lambda);
}

Complex zeta_minus(const SensorKernel& K, const InitialDatum& phi, Complex lambda,
                   const QuadratureSettings& settings) {
  return value_or_throw(zeta_minus_integral(K, phi, lambda, settings), "zeta^-", lambda);
}

int delta_zero_count(const SensorKernel& K, Complex lo, Complex hi,
                     const QuadratureSettings& settings) {
  if (!(hi.real() > lo.real() && hi.imag() > lo.imag())) {
    throw std::invalid_argument("box corners must satisfy lo < hi componentwise");
  }
  ZeroSearch search(K, settings, std::abs(hi - lo));
  return search.count(lo, hi);
}

ZeroCertificate locate_delta_zeros(const SensorKernel& K, double search_bound, int resolution,
                                   const QuadratureSettings& settings) {
  if (!(search_bound >= 10.0)) throw std::invalid_argument("search bound must be at least 10");
  if (resolution < 1) throw std::invalid_argument("resolution must be positive");
  ZeroSearch search(K, settings, 2.0 * search_bound);
  ZeroCertificate cert;
  cert.search_bound = search_bound;
  cert.resolution = resolution;

  // Interior grid lines are nudged off the symmetric positions (which include
  // the real axis, where zeros typically lie).
  const double cell = 2.0 * search_bound / resolution;
  auto line = [&](int k) {
    if (k == 0) return -search_bound;
    if (k == resolution) return search_bound;
    return -search_bound + cell * (k + 0.0137);
  };
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      const Complex lo(line(i), line(j)), hi(line(i + 1), line(j + 1));
      const int n = search.count(lo, hi);
      cert.zero_count += n;
      search.refine({lo, hi, n}, cert.zeros);
    }
  }
  cert.boxes_searched = search.boxes();
  for (Complex z : cert.zeros) cert.max_abs_imag = std::max(cert.max_abs_imag, std::abs(z.imag()));
  std::sort(cert.zeros.begin(), cert.zeros.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return cert;
}

bool rho_admissible(double rho, const ZeroCertificate& certificate) {
  if (!(rho > 0.0)) return false;
  for (Complex z : certificate.zeros) {
    if (std::abs(z.imag()) >= rho / std::numbers::sqrt2) return false;
    if (distance_to_boundary(z, rho, +1) < kContourClearance) return false;
    if (distance_to_boundary(z, rho, -1) < kContourClearance) return false;
  }
  return true;
}

RhoSelection certify_rho(double rho, const ZeroCertificate& certificate) {
  if (!rho_admissible(rho, certificate)) {
    std::ostringstream os;
    os << "rho = " << rho << " is not admissible: a zero of Delta lies in D_rho or within "
       << kContourClearance << " of its boundary";
    throw SelectionFailure(os.str());
  }
  return {rho, certificate};
}

RhoSelection select_rho(const SensorKernel& K, double search_bound,
                        const QuadratureSettings& settings) {
  const ZeroCertificate cert = locate_delta_zeros(K, search_bound, 8, settings);
  for (double rho : kRhoLadder) {
    if (rho_admissible(rho, cert)) return {rho, cert};
  }
  throw SelectionFailure("no value of the rho ladder clears the zeros of Delta");
}

Complex heat_r_plus(Complex lambda, const InitialDatum& phi) {
  return -phi.d1(0.0) - kI * lambda * phi.value(0.0);
}

Complex heat_r_minus(Complex lambda, const InitialDatum& phi) {
  return -kI * lambda * phi.value(1.0);
}

std::shared_ptr<const TransformPair> heat_pair(const SensorKernel& K, const RhoSelection& rho,
                                               double truncation) {
  require_truncation(truncation);
  if (!(truncation > rho.rho)) throw InvalidGeometry("truncation must exceed rho");
  if (K.degenerate()) throw SelectionFailure("the uniform kernel is not supported");
  if (!rho_admissible(rho.rho, rho.certificate)) {
    throw SelectionFailure("rho is not certified against the zeros of Delta");
  }
  return std::make_shared<HeatPair>(K, rho, truncation);
}

double heat_nonlocal_integral(const SensorKernel& K, const InitialDatum& phi) {
  if (phi.domain() != SpatialDomain::UnitInterval) {
    throw DomainError("the nonlocal condition applies to data on [0, 1]");
  }
  const QuadratureResult r = integrate_interval(
      [&](double y) { return Complex(K(y) * phi.value(y), 0.0); }, 0.0, K.support_width(),
      QuadratureSettings{}.tightened(100.0));
  return value_or_throw(r, "int K phi", 0.0).real();
}

bool heat_domain_check(const SensorKernel& K, const InitialDatum& phi) {
  if (phi.domain() != SpatialDomain::UnitInterval) return false;
  return std::abs(heat_nonlocal_integral(K, phi)) <= kDomainTolerance &&
         std::abs(phi.d1(1.0)) <= kDomainTolerance;
}

InitialDatum heat_cosine_datum(const SensorKernel& K) {
  const double c1 = heat_nonlocal_integral(K, InitialDatum::cosine(1.0, 1));
  const double c2 = heat_nonlocal_integral(K, InitialDatum::cosine(1.0, 2));
  double a = c2, b = -c1;
  const double norm = std::hypot(a, b);
  if (norm == 0.0) return InitialDatum::cosine(1.0, 1);
  a /= norm;
  b /= norm;
  if (a < 0.0) {
    a = -a;
    b = -b;
  }
  return InitialDatum::cosine(a, 1) + InitialDatum::cosine(b, 2);
}

}  // namespace fokas
