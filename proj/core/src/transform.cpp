#include "fokas/transform.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <sstream>
#include <unordered_map>

namespace fokas {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

// Forward transforms feeding an outer contour integral run ten times tighter
// so their error stays below the outer tolerance.
constexpr double kNestedTightening = 10.0;

struct ComplexHash {
  std::size_t operator()(const Complex& z) const {
    std::uint64_t a, b;
    const double re = z.real(), im = z.imag();
    std::memcpy(&a, &re, sizeof a);
    std::memcpy(&b, &im, sizeof b);
    return std::hash<std::uint64_t>()(a * 0x9E3779B97F4A7C15ULL ^ b);
  }
};

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("time must be finite and non-negative");
}

void require_point(const TransformPair& pair, double x) {
  if (!std::isfinite(x)) throw DomainError("x must be finite");
  if (pair.domain() == SpatialDomain::HalfLine ? x < 0.0 : (x < 0.0 || x > 1.0)) {
    throw DomainError("x lies outside the spatial domain");
  }
}

double shift_spread(const TransformPair& pair, const std::vector<double>& xs) {
  double r = 0.0;
  for (double x : xs) {
    for (double s : pair.transform_shifts()) r = std::max(r, std::abs(x - s));
  }
  return r;
}

// Phase rate of e^{i lambda x} e^{-omega t} F(lambda) along a contour, over
// the times in `ts`. Where |e^{-omega t}| < e^{-40} the evolution factor is
// negligible and contributes no oscillation.
PhaseRate solution_rate(const TransformPair& pair, Region region, double spread,
                        std::vector<double> ts) {
  return [&pair, region, spread, ts = std::move(ts)](Complex lambda) {
    double chirp = 0.0;
    double speed = -1.0;
    for (double t : ts) {
      if (t <= 0.0) continue;
      if ((pair.symbol(region, lambda) * t).real() > 40.0) continue;
      if (speed < 0.0) speed = std::abs(pair.symbol_derivative(region, lambda));
      chirp = std::max(chirp, t * speed);
    }
    return spread + chirp;
  };
}

Complex forward_value(const TransformPair& pair, Region region, Complex lambda,
                      const InitialDatum& phi, const QuadratureSettings& settings) {
  const QuadratureResult r = pair.forward(region, lambda, phi, settings);
  if (!r.converged) {
    std::ostringstream msg;
    msg << "forward transform on " << to_string(region) << " did not converge at lambda = "
        << lambda;
    throw Unconverged(msg.str(), r.error_estimate);
  }
  return r.value;
}

Complex evolution(const TransformPair& pair, Region region, Complex lambda, double t) {
  if (t == 0.0) return 1.0;
  return std::exp(-pair.symbol(region, lambda) * t);
}

std::vector<double> pick(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.size() <= 3) return v;
  return {v.front(), v[v.size() / 2], v.back()};
}

}  // namespace

QuadratureResult halfline_exponential_transform(const std::vector<ExponentialKernelTerm>& kernel,
                                                const InitialDatum& phi,
                                                const QuadratureSettings& settings) {
  if (phi.domain() != SpatialDomain::HalfLine) {
    throw DomainError("half-line transform of interval data");
  }
  if (phi.is_zero() || kernel.empty()) return {};
  const double datum_rate = *phi.decay_rate();
  const double sector = phi.decay_sector();
  // Decay rate of the slowest kernel term along y = r e^{i psi} (negative
  // when a term grows).
  auto kernel_decay = [&](double psi) {
    const Complex turn = std::polar(1.0, psi);
    double worst = std::numeric_limits<double>::infinity();
    for (const auto& k : kernel) worst = std::min(worst, (k.exponent * turn).real());
    return worst;
  };
  auto net_decay = [&](double psi) {
    return datum_rate * std::cos(psi * (kPi / 2.0) / sector) + kernel_decay(psi);
  };
  auto oscillation = [&](double psi) {
    const Complex turn = std::polar(1.0, psi);
    double w = 0.0;
    for (const auto& k : kernel) w = std::max(w, std::abs((k.exponent * turn).imag()));
    return w;
  };

  double psi = 0.0;
  if (oscillation(0.0) > 1.0 || !(net_decay(0.0) > 0.0)) {
    // Keep a margin from the edge of the sector, where the datum stops decaying.
    constexpr int kCandidates = 16;
    const double limit = 0.8 * sector;
    double best = net_decay(0.0) - oscillation(0.0);
    for (int j = -kCandidates; j <= kCandidates; ++j) {
      const double candidate = limit * j / kCandidates;
      const double score = net_decay(candidate) - oscillation(candidate);
      if (net_decay(candidate) > 0.0 && score > best) {
        best = score;
        psi = candidate;
      }
    }
  }
  const double decay = net_decay(psi);
  if (!(decay > 0.0)) {
    throw DomainError("forward kernel grows faster than the datum decays");
  }
  // A fast-decaying kernel is rescaled to unit rate so the integrand's
  // support near the origin is resolved by the initial panels.
  const double h = 1.0 / std::max(1.0, kernel_decay(psi));
  const Complex step = h * std::polar(1.0, psi);
  const double w = oscillation(psi) * h;
  return integrate_real_halfline(
      [&](double v) {
        const Complex y = v * step;
        Complex k{};
        for (const auto& term : kernel) k += term.coefficient * std::exp(-term.exponent * y);
        return step * k * (psi == 0.0 ? Complex(phi.value(y.real())) : phi.value(y));
      },
      decay * h, settings, [w](double) { return w; });
}

TailMode TransformPair::tail_mode(Region region) const {
  return region == Region::RealLine ? TailMode::Extrapolate : TailMode::Truncate;
}

Complex forward(const TransformPair& pair, const InitialDatum& phi, Region region,
                Complex lambda, const QuadratureSettings& settings) {
  if (phi.domain() != pair.domain()) throw DomainError("datum lives on a different domain");
  return forward_value(pair, region, lambda, phi, settings);
}

QuadratureResult inverse(const TransformPair& pair, const SpectralFunction& f, double x,
                         const QuadratureSettings& settings) {
  require_point(pair, x);
  QuadratureResult total;
  for (Region region : pair.regions()) {
    const Contour c = pair.contour(region);
    OscillationHint hint{solution_rate(pair, region, shift_spread(pair, {x}), {}),
                         pair.tail_mode(region)};
    const auto r = integrate_contour(
        [&](Complex lambda) { return std::exp(kI * lambda * x) * f(region, lambda) / (2.0 * kPi); },
        c, settings, hint);
    total += r;
  }
  return total;
}

SolveHints default_hints(const TransformPair& pair) {
  if (pair.domain() == SpatialDomain::HalfLine) return {{0.5, 1.0, 2.0}, {0.0}};
  return {{0.25, 0.5, 0.75}, {0.0}};
}

SpectralCoefficient::SpectralCoefficient(std::shared_ptr<const TransformPair> pair,
                                         InitialDatum datum, QuadratureSettings settings,
                                         std::vector<RegionTable> regions, double build_error)
    : pair_(std::move(pair)),
      datum_(std::move(datum)),
      settings_(settings),
      regions_(std::move(regions)),
      build_error_(build_error) {}

std::size_t SpectralCoefficient::node_count() const {
  std::size_t n = 0;
  for (const auto& r : regions_) {
    for (const auto& s : r.segments) n += s.nodes.size();
  }
  return n;
}

QuadratureResult SpectralCoefficient::evaluate(double x, double t) const {
  require_point(*pair_, x);
  require_time(t);
  QuadratureResult out;
  out.error_estimate = build_error_;
  Complex sum{};
  const QuadratureSettings inner = settings_.tightened(kNestedTightening);
  for (const auto& region : regions_) {
    for (const auto& seg : region.segments) {
      Complex part{};
      for (std::size_t k = 0; k < seg.nodes.size(); ++k) {
        const Complex lambda = seg.nodes[k].z;
        part += seg.nodes[k].weight * std::exp(kI * lambda * x) *
                evolution(*pair_, region.region, lambda, t) * seg.values[k];
      }
      part /= 2.0 * kPi;
      sum += part;
      if (seg.extrapolated_tail) {
        const Region reg = region.region;
        auto f = [&](Complex lambda) {
          return std::exp(kI * lambda * x) * evolution(*pair_, reg, lambda, t) *
                 forward_value(*pair_, reg, lambda, datum_, inner) / (2.0 * kPi);
        };
        const QuadratureResult tail =
            integrate_ray_tail(f, seg.segment, seg.reach, settings_,
                               solution_rate(*pair_, reg, shift_spread(*pair_, {x}), {t}),
                               std::abs(part));
        sum += tail.value;
        out.error_estimate += tail.error_estimate;
        out.evaluations += tail.evaluations;
        out.converged = out.converged && tail.converged;
      }
    }
  }
  out.value = sum;
  out.evaluations += static_cast<long>(node_count());
  return out;
}

SpectralCoefficient build_spectral_coefficient(std::shared_ptr<const TransformPair> pair,
                                               const InitialDatum& q0,
                                               const QuadratureSettings& settings,
                                               const SolveHints& hints_in) {
  if (!pair) throw std::invalid_argument("transform pair is null");
  settings.validate();
  if (q0.domain() != pair->domain()) throw DomainError("datum lives on a different domain");
  SolveHints hints = hints_in.xs.empty() ? default_hints(*pair) : hints_in;
  if (hints.ts.empty()) hints.ts = {0.0};
  for (double x : hints.xs) require_point(*pair, x);
  for (double t : hints.ts) require_time(t);

  const std::vector<double> xs = pick(hints.xs);
  const std::vector<double> ts = pick(hints.ts);
  const double spread = shift_spread(*pair, hints.xs);
  const int probes = static_cast<int>(xs.size() * ts.size());
  const QuadratureSettings inner = settings.tightened(kNestedTightening);

  std::vector<SpectralCoefficient::RegionTable> tables;
  std::vector<double> probe_error(static_cast<std::size_t>(probes), 0.0);
  bool converged = true;
  for (Region region : pair->regions()) {
    SpectralCoefficient::RegionTable table{region, {}};
    const Contour contour = pair->contour(region);
    for (const auto& seg : contour.segments()) {
      std::unordered_map<Complex, Complex, ComplexHash> cache;
      auto transform_at = [&](Complex lambda) {
        auto it = cache.find(lambda);
        if (it != cache.end()) return it->second;
        const Complex v = forward_value(*pair, region, lambda, q0, inner);
        cache.emplace(lambda, v);
        return v;
      };
      MultiIntegrand probe = [&](Complex lambda, Complex* out) {
        const Complex F = transform_at(lambda);
        int j = 0;
        for (double t : ts) {
          const Complex e = evolution(*pair, region, lambda, t) * F / (2.0 * kPi);
          for (double x : xs) out[j++] = std::exp(kI * lambda * x) * e;
        }
      };
      OscillationHint hint{solution_rate(*pair, region, spread, hints.ts), pair->tail_mode(region)};
      SpectralCoefficient::Segment s{seg, partition_segment(probe, probes, seg, settings, hint),
                                     {}, {}, false, 0.0};
      for (int j = 0; j < probes; ++j) {
        const auto& r = s.partition.results[static_cast<std::size_t>(j)];
        probe_error[static_cast<std::size_t>(j)] += r.error_estimate;
        converged = converged && r.converged;
      }
      s.nodes = partition_nodes(seg, s.partition);
      s.values.reserve(s.nodes.size());
      for (const auto& n : s.nodes) s.values.push_back(transform_at(n.z));
      if (seg.kind() == SegmentKind::InfiniteRay) {
        s.reach = s.partition.extension.empty() ? seg.length() : s.partition.extension.back().u1;
        s.extrapolated_tail = hint.tail == TailMode::Extrapolate;
      }
      table.segments.push_back(std::move(s));
    }
    tables.push_back(std::move(table));
  }
  const double build_error = *std::max_element(probe_error.begin(), probe_error.end());
  if (!converged) {
    throw Unconverged("spectral coefficient quadrature did not converge", build_error);
  }
  return SpectralCoefficient(std::move(pair), q0, settings, std::move(tables), build_error);
}

Complex solve(std::shared_ptr<const TransformPair> pair, const InitialDatum& q0, double x,
              double t, const QuadratureSettings& settings) {
  if (!pair) throw std::invalid_argument("transform pair is null");
  require_point(*pair, x);
  require_time(t);
  const auto coefficient = build_spectral_coefficient(pair, q0, settings, {{x}, {t}});
  const QuadratureResult r = coefficient.evaluate(x, t);
  if (!r.converged) throw Unconverged("solution quadrature did not converge", r.error_estimate);
  return r.value;
}

QuadratureResult solve_direct(const TransformPair& pair, const InitialDatum& q0, double x,
                              double t, const QuadratureSettings& settings) {
  require_point(pair, x);
  require_time(t);
  if (q0.domain() != pair.domain()) throw DomainError("datum lives on a different domain");
  const QuadratureSettings inner = settings.tightened(kNestedTightening);
  QuadratureResult total;
  for (Region region : pair.regions()) {
    OscillationHint hint{solution_rate(pair, region, shift_spread(pair, {x}), {t}),
                         pair.tail_mode(region)};
    const auto r = integrate_contour(
        [&](Complex lambda) {
          return std::exp(kI * lambda * x) * evolution(pair, region, lambda, t) *
                 forward_value(pair, region, lambda, q0, inner) / (2.0 * kPi);
        },
        pair.contour(region), settings, hint);
    total += r;
  }
  return total;
}

void VerificationReport::add(std::string label, Complex point, double magnitude) {
  samples.push_back({std::move(label), point, magnitude});
}

void VerificationReport::finish() {
  max_magnitude = 0.0;
  for (const auto& s : samples) max_magnitude = std::max(max_magnitude, s.magnitude);
  pass = max_magnitude <= tolerance;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_point(const char* prefix, double v) {
  std::ostringstream s;
  s << prefix << v;
  return s.str();
}

std::string fmt_lambda(Region region, Complex lambda) {
  std::ostringstream s;
  s << to_string(region) << " lambda=" << lambda;
  return s.str();
}

}  // namespace

VerificationReport verify_inversion(std::shared_ptr<const TransformPair> pair,
                                    const InitialDatum& phi, const std::vector<double>& xs,
                                    double tol, const QuadratureSettings& settings) {
  const auto start = Clock::now();
  VerificationReport report;
  report.check = "inversion";
  report.tolerance = tol;
  if (xs.empty()) throw std::invalid_argument("no sample points");
  const auto coefficient = build_spectral_coefficient(pair, phi, settings, {xs, {0.0}});
  for (double x : xs) {
    const QuadratureResult r = coefficient.evaluate(x, 0.0);
    if (!r.converged) throw Unconverged("inverse transform did not converge", r.error_estimate);
    report.add(fmt_point("x=", x), x, std::abs(r.value - phi.value(x)));
    report.max_error_estimate = std::max(report.max_error_estimate, r.error_estimate);
    report.evaluations += r.evaluations;
  }
  report.finish();
  report.seconds = seconds_since(start);
  return report;
}

RegionSamples default_lambda_samples(const TransformPair& pair, int per_region) {
  RegionSamples out;
  for (Region region : pair.regions()) {
    const Contour c = pair.contour(region);
    std::vector<std::vector<Complex>> per_segment;
    for (const auto& seg : c.segments()) {
      std::vector<Complex> pts;
      const ContourSegment canon = seg.canonical();
      switch (seg.kind()) {
        case SegmentKind::InfiniteRay:
          for (double s : {0.5, 1.5, 3.0, 4.5, 6.0, 8.0, 2.25, 5.25}) {
            if (s < seg.length()) pts.push_back(canon.anchor() + canon.direction() * s);
          }
          break;
        case SegmentKind::FiniteSegment:
        case SegmentKind::CircularArc:
          for (double u : {0.5, 0.2, 0.8, 0.35, 0.65}) pts.push_back(canon.at(u).z);
          break;
        case SegmentKind::FullCircle:
          for (int k = 0; k < 12; ++k) pts.push_back(canon.at((k + 0.5) / 12.0).z);
          break;
      }
      per_segment.push_back(std::move(pts));
    }
    auto& dst = out[region];
    for (std::size_t i = 0; static_cast<int>(dst.size()) < per_region; ++i) {
      bool any = false;
      for (const auto& pts : per_segment) {
        if (i < pts.size() && static_cast<int>(dst.size()) < per_region) {
          dst.push_back(pts[i]);
          any = true;
        }
      }
      if (!any) break;
    }
  }
  return out;
}

VerificationReport verify_diagonalization(const TransformPair& pair, const InitialDatum& phi,
                                          const RegionSamples& samples, double tol,
                                          const QuadratureSettings& settings) {
  const auto start = Clock::now();
  pair.require_domain(phi);
  VerificationReport report;
  report.check = "diagonalization";
  report.tolerance = tol;
  auto transform = [&](Region region, Complex lambda, const InitialDatum& d) {
    const QuadratureResult r = pair.forward(region, lambda, d, settings);
    if (!r.converged) throw Unconverged("forward transform did not converge", r.error_estimate);
    report.max_error_estimate = std::max(report.max_error_estimate, r.error_estimate);
    report.evaluations += r.evaluations;
    return r.value;
  };
  if (const CompositeSymbols* comp = pair.composite()) {
    const InitialDatum Lphi = comp->apply_L(phi);
    const InitialDatum Mphi = comp->apply_M(phi);
    for (const auto& [region, lambdas] : samples) {
      for (Complex lambda : lambdas) {
        const Complex F = transform(region, lambda, phi);
        const Complex resL = transform(region, lambda, Lphi) - comp->omega_L(region, lambda) * F -
                             comp->remainder_L(region, lambda, phi);
        const Complex resM = transform(region, lambda, Mphi) - comp->omega_M(region, lambda) * F -
                             comp->remainder_M(region, lambda, phi);
        report.add("L " + fmt_lambda(region, lambda), lambda, std::abs(resL));
        report.add("M " + fmt_lambda(region, lambda), lambda, std::abs(resM));
      }
    }
  } else {
    const InitialDatum Lphi = pair.apply_operator(phi);
    for (const auto& [region, lambdas] : samples) {
      for (Complex lambda : lambdas) {
        const Complex res = transform(region, lambda, Lphi) -
                            pair.symbol(region, lambda) * transform(region, lambda, phi) -
                            pair.remainder(region, lambda, phi);
        report.add(fmt_lambda(region, lambda), lambda, std::abs(res));
      }
    }
  }
  report.finish();
  report.seconds = seconds_since(start);
  return report;
}

namespace {

Complex rotate_toward_upper(Complex direction, double angle) {
  return direction * std::polar(1.0, direction.real() >= 0.0 ? angle : -angle);
}

}  // namespace

VerificationReport verify_remainder_vanishing(const TransformPair& pair,
                                              const ManufacturedSolution& q,
                                              const std::vector<double>& xs, double t,
                                              double tol, const QuadratureSettings& settings) {
  const auto start = Clock::now();
  settings.validate();
  require_time(t);
  if (xs.empty()) throw std::invalid_argument("no sample points");
  for (double x : xs) require_point(pair, x);
  pair.require_domain(q.profile());
  if (q.profile().domain() != pair.domain()) throw DomainError("datum lives on a different domain");

  VerificationReport report;
  report.check = "remainder";
  report.tolerance = tol;
  const CompositeSymbols* comp = pair.composite();
  const int m = static_cast<int>(xs.size());
  const QuadratureSettings inner_base = settings.tightened(kNestedTightening);

  // G(lambda) = int_0^t e^{omega (s - t)} R[q(., s)](lambda) ds; for composite
  // pairs R is (R_L[q] + R_M[q_t]) / omega_M. Remainders are linear in their
  // argument and q(., s) = T(s) phi, so R[q(., s)] = T(s) R[phi].
  auto G = [&](Region region, Complex lambda, double envelope) -> Complex {
    Complex omega, a, b;
    if (comp) {
      const Complex wm = comp->omega_M(region, lambda);
      omega = comp->omega_L(region, lambda) / wm;
      a = comp->remainder_L(region, lambda, q.profile()) / wm;
      b = comp->remainder_M(region, lambda, q.profile()) / wm;
    } else {
      omega = pair.symbol(region, lambda);
      a = pair.remainder(region, lambda, q.profile());
      b = 0.0;
    }
    if (a == 0.0 && b == 0.0) return 0.0;
    QuadratureSettings inner = inner_base;
    inner.abs_tol = std::max(inner_base.abs_tol / std::max(envelope, 1e-300), 1e-300);
    auto integrand = [&](Complex s) {
      return std::exp(omega * (s - t)) * (q.time_factor(s) * a + q.time_factor_derivative(s) * b);
    };
    auto fail = [&](const QuadratureResult& r) {
      std::ostringstream msg;
      msg << "inner temporal integral did not converge at lambda = " << lambda;
      throw Unconverged(msg.str(), r.error_estimate);
    };
    const double kappa = std::abs(q.kappa());
    if (std::abs(omega.imag()) * t > 4.0 * kPi && std::abs(omega) > 4.0 * kappa) {
      // The integrand is entire in s and oscillates fast on [0, t]: integrate
      // instead along the steepest-descent rays s0 + d r (r >= 0) from both
      // end points, on which e^{omega s} decays like e^{-|omega| r}. By
      // Cauchy's theorem the difference of the two ray integrals is the
      // integral over [0, t].
      // The ray variable is scaled by 1/|omega| so the boundary layer at
      // r = 0 has unit width.
      const double scale = 1.0 / std::abs(omega);
      const Complex d = -std::conj(omega) * scale * scale;
      const double decay = 1.0 - kappa * scale;
      QuadratureSettings ray = inner.tightened(2.0);
      auto from = [&](double s0) {
        const QuadratureResult r = integrate_real_halfline(
            [&](double v) { return d * integrand(s0 + d * v); }, decay, ray);
        if (!r.converged) fail(r);
        return r.value;
      };
      return from(0.0) - from(t);
    }
    const double phase = std::abs(omega) * t;
    inner.max_subdivisions =
        std::max(inner.max_subdivisions, 2 * static_cast<int>(phase / kPi) + 64);
    const QuadratureResult r = integrate_interval(
        [&](double s) { return integrand(s); }, 0.0, t, inner,
        [omega](double) { return std::abs(omega.imag()); });
    if (!r.converged) fail(r);
    return r.value;
  };

  auto envelope_at = [&](Complex lambda) {
    double e = 0.0;
    for (double x : xs) e = std::max(e, std::abs(std::exp(kI * lambda * x)));
    return e / (2.0 * kPi);
  };

  std::vector<Complex> total(static_cast<std::size_t>(m));
  std::vector<double> magnitude(static_cast<std::size_t>(m), 0.0);
  double error = 0.0;
  long evaluations = 0;
  std::string where;
  auto accumulate = [&](const std::vector<QuadratureResult>& rs) {
    for (int j = 0; j < m; ++j) {
      const auto& r = rs[static_cast<std::size_t>(j)];
      total[static_cast<std::size_t>(j)] += r.value;
      magnitude[static_cast<std::size_t>(j)] += std::abs(r.value);
      error = std::max(error, r.error_estimate);
      evaluations += r.evaluations;
      if (!r.converged) {
        throw Unconverged("remainder contour integral did not converge on " + where,
                          r.error_estimate);
      }
    }
  };

  for (Region region : pair.regions()) {
    const Contour contour = pair.contour(region);
    const TailMode mode = pair.tail_mode(region);
    MultiIntegrand integrand = [&](Complex lambda, Complex* out) {
      const double env = envelope_at(lambda);
      const Complex g = G(region, lambda, env) / (2.0 * kPi);
      for (int j = 0; j < m; ++j) out[j] = std::exp(kI * lambda * xs[static_cast<std::size_t>(j)]) * g;
    };
    const PhaseRate rate = solution_rate(pair, region, shift_spread(pair, xs), {t});
    for (const auto& seg : contour.segments()) {
      const bool ray = seg.kind() == SegmentKind::InfiniteRay;
      {
        std::ostringstream w;
        w << to_string(region) << " segment ending at " << seg.end();
        where = w.str();
      }
      const double rotation = pair.remainder_tail_rotation();
      if (ray && mode == TailMode::Extrapolate && rotation > 0.0) {
        // Finite part on the literal contour, then the tail along a ray turned
        // into the decay sector of the remainder integrand.
        OscillationHint finite_hint{rate, TailMode::Extrapolate};
        accumulate(partition_segment(integrand, m, seg, settings, finite_hint).results);
        const ContourSegment canon = seg.canonical();
        const Complex far = canon.anchor() + canon.direction() * canon.length();
        const ContourSegment tail = ContourSegment::ray(
            far, rotate_toward_upper(canon.direction(), rotation), canon.length(), seg.orientation());
        where += " (turned tail)";
        accumulate(partition_segment(integrand, m, tail, settings,
                                     OscillationHint{rate, TailMode::Truncate})
                       .results);
      } else if (ray && mode == TailMode::Extrapolate) {
        const auto part =
            partition_segment(integrand, m, seg, settings, OscillationHint{rate, mode});
        accumulate(part.results);
        for (int j = 0; j < m; ++j) {
          const double x = xs[static_cast<std::size_t>(j)];
          auto f = [&](Complex lambda) {
            return std::exp(kI * lambda * x) * G(region, lambda, envelope_at(lambda)) / (2.0 * kPi);
          };
          const QuadratureResult tail = integrate_ray_tail(
              f, seg, seg.length(), settings, solution_rate(pair, region, shift_spread(pair, {x}), {t}),
              std::abs(part.results[static_cast<std::size_t>(j)].value));
          std::vector<QuadratureResult> one(static_cast<std::size_t>(m));
          for (auto& r : one) r.converged = true;
          one[static_cast<std::size_t>(j)] = tail;
          accumulate(one);
        }
      } else {
        accumulate(partition_segment(integrand, m, seg, settings, OscillationHint{rate, mode}).results);
      }
    }
  }
  for (int j = 0; j < m; ++j) {
    report.add(fmt_point("x=", xs[static_cast<std::size_t>(j)]), xs[static_cast<std::size_t>(j)],
               std::abs(total[static_cast<std::size_t>(j)]));
  }
  report.max_error_estimate = error;
  report.evaluations = evaluations;
  report.finish();
  report.seconds = seconds_since(start);
  return report;
}

}  // namespace fokas
