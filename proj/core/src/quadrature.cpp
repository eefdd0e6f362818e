#include "fokas/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>

namespace fokas {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
// A panel is pre-split when its phase advances by more than one period.
constexpr double kMaxPanelPhase = 2.0 * kPi;
constexpr int kMaxSplitFanout = 16;
constexpr int kMaxTailCycles = 400;
constexpr int kMaxPresplitPanels = 1 << 20;

bool finite(Complex v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// Evaluates a vector integrand g(u, out) of `m` components at the 15 nodes.
struct Piece {
  double a;
  double b;
  std::vector<Complex> value;
  std::vector<double> error;
  double priority = 0.0;
  double absolute = 0.0;
};

struct Engine {
  const std::function<void(double, Complex*)>& g;
  int m;
  const QuadratureSettings& settings;
  const std::function<double(double)>& rate_u;  // phase per unit u, may be empty
  long evaluations = 0;
  std::vector<double> scale{};  // per-component error scale for priorities

  Piece evaluate(double a, double b) {
    const auto xs = KronrodRule::nodes(a, b);
    std::vector<std::array<Complex, 15>> vals(static_cast<std::size_t>(m));
    std::vector<Complex> buf(static_cast<std::size_t>(m));
    for (int i = 0; i < 15; ++i) {
      g(xs[static_cast<std::size_t>(i)], buf.data());
      for (int c = 0; c < m; ++c) vals[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] =
          buf[static_cast<std::size_t>(c)];
    }
    evaluations += 15;
    Piece p{a, b, std::vector<Complex>(static_cast<std::size_t>(m)),
            std::vector<double>(static_cast<std::size_t>(m)), 0.0, 0.0};
    for (int c = 0; c < m; ++c) {
      const auto e = estimate_panel(vals[static_cast<std::size_t>(c)], a, b);
      p.value[static_cast<std::size_t>(c)] = e.kronrod;
      p.error[static_cast<std::size_t>(c)] = e.error;
      p.absolute = std::max(p.absolute, e.absolute);
    }
    return p;
  }

  double phase_change(double a, double b) const {
    if (!rate_u) return 0.0;
    const double mid = 0.5 * (a + b);
    const double r = std::max({rate_u(a), rate_u(mid), rate_u(b)});
    return r * (b - a);
  }

  void set_priority(Piece& p) const {
    double pr = 0.0;
    for (int c = 0; c < m; ++c) {
      pr = std::max(pr, p.error[static_cast<std::size_t>(c)] / scale[static_cast<std::size_t>(c)]);
    }
    p.priority = pr;
  }

  struct Outcome {
    std::vector<QuadratureResult> results;
    std::vector<Panel> panels;
  };

  Outcome run(double a, double b, int initial_panels, bool keep_panels) {
    const double width = b - a;
    // Panels created by the phase pre-split do not count against the
    // subdivision budget, which limits adaptive bisections only.
    int budget = settings.max_subdivisions;
    std::vector<Piece> pieces;
    std::vector<std::pair<double, double>> stack;
    for (int k = initial_panels - 1; k >= 0; --k) {
      stack.emplace_back(a + width * k / initial_panels, a + width * (k + 1) / initial_panels);
    }
    bool budget_hit = false;
    while (!stack.empty()) {
      auto [l, r] = stack.back();
      stack.pop_back();
      Piece p = evaluate(l, r);
      const double phase = phase_change(l, r);
      const double negligible = 0.1 * settings.abs_tol * (r - l) / width;
      const int planned = static_cast<int>(pieces.size() + stack.size());
      if (phase > kMaxPanelPhase && p.absolute > negligible) {
        const int k = std::min(kMaxSplitFanout, static_cast<int>(std::ceil(phase / kMaxPanelPhase)));
        if (planned + k <= kMaxPresplitPanels) {
          budget += k - 1;
          for (int j = k - 1; j >= 0; --j) {
            stack.emplace_back(l + (r - l) * j / k, l + (r - l) * (j + 1) / k);
          }
          continue;
        }
        budget_hit = true;
      }
      pieces.push_back(std::move(p));
    }

    std::vector<Complex> total(static_cast<std::size_t>(m));
    std::vector<double> err(static_cast<std::size_t>(m));
    auto recompute = [&] {
      std::fill(total.begin(), total.end(), Complex{});
      std::fill(err.begin(), err.end(), 0.0);
      for (const auto& p : pieces) {
        for (int c = 0; c < m; ++c) {
          total[static_cast<std::size_t>(c)] += p.value[static_cast<std::size_t>(c)];
          err[static_cast<std::size_t>(c)] += p.error[static_cast<std::size_t>(c)];
        }
      }
    };
    recompute();
    scale.assign(static_cast<std::size_t>(m), 0.0);
    for (int c = 0; c < m; ++c) {
      scale[static_cast<std::size_t>(c)] = settings.target(std::abs(total[static_cast<std::size_t>(c)]));
    }
    auto satisfied = [&] {
      for (int c = 0; c < m; ++c) {
        if (err[static_cast<std::size_t>(c)] >
            settings.target(std::abs(total[static_cast<std::size_t>(c)]))) {
          return false;
        }
      }
      return true;
    };

    auto cmp = [](const Piece& x, const Piece& y) { return x.priority < y.priority; };
    std::priority_queue<Piece, std::vector<Piece>, decltype(cmp)> queue(cmp);
    for (auto& p : pieces) {
      set_priority(p);
      queue.push(std::move(p));
    }
    pieces.clear();

    // Rebuilds the sums from the queue to keep cancellation from accumulating.
    auto refresh = [&] {
      auto copy = queue;
      pieces.clear();
      while (!copy.empty()) {
        pieces.push_back(copy.top());
        copy.pop();
      }
      recompute();
      pieces.clear();
    };

    bool stuck = false;
    int iterations = 0;
    while (static_cast<int>(queue.size()) < budget) {
      if (satisfied()) {
        // Stop only if the freshly summed totals agree.
        refresh();
        if (satisfied()) break;
      }
      Piece worst = queue.top();
      const double mid = 0.5 * (worst.a + worst.b);
      if (!(mid > worst.a && mid < worst.b) || (worst.b - worst.a) < 4.0 * kEps * width) {
        stuck = true;
        break;
      }
      queue.pop();
      Piece left = evaluate(worst.a, mid);
      Piece right = evaluate(mid, worst.b);
      for (int c = 0; c < m; ++c) {
        const auto cc = static_cast<std::size_t>(c);
        total[cc] += left.value[cc] + right.value[cc] - worst.value[cc];
        err[cc] += left.error[cc] + right.error[cc] - worst.error[cc];
      }
      set_priority(left);
      set_priority(right);
      queue.push(std::move(left));
      queue.push(std::move(right));
      if (++iterations % 64 == 0) refresh();
    }

    Outcome out;
    std::vector<Piece> final_pieces;
    final_pieces.reserve(queue.size());
    while (!queue.empty()) {
      final_pieces.push_back(queue.top());
      queue.pop();
    }
    std::sort(final_pieces.begin(), final_pieces.end(),
              [](const Piece& x, const Piece& y) { return x.a < y.a; });
    pieces = std::move(final_pieces);
    recompute();
    const bool ok = satisfied() && !stuck && !budget_hit;
    out.results.resize(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
      auto& r = out.results[static_cast<std::size_t>(c)];
      r.value = total[static_cast<std::size_t>(c)];
      r.error_estimate = err[static_cast<std::size_t>(c)];
      r.evaluations = evaluations;
      r.converged = ok;
    }
    if (keep_panels) {
      out.panels.reserve(pieces.size());
      for (const auto& p : pieces) out.panels.push_back({p.a, p.b});
    }
    return out;
  }
};

void check_value(Complex v, Complex z) {
  if (!finite(v)) {
    throw IntegrandSingularity("integrand is not finite at a quadrature node", z);
  }
}

std::function<double(double)> rate_along(const PhaseRate& rate,
                                         const std::function<PathPoint(double)>& path) {
  if (!rate) return {};
  return [rate, path](double u) {
    const PathPoint p = path(u);
    return rate(p.z) * std::abs(p.dz_du);
  };
}

void add_into(std::vector<QuadratureResult>& acc, const std::vector<QuadratureResult>& part) {
  for (std::size_t c = 0; c < acc.size(); ++c) acc[c] += part[c];
}

// Integral over [7/8 reach, reach] of max_c |f_c| / scale_c along the ray,
// from five samples.
double tail_indicator(const MultiIntegrand& f, int m, Complex anchor, Complex dir, double reach,
                      const std::vector<double>& scale, long& evaluations) {
  std::vector<Complex> buf(static_cast<std::size_t>(m));
  const double s0 = 0.875 * reach;
  const double h = (reach - s0) / 4.0;
  double sum = 0.0;
  for (int k = 0; k <= 4; ++k) {
    const Complex z = anchor + dir * (s0 + h * k);
    f(z, buf.data());
    double v = 0.0;
    for (int c = 0; c < m; ++c) {
      check_value(buf[static_cast<std::size_t>(c)], z);
      v = std::max(v, std::abs(buf[static_cast<std::size_t>(c)]) / scale[static_cast<std::size_t>(c)]);
    }
    sum += (k == 0 || k == 4 ? 0.5 : 1.0) * v;
  }
  evaluations += 5;
  return sum * h;
}

SegmentPartition partition_canonical(const MultiIntegrand& f, int m, const ContourSegment& seg,
                                     const QuadratureSettings& settings,
                                     const OscillationHint& hint) {
  SegmentPartition out;
  out.results.resize(static_cast<std::size_t>(m));

  std::function<PathPoint(double)> path = [&seg](double u) { return seg.at(u); };
  std::function<void(double, Complex*)> g = [&](double u, Complex* dst) {
    const PathPoint p = seg.at(u);
    f(p.z, dst);
    for (int c = 0; c < m; ++c) {
      check_value(dst[c], p.z);
      dst[c] *= p.dz_du;
    }
  };
  const auto rate_u = rate_along(hint.rate, path);
  Engine engine{g, m, settings, rate_u};
  auto first = engine.run(0.0, 1.0, settings.initial_panels_per_segment, true);
  out.results = first.results;
  out.panels = std::move(first.panels);

  const bool truncate_tail =
      seg.kind() == SegmentKind::InfiniteRay && (hint.tail == TailMode::Truncate || !hint.rate);
  if (!truncate_tail) return out;

  const Complex anchor = seg.anchor();
  const Complex dir = seg.direction();
  const double base = std::abs(anchor);
  double reach = seg.length();
  long evaluations = 0;
  for (int k = 0;; ++k) {
    std::vector<double> scale(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
      scale[static_cast<std::size_t>(c)] =
          settings.target(std::abs(out.results[static_cast<std::size_t>(c)].value));
    }
    const double indicator = tail_indicator(f, m, anchor, dir, reach, scale, evaluations);
    if (indicator < 0.1) break;
    if (k >= settings.max_tail_doublings) {
      for (int c = 0; c < m; ++c) {
        auto& r = out.results[static_cast<std::size_t>(c)];
        r.converged = false;
        r.error_estimate += indicator * scale[static_cast<std::size_t>(c)];
      }
      break;
    }
    const double next = 2.0 * (base + reach) - base;
    std::function<void(double, Complex*)> gl = [&](double s, Complex* dst) {
      const Complex z = anchor + dir * s;
      f(z, dst);
      for (int c = 0; c < m; ++c) {
        check_value(dst[c], z);
        dst[c] *= dir;
      }
    };
    std::function<PathPoint(double)> line = [&](double s) { return PathPoint{anchor + dir * s, dir}; };
    const auto rate_s = rate_along(hint.rate, line);
    Engine ext{gl, m, settings, rate_s};
    auto piece = ext.run(reach, next, settings.initial_panels_per_segment, true);
    add_into(out.results, piece.results);
    out.extension.insert(out.extension.end(), piece.panels.begin(), piece.panels.end());
    reach = next;
  }
  for (auto& r : out.results) r.evaluations += evaluations;
  return out;
}

}  // namespace

void QuadratureSettings::validate() const {
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
    throw std::invalid_argument("rel_tol must be positive");
  }
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
    throw std::invalid_argument("abs_tol must be positive");
  }
  if (initial_panels_per_segment < 1) {
    throw std::invalid_argument("initial_panels_per_segment must be at least 1");
  }
  if (max_subdivisions < initial_panels_per_segment) {
    throw std::invalid_argument("max_subdivisions must be >= initial_panels_per_segment");
  }
  if (max_tail_doublings < 0) {
    throw std::invalid_argument("max_tail_doublings must be non-negative");
  }
}

QuadratureSettings QuadratureSettings::tightened(double factor) const {
  QuadratureSettings s = *this;
  s.rel_tol /= factor;
  s.abs_tol /= factor;
  return s;
}

double QuadratureSettings::target(double magnitude) const {
  return std::max(abs_tol, rel_tol * magnitude);
}

QuadratureResult& QuadratureResult::operator+=(const QuadratureResult& other) {
  value += other.value;
  error_estimate += other.error_estimate;
  evaluations += other.evaluations;
  converged = converged && other.converged;
  return *this;
}

QuadratureResult& QuadratureResult::operator*=(Complex factor) {
  value *= factor;
  error_estimate *= std::abs(factor);
  return *this;
}

std::array<double, 15> KronrodRule::nodes(double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  std::array<double, 15> x{};
  for (std::size_t k = 0; k < 7; ++k) {
    x[2 * k] = c - h * abscissae[k];
    x[2 * k + 1] = c + h * abscissae[k];
  }
  x[14] = c;
  return x;
}

std::array<double, 15> KronrodRule::kronrod_weights_on(double a, double b) {
  const double h = 0.5 * (b - a);
  std::array<double, 15> w{};
  for (std::size_t k = 0; k < 7; ++k) {
    w[2 * k] = h * kronrod_weights[k];
    w[2 * k + 1] = h * kronrod_weights[k];
  }
  w[14] = h * kronrod_weights[7];
  return w;
}

std::array<double, 15> KronrodRule::gauss_weights_on(double a, double b) {
  const double h = 0.5 * (b - a);
  std::array<double, 15> w{};
  for (std::size_t k = 1; k < 7; k += 2) {
    w[2 * k] = h * gauss_weights[k / 2];
    w[2 * k + 1] = h * gauss_weights[k / 2];
  }
  w[14] = h * gauss_weights[3];
  return w;
}

PanelEstimate estimate_panel(const std::array<Complex, 15>& values, double a, double b) {
  const auto wk = KronrodRule::kronrod_weights_on(a, b);
  const auto wg = KronrodRule::gauss_weights_on(a, b);
  Complex resk{}, resg{};
  double resabs = 0.0;
  for (std::size_t i = 0; i < 15; ++i) {
    resk += wk[i] * values[i];
    resg += wg[i] * values[i];
    resabs += wk[i] * std::abs(values[i]);
  }
  const double len = b - a;
  const Complex mean = resk / len;
  double resasc = 0.0;
  for (std::size_t i = 0; i < 15; ++i) resasc += wk[i] * std::abs(values[i] - mean);

  double err = std::abs(resk - resg);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
    err = std::max(50.0 * kEps * resabs, err);
  }
  return {resk, err, resabs};
}

SegmentPartition partition_segment(const MultiIntegrand& f, int count,
                                   const ContourSegment& segment,
                                   const QuadratureSettings& settings,
                                   const OscillationHint& hint) {
  settings.validate();
  if (count < 1) throw std::invalid_argument("integrand count must be at least 1");
  // Reversed orientation is computed as the negated canonical integral, which
  // makes orientation antisymmetry exact.
  SegmentPartition out = partition_canonical(f, count, segment.canonical(), settings, hint);
  if (segment.orientation() < 0) {
    for (auto& r : out.results) r.value = -r.value;
  }
  return out;
}

SegmentPartition partition_segment(const ContourIntegrand& f, const ContourSegment& segment,
                                   const QuadratureSettings& settings,
                                   const OscillationHint& hint) {
  MultiIntegrand g = [&f](Complex z, Complex* out) { out[0] = f(z); };
  return partition_segment(g, 1, segment, settings, hint);
}

std::vector<QuadratureNode> partition_nodes(const ContourSegment& segment,
                                            const SegmentPartition& partition) {
  const ContourSegment canon = segment.canonical();
  const double sign = segment.orientation();
  std::vector<QuadratureNode> nodes;
  nodes.reserve(15 * (partition.panels.size() + partition.extension.size()));
  for (const auto& p : partition.panels) {
    const auto xs = KronrodRule::nodes(p.u0, p.u1);
    const auto ws = KronrodRule::kronrod_weights_on(p.u0, p.u1);
    for (std::size_t i = 0; i < 15; ++i) {
      const PathPoint pt = canon.at(xs[i]);
      nodes.push_back({pt.z, sign * ws[i] * pt.dz_du});
    }
  }
  for (const auto& p : partition.extension) {
    const auto xs = KronrodRule::nodes(p.u0, p.u1);
    const auto ws = KronrodRule::kronrod_weights_on(p.u0, p.u1);
    for (std::size_t i = 0; i < 15; ++i) {
      nodes.push_back({canon.anchor() + canon.direction() * xs[i],
                       sign * ws[i] * canon.direction()});
    }
  }
  return nodes;
}

QuadratureResult integrate_ray_tail(const ContourIntegrand& f, const ContourSegment& ray,
                                    double from_reach, const QuadratureSettings& settings,
                                    const PhaseRate& rate, double scale) {
  if (ray.kind() != SegmentKind::InfiniteRay) {
    throw InvalidGeometry("tail integration needs an infinite ray");
  }
  if (!rate) throw std::invalid_argument("tail extrapolation needs a phase rate");
  const Complex anchor = ray.anchor();
  const Complex dir = ray.direction();
  const double target = settings.target(scale);
  QuadratureSettings cycle = settings;
  cycle.abs_tol = std::max(target / 50.0, std::numeric_limits<double>::min());
  cycle.initial_panels_per_segment = 1;

  QuadratureResult out;
  std::vector<Complex> sums{Complex{}};
  double s = from_reach;
  int quiet = 0;
  int settled = 0;
  Complex previous{};
  bool have_previous = false;
  bool done = false;
  for (int k = 0; k < kMaxTailCycles; ++k) {
    const double r = rate(anchor + dir * s);
    double h = r > 0.0 ? kPi / r : from_reach;
    h = std::clamp(h, 1e-6 * from_reach, from_reach);
    RealIntegrand g = [&](double x) {
      const Complex z = anchor + dir * x;
      const Complex v = f(z);
      check_value(v, z);
      return v * dir;
    };
    const QuadratureResult c = integrate_interval(g, s, s + h, cycle);
    out.evaluations += c.evaluations;
    out.error_estimate += c.error_estimate;
    if (!c.converged) out.converged = false;
    sums.push_back(sums.back() + c.value);
    s += h;

    quiet = std::abs(c.value) <= target / 100.0 ? quiet + 1 : 0;
    if (quiet >= 2) {
      out.value = sums.back();
      done = true;
      break;
    }
    if (sums.size() >= 5) {
      const Extrapolation e = wynn_epsilon(sums);
      if (have_previous && std::abs(e.value - previous) <= target / 4.0) {
        if (++settled >= 2) {
          out.value = e.value;
          out.error_estimate += std::max(std::abs(e.value - previous), e.error);
          done = true;
          break;
        }
      } else {
        settled = 0;
      }
      previous = e.value;
      have_previous = true;
    }
  }
  if (!done) {
    out.value = have_previous ? previous : sums.back();
    out.error_estimate += target;
    out.converged = false;
  }
  if (ray.orientation() < 0) out.value = -out.value;
  return out;
}

QuadratureResult integrate_segment(const ContourIntegrand& f, const ContourSegment& segment,
                                   const QuadratureSettings& settings,
                                   const OscillationHint& hint) {
  SegmentPartition part = partition_segment(f, segment, settings, hint);
  QuadratureResult result = part.results.front();
  if (segment.kind() == SegmentKind::InfiniteRay && hint.tail == TailMode::Extrapolate &&
      hint.rate) {
    result += integrate_ray_tail(f, segment, segment.length(), settings, hint.rate,
                                 std::abs(result.value));
  }
  result.converged =
      result.converged && result.error_estimate <= settings.target(std::abs(result.value));
  return result;
}

QuadratureResult integrate_contour(const ContourIntegrand& f, const Contour& contour,
                                   const QuadratureSettings& settings,
                                   const OscillationHint& hint) {
  QuadratureResult total;
  double magnitude = 0.0;
  for (const auto& seg : contour.segments()) {
    const QuadratureResult r = integrate_segment(f, seg, settings, hint);
    magnitude += std::abs(r.value);
    total += r;
  }
  // The relative part of the tolerance refers to the summed segment
  // magnitudes, so that cancellation between segments is not penalized.
  total.converged = total.converged && total.error_estimate <= settings.target(magnitude);
  return total;
}

QuadratureResult integrate_interval(const RealIntegrand& f, double a, double b,
                                    const QuadratureSettings& settings,
                                    const std::function<double(double)>& rate) {
  settings.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("interval endpoints must be finite");
  }
  if (a == b) return {};
  if (b < a) {
    QuadratureResult r = integrate_interval(f, b, a, settings, rate);
    r.value = -r.value;
    return r;
  }
  std::function<void(double, Complex*)> g = [&f](double x, Complex* out) {
    const Complex v = f(x);
    check_value(v, Complex(x, 0.0));
    out[0] = v;
  };
  Engine engine{g, 1, settings, rate};
  return engine.run(a, b, settings.initial_panels_per_segment, false).results.front();
}

double halfline_cutoff(double decay_rate) {
  if (!(decay_rate > 0.0)) throw std::invalid_argument("decay_rate must be positive");
  return std::max(40.0, 40.0 / decay_rate);
}

QuadratureResult integrate_real_halfline(const RealIntegrand& f, double decay_rate,
                                         const QuadratureSettings& settings,
                                         const std::function<double(double)>& rate) {
  const double y_max = halfline_cutoff(decay_rate);
  const Complex edge = f(y_max);
  check_value(edge, Complex(y_max, 0.0));
  const double neglected = std::abs(edge) / decay_rate;
  // Leave a little of the error budget for the neglected tail.
  QuadratureResult r = integrate_interval(
      f, 0.0, y_max, neglected > 0.0 ? settings.tightened(1.25) : settings, rate);
  r.error_estimate += neglected;
  r.evaluations += 1;
  r.converged = r.converged && r.error_estimate <= settings.target(std::abs(r.value));
  return r;
}

namespace {

// Highest even column of the epsilon table built from sums[begin, end).
Complex wynn_estimate(const std::vector<Complex>& sums, std::size_t begin, std::size_t end) {
  std::vector<Complex> prev(end - begin, Complex{});
  std::vector<Complex> cur(sums.begin() + static_cast<std::ptrdiff_t>(begin),
                           sums.begin() + static_cast<std::ptrdiff_t>(end));
  Complex best = cur.back();
  for (int k = 1; cur.size() >= 2; ++k) {
    std::vector<Complex> next(cur.size() - 1);
    for (std::size_t n = 0; n + 1 < cur.size(); ++n) {
      const Complex diff = cur[n + 1] - cur[n];
      if (std::abs(diff) <= 1e-300 ||
          std::abs(diff) <= 4.0 * kEps * std::max(std::abs(cur[n + 1]), std::abs(cur[n]))) {
        return best;
      }
      next[n] = prev[n + 1] + 1.0 / diff;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (k % 2 == 0) best = cur.back();
  }
  return best;
}

}  // namespace

Extrapolation wynn_epsilon(const std::vector<Complex>& partial_sums) {
  if (partial_sums.empty()) return {};
  if (partial_sums.size() < 3) return {partial_sums.back(), 0.0};
  constexpr std::size_t kWindow = 24;
  const std::size_t n = partial_sums.size();
  const std::size_t start = n > kWindow ? n - kWindow : 0;
  const Complex full = wynn_estimate(partial_sums, start, n);
  const Complex shorter = wynn_estimate(partial_sums, start, n - 1);
  return {full, std::abs(full - shorter)};
}

double winding_number(const std::vector<ContourSegment>& closed_path, Complex z0,
                      const QuadratureSettings& settings) {
  if (closed_path.empty()) throw InvalidGeometry("empty path");
  // Rays are taken at face value as finite pieces of the closed path.
  QuadratureSettings s = settings;
  s.max_tail_doublings = 0;
  Complex total{};
  for (const auto& seg : closed_path) {
    total += partition_segment([z0](Complex z) { return 1.0 / (z - z0); }, seg, s)
                 .results.front()
                 .value;
  }
  return (total / Complex(0.0, 2.0 * kPi)).real();
}

}  // namespace fokas
