#include "fokas/reference_solvers.hpp"

#include <Eigen/SparseLU>
#include <Eigen/SparseCore>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace fokas {
namespace {

constexpr double kPi = std::numbers::pi;
// Norm growth beyond this factor marks a scheme as unstable.
constexpr double kGrowthLimit = 10.0;
// Peak damping rate of the Stokes sponge layer.
constexpr double kSpongeStrength = 1.0;

using SparseMatrix = Eigen::SparseMatrix<double>;
using Triplets = std::vector<Eigen::Triplet<double>>;

int checked_count(double length, double step, const char* what) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
  const double n = length / step;
  const double rounded = std::round(n);
  if (rounded < 1.0 || std::abs(n - rounded) > 1e-9 * std::max(1.0, n)) {
    std::ostringstream os;
    os << what << " = " << step << " does not divide " << length;
    throw DiscretizationError(os.str());
  }
  return static_cast<int>(rounded);
}

// Implicit two-level scheme lhs q^{n+1} = rhs q^n; boundary and constraint
// rows have zero right-hand side rows.
class TwoLevelScheme {
 public:
  TwoLevelScheme(const InitialDatum& Q, double length, double dx, double dt, double T,
                 std::string scheme, FdOptions options)
      : options_(options) {
    if (!(T > 0.0)) throw std::invalid_argument("T must be positive");
    if (options.record_every < 1) throw std::invalid_argument("record_every must be >= 1");
    nx_ = checked_count(length, dx, "dx") + 1;
    steps_ = checked_count(T, dt, "dt");
    out_.dx = dx;
    out_.dt = dt;
    out_.length = length;
    out_.scheme = std::move(scheme);
    out_.x.resize(static_cast<std::size_t>(nx_));
    for (int j = 0; j < nx_; ++j) out_.x[static_cast<std::size_t>(j)] = j * dx;
    q_.resize(nx_);
    for (int j = 0; j < nx_; ++j) q_[j] = Q.value(out_.x[static_cast<std::size_t>(j)]);
  }

  int size() const { return nx_; }
  double x(int j) const { return out_.x[static_cast<std::size_t>(j)]; }

  GridSolution run(const Triplets& lhs, const Triplets& rhs) {
    SparseMatrix A(nx_, nx_), B(nx_, nx_);
    A.setFromTriplets(lhs.begin(), lhs.end());
    B.setFromTriplets(rhs.begin(), rhs.end());
    A.makeCompressed();
    Eigen::SparseLU<SparseMatrix> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success) {
      throw DiscretizationError("singular finite-difference system; try a finer dx");
    }
    const double initial = std::max(q_.cwiseAbs().maxCoeff(), 1e-300);
    record(0);
    for (int n = 1; n <= steps_; ++n) {
      const Eigen::VectorXd r = B * q_;
      q_ = lu.solve(r);
      if (lu.info() != Eigen::Success) throw SchemeFailure("linear solve failed");
      const double peak = q_.cwiseAbs().maxCoeff();
      if (!std::isfinite(peak) || peak > kGrowthLimit * initial) {
        std::ostringstream os;
        os << out_.scheme << ": solution norm grew by more than " << kGrowthLimit
           << "x at step " << n;
        throw SchemeFailure(os.str());
      }
      if (n % options_.record_every == 0 || n == steps_) record(n);
    }
    return std::move(out_);
  }

 private:
  void record(int n) {
    out_.t.push_back(n * out_.dt);
    out_.values.insert(out_.values.end(), q_.data(), q_.data() + nx_);
  }

  FdOptions options_;
  int nx_ = 0;
  int steps_ = 0;
  Eigen::VectorXd q_;
  GridSolution out_;
};

void add_row(Triplets& m, int row, int first, const std::vector<double>& w, double scale) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] != 0.0) m.emplace_back(row, first + static_cast<int>(k), scale * w[k]);
  }
}

// Scheme rows for an evolution equation q_t = (A q)_j with the implicit
// trapezoidal rule: (I - dt/2 A) on the left, (I + dt/2 A) on the right.
void add_trapezoidal_row(Triplets& lhs, Triplets& rhs, int j, int first,
                         const std::vector<double>& a, double dt) {
  lhs.emplace_back(j, j, 1.0);
  rhs.emplace_back(j, j, 1.0);
  add_row(lhs, j, first, a, -0.5 * dt);
  add_row(rhs, j, first, a, 0.5 * dt);
}

double lagrange_cubic(const std::vector<double>& xs, const double* ys, std::size_t first, double x) {
  double sum = 0.0;
  for (std::size_t i = first; i < first + 4; ++i) {
    double w = 1.0;
    for (std::size_t k = first; k < first + 4; ++k) {
      if (k != i) w *= (x - xs[k]) / (xs[i] - xs[k]);
    }
    sum += w * ys[i];
  }
  return sum;
}

}  // namespace

double GridSolution::at(std::size_t time_index, std::size_t space_index) const {
  if (time_index >= t.size() || space_index >= x.size()) throw std::out_of_range("grid index");
  return values[time_index * x.size() + space_index];
}

std::size_t GridSolution::time_index(double time) const {
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (std::abs(t[k] - time) <= 1e-9 * std::max(1.0, std::abs(time))) return k;
  }
  std::ostringstream os;
  os << "t = " << time << " is not a recorded time of the grid solution";
  throw DomainError(os.str());
}

double GridSolution::sample(double xq, double time) const {
  const std::size_t k = time_index(time);
  if (x.size() < 4) throw DomainError("grid too small to interpolate");
  if (!(xq >= x.front() && xq <= x.back())) throw DomainError("x outside the grid");
  const auto it = std::upper_bound(x.begin(), x.end(), xq);
  std::size_t j = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - x.begin() - 1, 0));
  const std::size_t first = std::min(j > 0 ? j - 1 : 0, x.size() - 4);
  return lagrange_cubic(x, values.data() + k * x.size(), first, xq);
}

std::vector<double> fd_weights(double x0, const std::vector<double>& nodes, int m) {
  const int n = static_cast<int>(nodes.size()) - 1;
  if (m < 0 || n < m) throw std::invalid_argument("need more nodes than the derivative order");
  // c[i][k]: weight of node i for the k-th derivative.
  std::vector<std::vector<double>> c(nodes.size(), std::vector<double>(static_cast<std::size_t>(m) + 1));
  double c1 = 1.0, c4 = nodes[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[static_cast<std::size_t>(i)] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[static_cast<std::size_t>(i)] - nodes[static_cast<std::size_t>(j)];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) w[i] = c[i][static_cast<std::size_t>(m)];
  return w;
}

QuadratureResult heat_dirichlet_sine_solution(const InitialDatum& Q, double x, double t,
                                              const QuadratureSettings& settings) {
  if (Q.domain() != SpatialDomain::HalfLine) throw DomainError("Q must live on the half-line");
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("x must be non-negative");
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("t must be non-negative");
  const double trace = std::abs(Q.value(0.0));
  if (trace > 1e-10) throw PreconditionError("Q(0) = 0", trace);
  if (x == 0.0) return {};
  const QuadratureSettings inner = settings.tightened(10.0);
  // S(lambda) = Im int_0^inf e^{i lambda y} Q(y) dy for real Q.
  auto S = [&](double lambda) {
    const QuadratureResult r =
        halfline_exponential_transform({{1.0, Complex(0.0, -lambda)}}, Q, inner);
    if (!r.converged) throw Unconverged("sine transform did not converge", r.error_estimate);
    return r.value.imag();
  };
  const auto ray = ContourSegment::ray(0.0, 1.0, kDefaultTruncation);
  const OscillationHint hint{[x](Complex) { return x; }, TailMode::Extrapolate};
  QuadratureResult r = integrate_segment(
      [&](Complex l) {
        const double lambda = l.real();
        const double damping = std::exp(-lambda * lambda * t);
        if (damping == 0.0) return Complex{};
        return Complex(std::sin(lambda * x) * damping * S(lambda), 0.0);
      },
      ray, settings, hint);
  r *= 2.0 / kPi;
  return r;
}

GridSolution fd_heat_nonlocal(const SensorKernel& K, const InitialDatum& Q, double dx, double dt,
                              double T, FdOptions options) {
  if (Q.domain() != SpatialDomain::UnitInterval) throw DomainError("Q must live on [0, 1]");
  TwoLevelScheme scheme(Q, 1.0, dx, dt, T, "heat-nonlocal Crank-Nicolson", options);
  const int N = scheme.size() - 1;
  Triplets lhs, rhs;
  // Nonlocal condition by the trapezoid rule.
  for (int j = 0; j <= N; ++j) {
    const double w = (j == 0 || j == N ? 0.5 : 1.0) * dx * K(scheme.x(j));
    if (w != 0.0) lhs.emplace_back(0, j, w);
  }
  const double inv = 1.0 / (dx * dx);
  for (int j = 1; j < N; ++j) add_trapezoidal_row(lhs, rhs, j, j - 1, {inv, -2.0 * inv, inv}, dt);
  add_row(lhs, N, N - 2, {1.0, -4.0, 3.0}, 0.5 / dx);
  return scheme.run(lhs, rhs);
}

GridSolution fd_heat_dirichlet_halfline(const InitialDatum& Q, double dx, double dt, double T,
                                        double length, FdOptions options) {
  if (Q.domain() != SpatialDomain::HalfLine) throw DomainError("Q must live on the half-line");
  TwoLevelScheme scheme(Q, length, dx, dt, T, "heat-dirichlet Crank-Nicolson", options);
  const int N = scheme.size() - 1;
  Triplets lhs, rhs;
  lhs.emplace_back(0, 0, 1.0);
  const double inv = 1.0 / (dx * dx);
  for (int j = 1; j < N; ++j) add_trapezoidal_row(lhs, rhs, j, j - 1, {inv, -2.0 * inv, inv}, dt);
  lhs.emplace_back(N, N, 1.0);
  return scheme.run(lhs, rhs);
}

GridSolution fd_stokes_halfline(const InitialDatum& Q, StokesVariant variant, double dx,
                                double dt, double T, double length, FdOptions options) {
  if (Q.domain() != SpatialDomain::HalfLine) throw DomainError("Q must live on the half-line");
  if (length < 30.0) throw std::invalid_argument("domain length must be at least 30");
  TwoLevelScheme scheme(Q, length, dx, dt, T,
                        std::string("stokes-") + std::string(to_string(variant.bc)) +
                            " method of lines",
                        options);
  const int N = scheme.size() - 1;
  if (N < 8) throw DiscretizationError("grid too coarse");
  Triplets lhs, rhs;
  if (variant.bc == StokesBoundary::Neumann) {
    add_row(lhs, 0, 0, {-3.0, 4.0, -1.0}, 0.5 / dx);
  } else {
    lhs.emplace_back(0, 0, 1.0);
  }
  const double h3 = dx * dx * dx;
  const auto sponge = [&](double x) {
    const double start = 0.75 * length;
    if (x <= start) return 0.0;
    const double s = (x - start) / (0.25 * length);
    return kSpongeStrength * s * s;
  };
  // q_t = -q_xxx - sigma q.
  auto row = [&](int j, int first, std::vector<double> w) {
    for (double& v : w) v = -v / h3;
    w[static_cast<std::size_t>(j - first)] -= sponge(scheme.x(j));
    add_trapezoidal_row(lhs, rhs, j, first, w, dt);
  };
  row(1, 0, fd_weights(1.0, {0.0, 1.0, 2.0, 3.0, 4.0}, 3));
  for (int j = 2; j <= N - 2; ++j) row(j, j - 2, {-0.5, 1.0, 0.0, -1.0, 0.5});
  add_row(lhs, N - 1, N - 2, {1.0, -4.0, 3.0}, 0.5 / dx);
  lhs.emplace_back(N, N, 1.0);
  return scheme.run(lhs, rhs);
}

GridSolution fd_bbm_halfline(const InitialDatum& Q, double dx, double dt, double T,
                             double length, FdOptions options) {
  if (Q.domain() != SpatialDomain::HalfLine) throw DomainError("Q must live on the half-line");
  if (length < 30.0) throw std::invalid_argument("domain length must be at least 30");
  const double trace = std::abs(Q.value(0.0));
  if (trace > 1e-10) throw PreconditionError("Q(0) = 0", trace);
  TwoLevelScheme scheme(Q, length, dx, dt, T, "bbm-dirichlet Helmholtz trapezoidal", options);
  const int N = scheme.size() - 1;
  Triplets lhs, rhs;
  lhs.emplace_back(0, 0, 1.0);
  // (1 - D2)(q^{n+1} - q^n) = -dt/2 D1 (q^{n+1} + q^n).
  const double a = 1.0 / (dx * dx), b = 0.5 * dt / (2.0 * dx);
  for (int j = 1; j < N; ++j) {
    lhs.emplace_back(j, j - 1, -a - b);
    lhs.emplace_back(j, j, 1.0 + 2.0 * a);
    lhs.emplace_back(j, j + 1, -a + b);
    rhs.emplace_back(j, j - 1, -a + b);
    rhs.emplace_back(j, j, 1.0 + 2.0 * a);
    rhs.emplace_back(j, j + 1, -a - b);
  }
  lhs.emplace_back(N, N, 1.0);
  return scheme.run(lhs, rhs);
}

RichardsonEstimate richardson(const GridSolution& coarse, const GridSolution& fine, double x,
                              double t) {
  RichardsonEstimate e;
  e.value = coarse.sample(x, t);
  e.refined = fine.sample(x, t);
  e.extrapolated = (4.0 * e.refined - e.value) / 3.0;
  e.error = 4.0 / 3.0 * std::abs(e.value - e.refined);
  return e;
}

double observed_order(const GridSolution& h, const GridSolution& h2, const GridSolution& h4,
                      const std::vector<double>& xs, const std::vector<double>& ts) {
  double d1 = 0.0, d2 = 0.0;
  for (double t : ts) {
    for (double x : xs) {
      const double a = h.sample(x, t), b = h2.sample(x, t), c = h4.sample(x, t);
      d1 = std::max(d1, std::abs(a - b));
      d2 = std::max(d2, std::abs(b - c));
    }
  }
  if (d2 == 0.0) return d1 == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::log2(d1 / d2);
}

}  // namespace fokas
