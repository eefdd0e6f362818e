#include "fokas/contour.hpp"

#include <cmath>
#include <numbers>

namespace fokas {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitSlack = 1e-12;

void require_orientation(int orientation) {
  if (orientation != 1 && orientation != -1) {
    throw InvalidGeometry("orientation must be +1 or -1");
  }
}

Complex unit_direction(Complex direction) {
  const double modulus = std::abs(direction);
  if (!(modulus > 0.0) || !std::isfinite(modulus)) {
    throw InvalidGeometry("direction must be a finite non-zero complex number");
  }
  if (std::abs(modulus - 1.0) > kUnitSlack) {
    throw InvalidGeometry("ray direction must have unit modulus");
  }
  return direction;
}

bool close(Complex a, Complex b) {
  return std::abs(a - b) <= 1e-10 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace

std::string_view to_string(Region region) {
  switch (region) {
    case Region::RealLine: return "REAL_LINE";
    case Region::BoundaryDPlus: return "BOUNDARY_D_PLUS";
    case Region::BoundaryDRhoPlus: return "BOUNDARY_D_RHO_PLUS";
    case Region::BoundaryDRhoMinus: return "BOUNDARY_D_RHO_MINUS";
    case Region::CircleC: return "CIRCLE_C";
  }
  return "UNKNOWN";
}

void require_truncation(double truncation) {
  if (!(truncation > 0.0) || !std::isfinite(truncation)) {
    throw InvalidGeometry("ray truncation radius must be positive");
  }
}

ContourSegment ContourSegment::ray(Complex anchor, Complex direction, double truncation,
                                   int orientation) {
  require_orientation(orientation);
  require_truncation(truncation);
  ContourSegment s;
  s.kind_ = SegmentKind::InfiniteRay;
  s.anchor_ = anchor;
  s.direction_ = unit_direction(direction);
  s.length_ = truncation;
  s.orientation_ = orientation;
  return s;
}

ContourSegment ContourSegment::segment(Complex from, Complex to) {
  const double len = std::abs(to - from);
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw InvalidGeometry("finite segment has zero length");
  }
  ContourSegment s;
  s.kind_ = SegmentKind::FiniteSegment;
  s.anchor_ = from;
  s.direction_ = (to - from) / len;
  s.length_ = len;
  return s;
}

ContourSegment ContourSegment::arc(Complex center, double radius, double theta_begin,
                                   double theta_end, int orientation) {
  require_orientation(orientation);
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InvalidGeometry("arc radius must be positive");
  }
  if (!(theta_end > theta_begin) || theta_end - theta_begin >= 2.0 * kPi) {
    throw InvalidGeometry("arc span must satisfy 0 < span < 2pi");
  }
  ContourSegment s;
  s.kind_ = SegmentKind::CircularArc;
  s.anchor_ = center;
  s.radius_ = radius;
  s.theta0_ = theta_begin;
  s.theta1_ = theta_end;
  s.orientation_ = orientation;
  return s;
}

ContourSegment ContourSegment::circle(Complex center, double radius, int orientation) {
  require_orientation(orientation);
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InvalidGeometry("circle radius must be positive");
  }
  ContourSegment s;
  s.kind_ = SegmentKind::FullCircle;
  s.anchor_ = center;
  s.radius_ = radius;
  s.theta0_ = 0.0;
  s.theta1_ = 2.0 * kPi;
  s.orientation_ = orientation;
  return s;
}

PathPoint ContourSegment::canonical_at(double u) const {
  switch (kind_) {
    case SegmentKind::InfiniteRay:
      return {anchor_ + direction_ * (length_ * u * u), direction_ * (2.0 * length_ * u)};
    case SegmentKind::FiniteSegment:
      return {anchor_ + direction_ * (length_ * u), direction_ * length_};
    case SegmentKind::CircularArc:
    case SegmentKind::FullCircle: {
      const double span = theta1_ - theta0_;
      const Complex e = std::polar(radius_, theta0_ + span * u);
      return {anchor_ + e, Complex(0.0, span) * e};
    }
  }
  return {};
}

PathPoint ContourSegment::at(double u) const {
  if (orientation_ > 0) return canonical_at(u);
  const PathPoint p = canonical_at(1.0 - u);
  return {p.z, -p.dz_du};
}

ContourSegment ContourSegment::reversed() const {
  if (kind_ == SegmentKind::FiniteSegment) {
    return segment(anchor_ + direction_ * length_, anchor_);
  }
  ContourSegment s = *this;
  s.orientation_ = -orientation_;
  return s;
}

ContourSegment ContourSegment::canonical() const {
  ContourSegment s = *this;
  s.orientation_ = +1;
  return s;
}

ContourSegment ContourSegment::with_truncation(double truncation) const {
  if (kind_ != SegmentKind::InfiniteRay) {
    throw InvalidGeometry("only infinite rays carry a truncation radius");
  }
  return ray(anchor_, direction_, truncation, orientation_);
}

Contour::Contour(std::vector<ContourSegment> segments, Region region)
    : segments_(std::move(segments)), region_(region) {
  if (segments_.empty()) throw InvalidGeometry("contour needs at least one segment");
  for (std::size_t k = 1; k < segments_.size(); ++k) {
    if (!close(segments_[k - 1].end(), segments_[k].start())) {
      throw InvalidGeometry("contour segments are not connected");
    }
  }
}

std::optional<double> Contour::truncation() const {
  std::optional<double> radius;
  for (const auto& s : segments_) {
    if (s.kind() == SegmentKind::InfiniteRay) {
      const double r = std::abs(s.anchor()) + s.length();
      radius = radius ? std::max(*radius, r) : r;
    }
  }
  return radius;
}

Contour Contour::with_truncation(double truncation) const {
  std::vector<ContourSegment> out;
  out.reserve(segments_.size());
  for (const auto& s : segments_) {
    if (s.kind() == SegmentKind::InfiniteRay) {
      const double reach = truncation - std::abs(s.anchor());
      if (!(reach > 0.0)) throw InvalidGeometry("truncation does not clear the ray anchor");
      out.push_back(s.with_truncation(reach));
    } else {
      out.push_back(s);
    }
  }
  return Contour(std::move(out), region_);
}

Contour real_line(double truncation) {
  return Contour({ContourSegment::ray(0.0, -1.0, truncation, -1),
                  ContourSegment::ray(0.0, 1.0, truncation, +1)},
                 Region::RealLine);
}

Contour boundary_D_plus(double truncation) {
  return Contour({ContourSegment::ray(0.0, std::polar(1.0, 2.0 * kPi / 3.0), truncation, -1),
                  ContourSegment::ray(0.0, std::polar(1.0, kPi / 3.0), truncation, +1)},
                 Region::BoundaryDPlus);
}

Contour boundary_D_rho(int half_plane_sign, double rho, double truncation) {
  if (half_plane_sign != 1 && half_plane_sign != -1) {
    throw InvalidGeometry("half-plane sign must be +1 or -1");
  }
  if (!(rho > 0.0)) throw InvalidGeometry("rho must be positive");
  if (!(truncation > rho)) throw InvalidGeometry("truncation must exceed rho");
  // Rays are anchored on the circle |lambda| = rho so that a truncation of
  // (truncation - rho) along the ray ends at modulus `truncation`.
  const double reach = truncation - rho;
  if (half_plane_sign > 0) {
    const Complex d_in = std::polar(1.0, 3.0 * kPi / 4.0);
    const Complex d_out = std::polar(1.0, kPi / 4.0);
    return Contour({ContourSegment::ray(rho * d_in, d_in, reach, -1),
                    ContourSegment::arc(0.0, rho, kPi / 4.0, 3.0 * kPi / 4.0, -1),
                    ContourSegment::ray(rho * d_out, d_out, reach, +1)},
                   Region::BoundaryDRhoPlus);
  }
  const Complex d_in = std::polar(1.0, -kPi / 4.0);
  const Complex d_out = std::polar(1.0, -3.0 * kPi / 4.0);
  return Contour({ContourSegment::ray(rho * d_in, d_in, reach, -1),
                  ContourSegment::arc(0.0, rho, -3.0 * kPi / 4.0, -kPi / 4.0, -1),
                  ContourSegment::ray(rho * d_out, d_out, reach, +1)},
                 Region::BoundaryDRhoMinus);
}

Contour circle_C(double radius) {
  if (!(radius > 0.0) || !(radius < 1.0)) {
    throw InvalidGeometry("circle C radius must lie in (0, 1)");
  }
  return Contour({ContourSegment::circle(Complex(0.0, 1.0), radius, +1)}, Region::CircleC);
}

bool in_D_plus(Complex lambda) {
  if (lambda == 0.0) return false;
  const double a = std::arg(lambda);
  return a > kPi / 3.0 && a < 2.0 * kPi / 3.0;
}

bool in_D_rho(int half_plane_sign, double rho, Complex lambda) {
  const bool half = half_plane_sign > 0 ? lambda.imag() > 0.0 : lambda.imag() < 0.0;
  return half && (lambda * lambda).real() < 0.0 && std::abs(lambda) > rho;
}

}  // namespace fokas
