#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "fokas/error.hpp"

namespace fokas {

enum class SegmentKind { InfiniteRay, FiniteSegment, CircularArc, FullCircle };

enum class Region {
  RealLine,
  BoundaryDPlus,
  BoundaryDRhoPlus,
  BoundaryDRhoMinus,
  CircleC,
};

std::string_view to_string(Region region);

// A point on a parametrized path together with dz/du.
struct PathPoint {
  Complex z;
  Complex dz_du;
};

// One piece of a contour, parametrized over u in [0, 1].
//
// Infinite rays are truncated at a finite radius R and use z(u) = a + d R u^2,
// which clusters nodes near the anchor. Orientation -1 traverses the piece
// backwards (for a ray: from the truncation point towards the anchor).
class ContourSegment {
 public:
  static ContourSegment ray(Complex anchor, Complex direction, double truncation,
                            int orientation = +1);
  static ContourSegment segment(Complex from, Complex to);
  // Arc of |z - center| = radius over angles [theta_begin, theta_end]
  // (theta_begin < theta_end); orientation -1 traverses it clockwise.
  static ContourSegment arc(Complex center, double radius, double theta_begin,
                            double theta_end, int orientation = +1);
  static ContourSegment circle(Complex center, double radius, int orientation = +1);

  SegmentKind kind() const { return kind_; }
  Complex anchor() const { return anchor_; }
  // Unit direction for rays and finite segments.
  Complex direction() const { return direction_; }
  // Radius for arcs and circles.
  double radius() const { return radius_; }
  // Length of a finite segment, or the truncated length of a ray measured
  // from its anchor.
  double length() const { return length_; }
  std::pair<double, double> angular_span() const { return {theta0_, theta1_}; }
  int orientation() const { return orientation_; }

  PathPoint at(double u) const;
  Complex start() const { return at(0.0).z; }
  Complex end() const { return at(1.0).z; }

  ContourSegment reversed() const;
  // Rays only: same ray truncated at a different radius.
  ContourSegment with_truncation(double truncation) const;
  // Same geometry traversed in the canonical (+1) direction.
  ContourSegment canonical() const;

 private:
  ContourSegment() = default;
  PathPoint canonical_at(double u) const;

  SegmentKind kind_{SegmentKind::FiniteSegment};
  Complex anchor_{};
  Complex direction_{1.0, 0.0};
  double radius_{0.0};
  double length_{0.0};
  double theta0_{0.0};
  double theta1_{0.0};
  int orientation_{+1};
};

class Contour {
 public:
  Contour(std::vector<ContourSegment> segments, Region region);

  const std::vector<ContourSegment>& segments() const { return segments_; }
  Region region() const { return region_; }
  // Largest |lambda| reached by a truncated ray; nullopt for bounded contours.
  // Rays are assumed to point away from the origin along their own line.
  std::optional<double> truncation() const;
  Contour with_truncation(double truncation) const;

 private:
  std::vector<ContourSegment> segments_;
  Region region_;
};

inline constexpr double kDefaultTruncation = 40.0;
inline constexpr double kDefaultCircleRadius = 0.5;

// Throws InvalidGeometry unless R_max is positive and finite.
void require_truncation(double truncation);

// Real line, increasing: ray (-inf -> 0) then ray (0 -> +inf).
Contour real_line(double truncation = kDefaultTruncation);
// Positively oriented boundary of the sector pi/3 < arg < 2pi/3.
Contour boundary_D_plus(double truncation = kDefaultTruncation);
// Positively oriented boundary of {lambda in C^sign : Re(lambda^2) < 0, |lambda| > rho}.
Contour boundary_D_rho(int half_plane_sign, double rho,
                       double truncation = kDefaultTruncation);
// Counter-clockwise circle about lambda = i.
Contour circle_C(double radius = kDefaultCircleRadius);

bool in_D_plus(Complex lambda);
bool in_D_rho(int half_plane_sign, double rho, Complex lambda);

}  // namespace fokas
