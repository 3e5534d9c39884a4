#pragma once

#include <vector>

namespace airgnn::envsim {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline double dist(const Point& a, const Point& b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

// Rectangular factory floor with one AP and N static nodes. The blocker is a
// rectangle of (length, width) meters whose pose moves along a trajectory.
struct FactoryLayout {
  double width = 0.0;
  double height = 0.0;
  Point ap;
  std::vector<Point> nodes;
  double blocker_length = 0.0;
  double blocker_width = 0.0;

  // Throws std::invalid_argument on violated invariants: positions inside
  // bounds, pairwise-distinct nodes, N >= 2.
  void validate() const;
};

struct BlockerPose {
  Point position;
  double heading = 0.0;  // radians, direction of travel
};

// True iff the open segment a-b intersects the oriented rectangle footprint
// centered at pose.position (length along heading, width across).
bool los_blocked(const Point& a, const Point& b, const BlockerPose& pose,
                 double length, double width);

}  // namespace airgnn::envsim
