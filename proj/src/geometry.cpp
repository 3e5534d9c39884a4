#include "airgnn/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace airgnn::envsim {

void FactoryLayout::validate() const {
  if (width <= 0.0 || height <= 0.0) {
    throw std::invalid_argument("layout: nonpositive floor dimensions");
  }
  auto inside = [&](const Point& p) {
    return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
  };
  if (!inside(ap)) throw std::invalid_argument("layout: AP outside floor");
  if (nodes.size() < 2) throw std::invalid_argument("layout: need at least 2 nodes");
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (!inside(nodes[i])) throw std::invalid_argument("layout: node outside floor");
    for (size_t j = i + 1; j < nodes.size(); ++j) {
      if (nodes[i].x == nodes[j].x && nodes[i].y == nodes[j].y) {
        throw std::invalid_argument("layout: duplicate node positions");
      }
    }
  }
  if (blocker_length <= 0.0 || blocker_width <= 0.0) {
    throw std::invalid_argument("layout: nonpositive blocker size");
  }
}

bool los_blocked(const Point& a, const Point& b, const BlockerPose& pose,
                 double length, double width) {
  if (a.x == b.x && a.y == b.y) {
    throw std::invalid_argument("los_blocked: segment endpoints coincide");
  }
  // Transform the segment into the blocker frame: rectangle becomes the AABB
  // [-l/2, l/2] x [-w/2, w/2]; clip with Liang-Barsky.
  const double ch = std::cos(pose.heading), sh = std::sin(pose.heading);
  auto to_frame = [&](const Point& p) {
    const double dx = p.x - pose.position.x, dy = p.y - pose.position.y;
    return Point{ch * dx + sh * dy, -sh * dx + ch * dy};
  };
  const Point p0 = to_frame(a), p1 = to_frame(b);
  const double hx = 0.5 * length, hy = 0.5 * width;

  const double dx = p1.x - p0.x, dy = p1.y - p0.y;
  double t0 = 0.0, t1 = 1.0;
  const double p[4] = {-dx, dx, -dy, dy};
  const double q[4] = {p0.x + hx, hx - p0.x, p0.y + hy, hy - p0.y};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0.0) {
      if (q[i] < 0.0) return false;  // parallel to this slab and outside
      continue;
    }
    const double r = q[i] / p[i];
    if (p[i] < 0.0) {
      if (r > t1) return false;
      if (r > t0) t0 = r;
    } else {
      if (r < t0) return false;
      if (r < t1) t1 = r;
    }
  }
  return t0 <= t1;
}

}  // namespace airgnn::envsim
