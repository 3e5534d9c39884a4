#include "airgnn/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace airgnn::envsim {

BlockerTrajectory generate_trajectory(const FactoryLayout& layout, double speed,
                                      double dt, int t_steps, RngStream& rng) {
  if (speed <= 0.0) throw std::invalid_argument("trajectory: speed must be > 0");
  if (dt <= 0.0) throw std::invalid_argument("trajectory: dt must be > 0");
  if (t_steps < 1) throw std::invalid_argument("trajectory: T must be >= 1");

  const double margin =
      0.5 * std::hypot(layout.blocker_length, layout.blocker_width);
  const double x_lo = margin, x_hi = layout.width - margin;
  const double y_lo = margin, y_hi = layout.height - margin;
  if (x_lo >= x_hi || y_lo >= y_hi) {
    throw std::invalid_argument("trajectory: layout too small to place blocker");
  }

  auto draw_point = [&]() {
    return Point{rng.uniform(x_lo, x_hi), rng.uniform(y_lo, y_hi)};
  };

  BlockerTrajectory traj;
  traj.speed = speed;
  traj.dt = dt;
  traj.poses.reserve(static_cast<size_t>(t_steps));

  Point pos = draw_point();
  traj.waypoints.push_back(pos);
  Point target = draw_point();
  while (dist(target, pos) < 1e-6) target = draw_point();
  traj.waypoints.push_back(target);
  double heading = std::atan2(target.y - pos.y, target.x - pos.x);

  traj.poses.push_back(BlockerPose{pos, heading});
  const double step = speed * dt;
  for (int t = 1; t < t_steps; ++t) {
    double remaining = step;
    while (remaining > 0.0) {
      const double to_target = dist(target, pos);
      if (to_target <= remaining) {
        pos = target;
        remaining -= to_target;
        Point next = draw_point();
        while (dist(next, pos) < 1e-6) next = draw_point();
        target = next;
        traj.waypoints.push_back(target);
        heading = std::atan2(target.y - pos.y, target.x - pos.x);
      } else {
        const double f = remaining / to_target;
        pos.x += f * (target.x - pos.x);
        pos.y += f * (target.y - pos.y);
        heading = std::atan2(target.y - pos.y, target.x - pos.x);
        remaining = 0.0;
      }
    }
    traj.poses.push_back(BlockerPose{pos, heading});
  }
  return traj;
}

}  // namespace airgnn::envsim
