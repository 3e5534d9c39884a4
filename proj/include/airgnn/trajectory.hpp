#pragma once

#include <vector>

#include "airgnn/geometry.hpp"
#include "airgnn/rng.hpp"

namespace airgnn::envsim {

// Random-waypoint path sampled at fixed dt; exactly T poses.
struct BlockerTrajectory {
  std::vector<Point> waypoints;
  double speed = 0.0;  // m/s
  double dt = 0.0;     // s
  std::vector<BlockerPose> poses;
};

// Confines the blocker footprint (half-diagonal margin) to the floor.
// Throws on speed <= 0, T < 1, or a layout too small to place the blocker.
BlockerTrajectory generate_trajectory(const FactoryLayout& layout, double speed,
                                      double dt, int t_steps, RngStream& rng);

}  // namespace airgnn::envsim
