#pragma once

#include <vector>

#include "airgnn/graphs.hpp"

namespace airgnn::topology {

enum class ColoringOrder { kLargestFirst, kDegeneracy };

struct ColoringResult {
  std::vector<int> color_of;  // vertex -> resource id, 0-based
  int num_colors = 0;
  int clique_lower_bound = 0;
};

// Greedy proper coloring. Vertex order is descending conflict degree with id
// tie-break (largest-first) or a degeneracy (smallest-last) order; both are
// deterministic. num_colors <= max conflict degree + 1.
ColoringResult greedy_coloring(const ConflictGraph& cg,
                               ColoringOrder order = ColoringOrder::kLargestFirst);

std::string coloring_to_csv(const ColoringResult& result);

// Communication cost in slots for one aggregation round.
// Digital lower bound per the degree argument: ceil(delta / K).
int digital_latency(int delta, int k);
// Analog aggregation always completes in a single slot.
int air_latency();

struct LatencyReport {
  int air_slots = 1;
  int digital_lower_bound = 0;   // ceil(Delta / K)
  int digital_greedy_slots = 0;  // ceil(greedy colors / K), achievable schedule
  int max_degree = 0;
  int greedy_colors = 0;
};

LatencyReport latency_report(const DirectedGraph& g, int k);

}  // namespace airgnn::topology
