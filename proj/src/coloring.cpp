#include "airgnn/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace airgnn::topology {

namespace {

std::vector<int> largest_first_order(const ConflictGraph& cg) {
  std::vector<int> order(cg.n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> deg(cg.n);
  for (int v = 0; v < cg.n; ++v) deg[v] = cg.degree(v);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (deg[a] != deg[b]) return deg[a] > deg[b];
    return a < b;
  });
  return order;
}

// smallest-last: repeatedly remove a minimum-degree vertex, color in reverse
std::vector<int> degeneracy_order(const ConflictGraph& cg) {
  std::vector<int> deg(cg.n);
  std::vector<bool> removed(cg.n, false);
  for (int v = 0; v < cg.n; ++v) deg[v] = cg.degree(v);
  std::vector<int> order;
  order.reserve(cg.n);
  for (int step = 0; step < cg.n; ++step) {
    int best = -1;
    for (int v = 0; v < cg.n; ++v) {
      if (removed[v]) continue;
      if (best < 0 || deg[v] < deg[best] || (deg[v] == deg[best] && v < best)) best = v;
    }
    removed[best] = true;
    order.push_back(best);
    for (int u = 0; u < cg.n; ++u) {
      if (!removed[u] && cg.edge(best, u)) --deg[u];
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace

ColoringResult greedy_coloring(const ConflictGraph& cg, ColoringOrder order) {
  ColoringResult result;
  result.color_of.assign(cg.n, -1);
  result.clique_lower_bound = cg.clique_lower_bound;
  if (cg.n == 0) return result;

  const std::vector<int> seq = order == ColoringOrder::kLargestFirst
                                   ? largest_first_order(cg)
                                   : degeneracy_order(cg);
  std::vector<bool> used(cg.n + 1, false);
  for (int v : seq) {
    std::fill(used.begin(), used.end(), false);
    for (int u = 0; u < cg.n; ++u) {
      if (cg.edge(v, u) && result.color_of[u] >= 0) used[result.color_of[u]] = true;
    }
    int c = 0;
    while (used[c]) ++c;
    result.color_of[v] = c;
    result.num_colors = std::max(result.num_colors, c + 1);
  }
  return result;
}

std::string coloring_to_csv(const ColoringResult& result) {
  std::ostringstream os;
  os << "vertex,color\n";
  for (size_t v = 0; v < result.color_of.size(); ++v) {
    os << v << "," << result.color_of[v] << "\n";
  }
  return os.str();
}

int digital_latency(int delta, int k) {
  if (k <= 0) throw std::invalid_argument("digital_latency: K must be >= 1");
  if (delta < 0) throw std::invalid_argument("digital_latency: negative degree");
  return (delta + k - 1) / k;
}

int air_latency() { return 1; }

LatencyReport latency_report(const DirectedGraph& g, int k) {
  LatencyReport report;
  report.air_slots = air_latency();
  report.max_degree = max_in_degree(g);
  const ConflictGraph cg = build_conflict_graph(g);
  const ColoringResult coloring = greedy_coloring(cg);
  // Only vertices that actually transmit consume a resource; count the
  // distinct colors among them (an edgeless graph schedules in 0 slots).
  std::vector<bool> color_used(static_cast<size_t>(coloring.num_colors), false);
  for (int tx = 0; tx < g.n; ++tx) {
    bool transmits = false;
    for (int rx = 0; rx < g.n && !transmits; ++rx) {
      transmits = tx != rx && g.edge(tx, rx);
    }
    if (transmits) color_used[coloring.color_of[tx]] = true;
  }
  int used = 0;
  for (bool b : color_used) used += b ? 1 : 0;
  report.greedy_colors = used;
  report.digital_lower_bound = digital_latency(report.max_degree, k);
  report.digital_greedy_slots = digital_latency(used, k);
  return report;
}

}  // namespace airgnn::topology
