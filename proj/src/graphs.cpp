#include "airgnn/graphs.hpp"

#include <sstream>
#include <stdexcept>

namespace airgnn::topology {

int DirectedGraph::edge_count() const {
  int c = 0;
  for (uint8_t v : adj) c += v != 0;
  return c;
}

std::vector<int> DirectedGraph::in_neighbors(int rx) const {
  std::vector<int> out;
  for (int tx = 0; tx < n; ++tx) {
    if (tx != rx && edge(tx, rx)) out.push_back(tx);
  }
  return out;
}

SubcarrierGraphs build_edge_sets(const std::vector<double>& powers,
                                 const std::vector<double>& expected_gains, int n,
                                 int k, double sigma2, double gamma_min) {
  if (sigma2 <= 0.0) throw std::invalid_argument("build_edge_sets: sigma2 must be > 0");
  if (powers.size() != static_cast<size_t>(n) * k) {
    throw std::invalid_argument("build_edge_sets: powers shape mismatch");
  }
  if (expected_gains.size() != static_cast<size_t>(n) * n * k) {
    throw std::invalid_argument("build_edge_sets: expected_gains shape mismatch");
  }
  for (double p : powers) {
    if (p < 0.0) throw std::invalid_argument("build_edge_sets: negative power");
  }
  SubcarrierGraphs graphs(n, k);
  for (int tx = 0; tx < n; ++tx) {
    for (int rx = 0; rx < n; ++rx) {
      if (tx == rx) continue;
      for (int sc = 0; sc < k; ++sc) {
        const double p = powers[static_cast<size_t>(tx) * k + sc];
        const double e =
            expected_gains[(static_cast<size_t>(tx) * n + rx) * k + sc];
        if (p * e / sigma2 >= gamma_min) graphs.set_edge(sc, tx, rx);
      }
    }
  }
  return graphs;
}

DirectedGraph union_graph(const SubcarrierGraphs& graphs) {
  DirectedGraph g(graphs.n);
  for (int sc = 0; sc < graphs.k; ++sc) {
    for (int tx = 0; tx < graphs.n; ++tx) {
      for (int rx = 0; rx < graphs.n; ++rx) {
        if (graphs.edge(sc, tx, rx)) g.set_edge(tx, rx);
      }
    }
  }
  return g;
}

int max_in_degree(const DirectedGraph& g) {
  int best = 0;
  for (int rx = 0; rx < g.n; ++rx) {
    int deg = 0;
    for (int tx = 0; tx < g.n; ++tx) {
      if (tx != rx && g.edge(tx, rx)) ++deg;
    }
    best = std::max(best, deg);
  }
  return best;
}

int max_degree(const SubcarrierGraphs& graphs, bool over_union) {
  if (graphs.n == 0) throw std::invalid_argument("max_degree: empty graph");
  if (over_union) return max_in_degree(union_graph(graphs));
  int best = 0;
  for (int sc = 0; sc < graphs.k; ++sc) {
    for (int rx = 0; rx < graphs.n; ++rx) {
      int deg = 0;
      for (int tx = 0; tx < graphs.n; ++tx) {
        if (tx != rx && graphs.edge(sc, tx, rx)) ++deg;
      }
      best = std::max(best, deg);
    }
  }
  return best;
}

int ConflictGraph::edge_count() const {
  int c = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) c += edge(u, v) ? 1 : 0;
  }
  return c;
}

int ConflictGraph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n; ++u) {
    if (u != v && edge(v, u)) ++d;
  }
  return d;
}

ConflictGraph build_conflict_graph(const DirectedGraph& g) {
  ConflictGraph cg(g.n);
  int delta = 0;
  for (int rx = 0; rx < g.n; ++rx) {
    const std::vector<int> senders = g.in_neighbors(rx);
    delta = std::max(delta, static_cast<int>(senders.size()));
    for (size_t a = 0; a < senders.size(); ++a) {
      for (size_t b = a + 1; b < senders.size(); ++b) {
        cg.adj[static_cast<size_t>(senders[a]) * g.n + senders[b]] = 1;
        cg.adj[static_cast<size_t>(senders[b]) * g.n + senders[a]] = 1;
      }
    }
  }
  cg.clique_lower_bound = delta;
  return cg;
}

ConflictGraph build_conflict_graph(const SubcarrierGraphs& graphs) {
  return build_conflict_graph(union_graph(graphs));
}

std::string subcarrier_graphs_to_edge_list(const SubcarrierGraphs& graphs) {
  std::ostringstream os;
  for (int sc = 0; sc < graphs.k; ++sc) {
    for (int tx = 0; tx < graphs.n; ++tx) {
      for (int rx = 0; rx < graphs.n; ++rx) {
        if (graphs.edge(sc, tx, rx)) os << sc << " " << tx << " " << rx << "\n";
      }
    }
  }
  return os.str();
}

SubcarrierGraphs subcarrier_graphs_from_edge_list(const std::string& text, int n,
                                                  int k) {
  SubcarrierGraphs graphs(n, k);
  std::istringstream in(text);
  int sc, tx, rx;
  while (in >> sc >> tx >> rx) {
    if (sc < 0 || sc >= k || tx < 0 || tx >= n || rx < 0 || rx >= n) {
      throw std::invalid_argument("edge list: index out of range");
    }
    graphs.set_edge(sc, tx, rx);
  }
  return graphs;
}

}  // namespace airgnn::topology
