#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace airgnn::topology {

// Directed adjacency, adj[tx * n + rx] != 0 means tx transmits to rx.
struct DirectedGraph {
  int n = 0;
  std::vector<uint8_t> adj;

  explicit DirectedGraph(int nodes = 0)
      : n(nodes), adj(static_cast<size_t>(nodes) * nodes, 0) {}

  bool edge(int tx, int rx) const { return adj[static_cast<size_t>(tx) * n + rx] != 0; }
  void set_edge(int tx, int rx, bool on = true) {
    adj[static_cast<size_t>(tx) * n + rx] = on ? 1 : 0;
  }
  int edge_count() const;
  // in-neighborhood of rx (its transmitter set)
  std::vector<int> in_neighbors(int rx) const;
};

// The K per-subcarrier communication graphs at one time step.
struct SubcarrierGraphs {
  int n = 0;
  int k = 0;
  std::vector<uint8_t> adj;  // [k][tx][rx]

  SubcarrierGraphs(int nodes, int subcarriers)
      : n(nodes), k(subcarriers),
        adj(static_cast<size_t>(subcarriers) * nodes * nodes, 0) {}

  bool edge(int sc, int tx, int rx) const {
    return adj[(static_cast<size_t>(sc) * n + tx) * n + rx] != 0;
  }
  void set_edge(int sc, int tx, int rx, bool on = true) {
    adj[(static_cast<size_t>(sc) * n + tx) * n + rx] = on ? 1 : 0;
  }
};

// Directed edge (tx -> rx) on subcarrier sc exists iff
//   powers[tx][sc] * expected_gains[tx][rx][sc] / sigma2 >= gamma_min.
// powers is row-major [n][k]; expected_gains row-major [i][j][k]; no
// self-loops. Throws on shape mismatch or nonpositive sigma2.
SubcarrierGraphs build_edge_sets(const std::vector<double>& powers,
                                 const std::vector<double>& expected_gains, int n,
                                 int k, double sigma2, double gamma_min);

DirectedGraph union_graph(const SubcarrierGraphs& graphs);

// Max in-neighborhood size; over the union graph when `over_union`,
// otherwise the max over the K individual graphs.
int max_degree(const SubcarrierGraphs& graphs, bool over_union);
int max_in_degree(const DirectedGraph& g);

// Conflict graph: vertices are nodes, edge (u, v) iff u and v transmit to a
// common receiver. Receivers' in-neighborhoods induce cliques by
// construction. clique_lower_bound carries max_i |D_i| from the source graph.
struct ConflictGraph {
  int n = 0;
  std::vector<uint8_t> adj;  // symmetric, no self-loops
  int clique_lower_bound = 0;

  explicit ConflictGraph(int nodes = 0)
      : n(nodes), adj(static_cast<size_t>(nodes) * nodes, 0) {}

  bool edge(int u, int v) const { return adj[static_cast<size_t>(u) * n + v] != 0; }
  int edge_count() const;
  int degree(int v) const;
};

ConflictGraph build_conflict_graph(const DirectedGraph& g);
ConflictGraph build_conflict_graph(const SubcarrierGraphs& graphs);

// Edge-list text: one "k i j" triple per line.
std::string subcarrier_graphs_to_edge_list(const SubcarrierGraphs& graphs);
SubcarrierGraphs subcarrier_graphs_from_edge_list(const std::string& text, int n,
                                                  int k);

}  // namespace airgnn::topology
