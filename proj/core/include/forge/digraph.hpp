#pragma once

#include <string>
#include <utility>
#include <vector>

#include "forge/errors.hpp"

namespace forge {

// Simple oriented acyclic digraph (the pattern H). Vertices are 0-based.
// Construction validates: no self-loops, no duplicate or antiparallel
// edges, no directed cycle. The stored topological order breaks ties by
// smallest vertex index, so it is canonical for a given edge list.
class AcyclicDigraph {
 public:
  AcyclicDigraph() = default;
  AcyclicDigraph(int n, std::vector<std::pair<int, int>> edge_list);

  int order() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& out(int v) const { return out_[v]; }
  const std::vector<int>& in(int v) const { return in_[v]; }
  bool has_edge(int u, int v) const;  // true iff u -> v
  bool adjacent(int u, int v) const { return has_edge(u, v) || has_edge(v, u); }

  // Position of v in the canonical topological order (edges point to
  // larger positions).
  int topo_pos(int v) const { return topo_pos_[v]; }
  // Vertices listed in topological order.
  const std::vector<int>& topo_order() const { return topo_seq_; }

  int degree(int v) const {
    return static_cast<int>(out_[v].size() + in_[v].size());
  }
  int max_degree() const { return max_degree_; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<int> topo_pos_, topo_seq_;
  int max_degree_ = 0;
};

// Undirected graph whose vertex set carries the natural order of [n].
struct OrderedGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted, unique

  OrderedGraph() = default;
  OrderedGraph(int n_, std::vector<std::pair<int, int>> edge_list);
  bool has_edge(int u, int v) const;
  bool is_matching() const;
};

// Ordered list of disjoint vertex sets covering V(H); cross edges must go
// from lower-indexed to higher-indexed parts.
struct DirectedPartition {
  std::vector<std::vector<int>> parts;

  int num_parts() const { return static_cast<int>(parts.size()); }
};

bool is_directed_partition(const AcyclicDigraph& h, const DirectedPartition& p);
bool parts_all_independent(const AcyclicDigraph& h, const DirectedPartition& p);
bool parts_all_one_degenerate(const AcyclicDigraph& h,
                              const DirectedPartition& p);

// Vertex count of the longest directed path.
int height(const AcyclicDigraph& h);

// level[v] = number of vertices on the longest directed path ending at v.
std::vector<int> path_levels(const AcyclicDigraph& h);

// Partition into height(h) independent sets by path level; part i holds the
// vertices whose longest incoming path has i+1 vertices.
DirectedPartition height_partition(const AcyclicDigraph& h);

// Degeneracy d of the underlying undirected graph together with an ordering
// in which every vertex has at most d earlier neighbors. Peeling breaks
// minimum-degree ties by smallest index.
std::pair<int, std::vector<int>> degeneracy_order(const AcyclicDigraph& h);

int degeneracy(const AcyclicDigraph& h);

// True iff every edge spans exactly one level of the path-level function,
// i.e. all directed u-v paths have equal length.
bool is_graded(const AcyclicDigraph& h);

// counts[t] = number of edges whose topological length lies in [2^t, 2^{t+1}).
std::vector<long long> edge_scale_histogram(const AcyclicDigraph& h);

// Weakly connected components of the subgraph induced by `subset`
// (or of all of h when subset is empty and whole=true).
std::vector<std::vector<int>> weak_components(const AcyclicDigraph& h,
                                              const std::vector<int>& subset);
std::vector<std::vector<int>> weak_components(const AcyclicDigraph& h);

// True iff the underlying undirected subgraph induced by `subset` is a forest.
bool induces_forest(const AcyclicDigraph& h, const std::vector<int>& subset);

// Induced subgraph on `vertices`, reindexed by position in `vertices`.
AcyclicDigraph induced_subgraph(const AcyclicDigraph& h,
                                const std::vector<int>& vertices);

// Standard generators.
AcyclicDigraph dipath(int n);                 // P_n
AcyclicDigraph path_power(int n, int ell);    // P_n^ell
AcyclicDigraph transitive_digraph(int n);     // TT_n as a pattern
AcyclicDigraph reversed(const AcyclicDigraph& h);

}  // namespace forge
