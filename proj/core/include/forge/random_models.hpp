#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forge/digraph.hpp"

namespace forge {

// One draw of the pairings (configuration) model: a perfect matching on
// n*d points grouped into n cells of size d, contracted to a multigraph.
struct PairingOutcome {
  int n = 0, d = 0;
  std::vector<std::pair<int, int>> matching;  // point pairs
  std::vector<std::pair<int, int>> multi_edges;  // cell pairs, loops allowed
  bool simple = false;  // no loops, no repeated cell pair
};

// Exact count of perfect matchings on n*d points: (nd)! / ((nd/2)! 2^{nd/2}),
// as a decimal string. n*d must be even.
std::string pairing_count(int n, int d);

// Uniform matching by sequential pairing: repeatedly match the smallest
// free point with a uniformly random other free point.
PairingOutcome sample_pairing(int n, int d, std::uint64_t seed);

// Rejection-samples pairings until simple (budget 1000 attempts), then
// orients every edge from smaller to larger cell index.
AcyclicDigraph sample_grd_oriented(int n, int d, std::uint64_t seed);

// Each pair {i<j} kept independently with probability p, oriented i -> j.
AcyclicDigraph sample_gnp_oriented(int n, double p, std::uint64_t seed);

struct ComponentInfo {
  std::vector<int> vertices;
  int edge_count = 0;
  int cycle_count = 0;  // |E| - |V| + 1
};

// Connected components of the subgraph induced by `subset` in the
// underlying undirected graph of h.
std::vector<ComponentInfo> component_analysis(const AcyclicDigraph& h,
                                              const std::vector<int>& subset);

struct ForestPartitionOutcome {
  bool success = false;
  std::string failure_reason;
  DirectedPartition partition;
  int parts = 0;
  int max_component = 0;
};

// Splits [n] into 5d near-equal intervals; in every interval with unicyclic
// components, the vertices from the top cycle vertex upward move to a
// second part, which breaks each cycle while keeping all cross edges
// forward. A component with two or more independent cycles is a Failure
// outcome, not an error.
ForestPartitionOutcome random_forest_partition(const AcyclicDigraph& h, int d);

}  // namespace forge
