#pragma once

#include <variant>
#include <vector>

#include "forge/tournament.hpp"

namespace forge {

// Pair of host vertex sets, normalized so the dense direction is w1 -> w2.
// forward_count counts ordered pairs (a,b), a in w1, b in w2, a != b, with
// the edge oriented a -> b; pairs sharing a vertex contribute nothing.
struct DensePair {
  std::vector<int> w1, w2;
  long long forward_count = 0;
  double delta_achieved = 0.0;
  // True when the popular unembedded neighbor was an out-neighbor of the
  // failed vertex (the extraction branch that required normalization).
  bool swapped_branch = false;
};

long long count_forward(const Tournament& t, const std::vector<int>& w1,
                        const std::vector<int>& w2);
double validate_dense_pair(const Tournament& t, const std::vector<int>& w1,
                           const std::vector<int>& w2);

// State of the greedy embedding at the first step with no valid choice.
// `candidates[v]` is U_v^{(t-1)} for every pattern vertex (embedded
// vertices hold their singleton image). The pigeonhole fields are filled
// whenever U_t^{(t-1)} is nonempty: failure means no candidate survived
// the look-ahead test, not emptiness alone.
struct FailureWitness {
  int failed_step = 0;   // 1-based position t in the embedding order
  int failed_vertex = -1;
  std::vector<int> order;  // the embedding order used
  std::vector<std::vector<int>> candidates;
  std::vector<int> w0;          // U_t^{(t-1)}
  std::vector<int> assigned_j;  // per w0 member: its violating neighbor
                                // (smallest embedding-order position)
  int popular = -1;             // most frequent assigned vertex
};

using EmbedOutcome = std::variant<Embedding, FailureWitness>;
using DenseOutcome = std::variant<Embedding, DensePair>;

// One pass of the candidate-set greedy embedding. At step t the first
// vertex of U_t that keeps at least c*|U_j| candidates in every unembedded
// neighbor set U_j is chosen; candidate sets then shrink by neighborhood
// intersection. Maintains |U_j| >= c^{|embedded nbrs|} N - t throughout.
EmbedOutcome greedy_embed(const AcyclicDigraph& h, const Tournament& t,
                          const std::vector<int>& order, double c);

// Greedy embedding in the degenerate order; on failure the pigeonhole
// extraction yields a (1-c)-dense pair of size >= c^d N / (2*maxdeg).
// Requires N >= 2*maxdeg*c^{-d}*n.
DenseOutcome find_dense_pair(const AcyclicDigraph& h, const Tournament& t,
                             double c);

// Oriented-forest specialization: given per-vertex candidate sets of size
// >= 3*n*maxdeg, returns an embedding with phi(v) in sets[v], or a 1-dense
// pair (all edges one way) of size >= M/(4*m*maxdeg), where M is the
// smallest candidate set and m the largest weak component of h.
DenseOutcome forest_dense_pair(const AcyclicDigraph& h, const Tournament& t,
                               const std::vector<std::vector<int>>& sets);

// Two-phase refinement embedding. Requires |sets[v]| >= 4n and, for every
// edge (i,j), (sets[i], sets[j]) at least (1 - 1/(8*maxdeg^2))-dense; under
// those preconditions it always returns an embedding.
Embedding inner_stage(const AcyclicDigraph& h, const Tournament& t,
                      const std::vector<std::vector<int>>& sets);

}  // namespace forge
