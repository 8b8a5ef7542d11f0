#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "forge/digraph.hpp"
#include "forge/tournament.hpp"

namespace forge {

// k-coloring of the complete graph on [n] (vertex order is that of [n]).
struct EdgeColoring {
  int n = 0, k = 1;
  std::vector<int> color;  // colors 1..k, upper-triangle row-major

  EdgeColoring() = default;
  EdgeColoring(int n_, int k_)
      : n(n_), k(k_), color(static_cast<std::size_t>(n_) * (n_ - 1) / 2, 1) {}

  long long pair_index(int i, int j) const {
    return static_cast<long long>(i) * n - static_cast<long long>(i) * (i + 1) / 2 +
           (j - i - 1);
  }
  int at(int u, int v) const {
    if (u > v) std::swap(u, v);
    return color[static_cast<std::size_t>(pair_index(u, v))];
  }
  void set(int u, int v, int c) {
    if (u > v) std::swap(u, v);
    color[static_cast<std::size_t>(pair_index(u, v))] = c;
  }
};

struct RamseyResult {
  int value = -1;       // minimal N, or -1 when inconclusive
  int max_n_checked = 0;
  bool exhaustive = false;
  std::optional<Tournament> witness;  // extremal avoider on value-1 vertices
  std::optional<ColoredTournament> colored_witness;
  std::optional<EdgeColoring> coloring_witness;
};

// ---- Isomorphism machinery ----------------------------------------------

// Minimal orientation bitstring over all vertex orderings, packed
// column-major (pairs (i,j) grouped by j) with earlier bits more
// significant. Tournaments are isomorphic iff their keys match. n <= 10.
std::uint64_t canonical_key(const Tournament& t);

// One representative per isomorphism class; cached. n <= 9.
const std::vector<Tournament>& tournament_classes(int n);

// ---- Exact Ramsey computation --------------------------------------------

// Exhaustive r1 by isomorphism-reduced host scans. For N up to 9 the class
// list is scanned directly; for N = 10 all one-vertex extensions of the
// 9-vertex classes are scanned (a covering set of the 10-vertex classes).
// max_n <= 10.
RamseyResult oriented_ramsey_1(const AcyclicDigraph& h, int max_n,
                               int threads = 1);

// Plain enumeration over all 2^C(N,2) hosts (cross-check oracle; N <= 6).
std::optional<Tournament> find_avoider_plain(const AcyclicDigraph& h, int n);

// Avoider on n vertices from the class scan, or nullopt if none exists.
std::optional<Tournament> find_avoider_exhaustive(const AcyclicDigraph& h,
                                                  int n, int threads = 1);

// Simulated annealing over edge flips minimizing the (capped) copy count.
// Upper-bound evidence only; labeled non-exhaustive.
std::optional<Tournament> find_avoider_search(const AcyclicDigraph& h, int n,
                                              std::uint64_t seed,
                                              long long iterations = 200000);

// Smallest N <= max_n such that every k-colored tournament on N vertices
// has a monochromatic copy of h. Exhaustive mixed-radix enumeration.
RamseyResult oriented_ramsey_k(const AcyclicDigraph& h, int k, int max_n,
                               int threads = 1);

// Ordered Ramsey number of (g[0], ..., g[k-1]): every k-coloring of the
// complete graph on [N] must contain an ordered copy of g[i] in color i.
RamseyResult ordered_ramsey(const std::vector<OrderedGraph>& g, int max_n);

// ---- Containment / counting ----------------------------------------------

bool colored_contains(const ColoredTournament& ct, int color,
                      const AcyclicDigraph& h);
long long count_monochromatic_copies(const ColoredTournament& ct, int color,
                                     const AcyclicDigraph& h);
// Copies whose Hamiltonian-order images are increasing (or decreasing) in
// the vertex labeling of ct.
long long count_increasing_copies(const ColoredTournament& ct, int color,
                                  const AcyclicDigraph& h);
long long count_decreasing_copies(const ColoredTournament& ct, int color,
                                  const AcyclicDigraph& h);

bool contains_ordered_copy(const EdgeColoring& chi, int color,
                           const OrderedGraph& g);
long long count_ordered_copies(const EdgeColoring& chi, int color,
                               const OrderedGraph& g);

// Copy count in a plain tournament, stopping at `cap`.
long long count_copies(const Tournament& t, const AcyclicDigraph& h,
                       long long cap);

// ---- Ordered <-> oriented reductions --------------------------------------

// Hamiltonian order of h (unique when it exists): consecutive vertices
// adjacent along the topological order.
std::optional<std::vector<int>> hamiltonian_order(const AcyclicDigraph& h);

OrderedGraph h_plus(const AcyclicDigraph& h);   // i~j iff v_i -> v_j
OrderedGraph h_minus(const AcyclicDigraph& h);  // h_plus with order reversed

// Path 1->2->...->n plus the matching edges, deduplicated; max degree <= 3.
AcyclicDigraph path_matching_digraph(const OrderedGraph& matching);

// Forward transitive tournament on [N] carrying chi's colors.
ColoredTournament lower_bound_coloring_from_ordered(const EdgeColoring& chi);

// chi'(i,j) = chi(i,j) when i<j and i->j in ct, else chi(i,j)+k.
EdgeColoring oriented_to_ordered_coloring(const ColoredTournament& ct);

// Keep one color, merge all others into a single super-color (2-coloring:
// kept -> 1, rest -> 2).
EdgeColoring merge_colors(const EdgeColoring& chi, int keep);

OrderedGraph random_matching(int n, std::uint64_t seed);

// Digraph isomorphism by brute force over vertex permutations (tiny n).
bool digraph_isomorphic(const AcyclicDigraph& a, const AcyclicDigraph& b);

}  // namespace forge
