#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "forge/rng.hpp"
#include "forge/tournament.hpp"

namespace forge {

// Ordered vertex list realizing a transitive subtournament.
struct TTWitness {
  int size = 0;
  std::vector<int> vertices;
};

bool validate_tt_witness(const Tournament& t, const TTWitness& w);

// Lexicographic product: (g1,h1) -> (g2,h2) iff g1 -> g2 in g, or g1 = g2
// and h1 -> h2 in h. Vertex (g,h) has index g*|h| + h.
Tournament lex_product(const Tournament& g, const Tournament& h);
Tournament lex_power(const Tournament& r, int m);

// Projection of a lex_power vertex onto its first (most significant)
// coordinate: index / r^{m-1}.
int lex_power_first_coordinate(int vertex, int r, int m);

// Exact maximum transitive subtournament. Subset-memoized for n <= 24,
// branch-and-bound with a greedy incumbent above; n <= 64 total.
TTWitness max_transitive_subtournament(const Tournament& t);

// Quadratic-residue tournament; q must be prime with q = 3 (mod 4).
Tournament paley_tournament(int q);

// One independent fair bit per pair, in lexicographic pair order.
Tournament random_tournament(int n, Rng& rng);
Tournament random_tournament(int n, std::uint64_t seed);

struct TTFreeSearch {
  std::optional<Tournament> found;
  int trial = -1;  // index of the first successful trial
  int trials_run = 0;
};

// Samples uniform random tournaments on r vertices until one has no
// transitive subtournament of size t. Trial i uses the substream
// fork(seed, i), so the result is deterministic for any thread count.
TTFreeSearch find_tt_free(int r, int t, int trials, std::uint64_t seed,
                          int threads = 1);

// Vertex ordering maximizing forward edges; exact (subset DP) for n <= 20,
// local search with adjacent swaps and single-vertex reinsertions above.
// The returned ordering always has v_i -> v_{i+1}.
std::vector<int> median_ordering(const Tournament& t);

long long forward_edges(const Tournament& t, const std::vector<int>& order);

// Exact backtracking search for a copy of h in t. Vertices are chosen
// fewest-candidates-first among pattern vertices with an embedded neighbor;
// `seed`, when given, shuffles candidate order (used to sample distinct
// embeddings), otherwise candidates are tried in ascending order.
std::optional<Embedding> contains_copy(const Tournament& t,
                                       const AcyclicDigraph& h,
                                       std::optional<std::uint64_t> seed = {});

}  // namespace forge
