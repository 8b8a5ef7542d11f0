#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forge/mesh.hpp"
#include "forge/tournament.hpp"

namespace forge {

// Run-length encoded vertex sequence in a tournament: runs (v_i, a_i) with
// 1 <= a_i <= s, consecutive vertices distinct, and every back-edge pair
// (i < j, v_i <- v_j) separated by total run weight exceeding
// f(min(a_i, a_j)).
struct Walk {
  std::vector<std::pair<int, int>> runs;  // (tournament vertex, run length)
  long long length() const {
    long long sum = 0;
    for (auto [v, a] : runs) sum += a;
    return sum;
  }
};

struct WalkViolation {
  enum class Kind { RunOutOfRange, ConsecutiveEqual, BackEdgeTooClose };
  Kind kind;
  int i = -1, j = -1;  // 1-based run indices involved
  std::string describe() const;
};

// Exhaustive validity check; reports the first violation in lexicographic
// (i, j) order.
std::optional<WalkViolation> walk_violation(const Tournament& r,
                                            const MonotoneFunction& f, int s,
                                            const Walk& walk);
bool is_valid_walk(const Tournament& r, const MonotoneFunction& f, int s,
                   const Walk& walk);

// Projects an embedding of h into lex_power(r, m) onto the first
// coordinate, in h's vertex order 0..n-1, and run-length encodes it.
Walk extract_walk(const Embedding& phi, int n, int r_order, int m);

struct GrowthEstimate {
  int s = 0;
  long long best_length = 0;
  bool exact = false;  // true iff the search space was exhausted
  Walk best;
  long long nodes_visited = 0;
};

// Depth-first search over walk extensions ordered by (vertex index, run
// length descending); a violated back-edge condition prunes the subtree.
// `budget` bounds visited nodes; exactness requires completion.
GrowthEstimate longest_walk(const Tournament& r, const MonotoneFunction& f,
                            int s, long long budget = 1000000);

struct ShortnessLine {
  int s;
  long long best_length;
  bool exact;
  bool within_2st;       // L <= 2*s*t
  bool within_f;         // L <= f(s)
  bool hypothesis_hold;  // f(s) > 6*s*t^2 (Lemma-side requirement)
};

struct ShortnessReport {
  double t = 0;
  bool t_in_lemma_range = false;  // the asymptotic analysis needs t >= 1e6
  std::vector<ShortnessLine> lines;
};

// Purely empirical probe of the shortness inequalities for each s in
// [s_lo, s_hi]; never claims the asymptotic lemma.
ShortnessReport shortness_probe(const Tournament& r, const MonotoneFunction& f,
                                int s_lo, int s_hi, double t,
                                long long budget = 1000000);

}  // namespace forge
