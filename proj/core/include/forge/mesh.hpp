#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forge/digraph.hpp"

namespace forge {

// Nondecreasing positive function on the positive integers, either a
// constant, the closed form 10 s^2 t^{3/2} log t / log^2 s (constant below
// s = 4; logs base 2), or an explicit table extended by its last value.
class MonotoneFunction {
 public:
  static MonotoneFunction constant(double c);
  static MonotoneFunction closed_form(double t);  // requires t >= 3
  static MonotoneFunction table(std::vector<double> values);  // 1-based

  double operator()(long long s) const;
  const std::string& describe() const { return desc_; }

  // Parses "const:<c>" | "paper:<t>" | "table:v1,v2,..." (CLI spelling).
  static MonotoneFunction parse(const std::string& spec);

 private:
  enum class Kind { Constant, ClosedForm, Table };
  Kind kind_ = Kind::Constant;
  double c_ = 1.0;  // constant value, or the t parameter
  std::vector<double> table_;
  std::string desc_;
};

// Outcome of exhaustive interval-pair verification. `pass` means no
// violating pair exists among all interval pairs fully inside [n].
struct MeshCertificate {
  int n = 0;
  std::string f_desc;
  int max_degree = 0;
  double truncated_s = 0.0;     // sum of f(2^{m+2}) 4^{-m} over 2^{m+2} <= 4n
  bool degree_bound_ok = true;  // max_degree <= 2*truncated_s + 17
  bool pass = false;
  long long pairs_checked = 0;
  // First violating pair (a1,b1],(a2,b2] in 1-based inclusive-right form.
  struct IntervalPair {
    int a1, b1, a2, b2;
  };
  std::optional<IntervalPair> witness;
};

// Greedy construction: for each dyadic scale m, every pair of in-range
// dyadic intervals (i,j) with 1 <= j-i <= f(2^{m+2}) 2^{-m} + 4 receives an
// edge between their currently lowest-degree vertices unless one exists.
AcyclicDigraph build_interval_mesh(const MonotoneFunction& f, int n);

// Exhaustive check of the mesh property for every pair of disjoint
// intervals whose gap is at most f of the shorter length. O(1) per pair via
// a 2-D edge-count prefix sum. All edges of h must point forward.
// `threads` >= 1 splits the interval-pair space; the reported witness is
// the lexicographically first one regardless of thread count.
MeshCertificate verify_interval_mesh(const AcyclicDigraph& h,
                                     const MonotoneFunction& f,
                                     int threads = 1);

// Truncated degree-bound sum: terms with 2^{m+2} > 4n are dropped.
double truncated_degree_sum(const MonotoneFunction& f, int n);

// Induced subgraph on the 0-based window [lo, hi), reindexed to 0..hi-lo-1.
AcyclicDigraph restrict_window(const AcyclicDigraph& h, int lo, int hi);

}  // namespace forge
