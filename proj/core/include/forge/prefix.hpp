#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "forge/embed.hpp"

namespace forge {

// Labeling of V(H) by binary codewords. The code is the image of the
// labeling unless `declared_code` pins it explicitly (then unused declared
// codewords are a surjectivity error).
struct PrefixLabeling {
  std::vector<std::string> label;  // per vertex
  std::vector<std::string> declared_code;
};

struct LabelingError : Error {
  enum class Kind { NotAPrefixCode, NotSurjective, OrderViolation };
  Kind kind;
  LabelingError(Kind k, const std::string& msg) : Error(msg), kind(k) {}
};

struct LabelingStats {
  std::vector<std::string> code;  // sorted codewords
  int depth = 0;
  int max_degree = 0;     // of the adjacency-under-rho graph on the code
  int max_component = 0;  // largest weak component inside any preimage
  double complexity = 1.0;  // max over codewords of the split-cost product
  bool is_coloring = false;
  bool is_forest_labeling = false;
};

// Validates the labeling (prefix-freeness, surjectivity, lexicographic
// order consistency along edges) and computes the derived parameters.
LabelingStats labeling_stats(const AcyclicDigraph& h, const PrefixLabeling& rho);

// Binary-representation coloring of the height partition. Depth is
// ceil(log2 height); the code is trimmed to the image.
PrefixLabeling height_prefix_coloring(const AcyclicDigraph& h);

// Same construction, but only for graded patterns; its complexity is
// always 1 (asserted).
PrefixLabeling graded_prefix_coloring(const AcyclicDigraph& h);

// Binary-representation labeling of a directed partition into forests.
PrefixLabeling forest_prefix_labeling(const AcyclicDigraph& h,
                                      const DirectedPartition& partition);

// Codeword-indexed vertex subsets of the host with pairwise density
// guarantees between adjacent codewords.
struct Skeleton {
  std::map<std::string, std::vector<int>> sets;
  double delta = 0.0;
  long long size() const;  // min |V_x|
};

// Exact pairwise re-validation: every adjacent-under-rho pair x < y must
// have density >= sk.delta; for delta = 1 the reverse edge count must be 0.
bool validate_skeleton(const AcyclicDigraph& h, const Tournament& t,
                       const PrefixLabeling& rho, const Skeleton& sk);

using SkeletonOutcome = std::variant<Embedding, Skeleton>;

// Depth-first splitting along the code trie; every split comes from the
// dense-pair dichotomy, so a copy of h found on the way is returned
// directly. Requires N >= (4^{d+1} maxdeg / c^d)^depth * comp^d * n unless
// `force` is set (then inner precondition errors name the failing phase).
SkeletonOutcome build_skeleton(const AcyclicDigraph& h, const Tournament& t,
                               const PrefixLabeling& rho, double c,
                               bool force = false);

// The 1-dense variant: rho1 must be a forest prefix labeling; each split
// embeds the rho1-parts sequentially inside the current set and converts a
// failure into a pair with all edges oriented one way. The resulting
// skeleton has delta = 1 and pairwise-disjoint sets.
SkeletonOutcome biclique_skeleton(const AcyclicDigraph& h, const Tournament& t,
                                  const PrefixLabeling& rho1,
                                  const PrefixLabeling& rho2,
                                  bool force = false);

// Pipeline: skeleton with c = 1/(8 maxdeg^2) over a prefix coloring (the
// height coloring by default), then the inner-stage refinement embedding.
Embedding embed_via_coloring(const AcyclicDigraph& h, const Tournament& t,
                             std::optional<PrefixLabeling> rho = {},
                             bool force = false);

// Pipeline: 1-dense skeleton over rho2, then each part embedded
// independently inside its set. part_ramsey supplies host-size guarantees
// per part; defaults to 21m/8 - 47/16 for forest parts and exhaustive
// search for parts on at most 6 vertices.
Embedding embed_via_two_labelings(
    const AcyclicDigraph& h, const Tournament& t, const PrefixLabeling& rho1,
    const PrefixLabeling& rho2, bool force = false,
    std::function<long long(const AcyclicDigraph&)> part_ramsey = {});

struct ForestPartitionReport {
  DirectedPartition partition;
  int parts = 0;
  int max_component = 0;
};

// Greedy heuristic: scan the topological order and place each vertex into
// the earliest part that stays 1-degenerate and respects the directed
// partition property.
ForestPartitionReport forest_partition(const AcyclicDigraph& h);

// Host-size requirements of the two pipelines.
double coloring_pipeline_bound(int n, int maxdeg, int depth, double comp);
double two_labeling_gamma(int m1, int a1, int maxdeg, int d, int depth1,
                          double comp1);

}  // namespace forge
