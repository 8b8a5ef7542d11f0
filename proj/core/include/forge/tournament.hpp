#pragma once

#include <cstdint>
#include <vector>

#include "forge/digraph.hpp"
#include "forge/errors.hpp"

namespace forge {

// Complete orientation on n vertices, bit-packed over the upper triangle:
// bit (i,j) with i<j is 1 iff i -> j.
class Tournament {
 public:
  Tournament() = default;
  explicit Tournament(int n) : n_(n), bits_((num_pairs(n) + 63) / 64, 0) {}

  int order() const { return n_; }
  long long num_pairs() const { return num_pairs(n_); }
  static long long num_pairs(int n) {
    return static_cast<long long>(n) * (n - 1) / 2;
  }

  // i < j required.
  bool forward(int i, int j) const {
    const long long p = pair_index(i, j);
    return (bits_[p >> 6] >> (p & 63)) & 1;
  }
  void set_forward(int i, int j, bool f) {
    const long long p = pair_index(i, j);
    const std::uint64_t mask = std::uint64_t{1} << (p & 63);
    if (f)
      bits_[p >> 6] |= mask;
    else
      bits_[p >> 6] &= ~mask;
  }

  // u != v required; true iff u -> v.
  bool beats(int u, int v) const {
    return u < v ? forward(u, v) : !forward(v, u);
  }

  int out_degree(int v) const;
  std::vector<int> out_neighbors(int v) const;
  std::vector<int> in_neighbors(int v) const;

  // Linear index of the unordered pair {i,j}, i<j, in row-major order.
  long long pair_index(int i, int j) const {
    return static_cast<long long>(i) * n_ - static_cast<long long>(i) * (i + 1) / 2 +
           (j - i - 1);
  }

  static Tournament transitive(int n);

  bool operator==(const Tournament& o) const {
    return n_ == o.n_ && bits_ == o.bits_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Tournament together with a k-coloring of its pairs; colors are 1..k.
class ColoredTournament {
 public:
  ColoredTournament() = default;
  ColoredTournament(Tournament base, int k)
      : base_(std::move(base)),
        k_(k),
        color_(static_cast<std::size_t>(base_.num_pairs()), 1) {}

  const Tournament& base() const { return base_; }
  Tournament& base() { return base_; }
  int colors() const { return k_; }

  int color(int u, int v) const {  // unordered
    if (u > v) std::swap(u, v);
    return color_[static_cast<std::size_t>(base_.pair_index(u, v))];
  }
  void set_color(int u, int v, int c) {
    if (u > v) std::swap(u, v);
    color_[static_cast<std::size_t>(base_.pair_index(u, v))] = c;
  }

 private:
  Tournament base_;
  int k_ = 0;
  std::vector<int> color_;
};

// Injective map V(H) -> V(T) preserving edge orientations.
struct Embedding {
  std::vector<int> map;  // indexed by pattern vertex
};

// Re-checks injectivity and orientation preservation edge by edge.
bool validate_embedding(const AcyclicDigraph& h, const Tournament& t,
                        const Embedding& phi);

// Subtournament induced by `vertices`, reindexed by list position.
Tournament induced_tournament(const Tournament& t,
                              const std::vector<int>& vertices);

}  // namespace forge
