#include "forge/random_models.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <stdexcept>

#include "forge/rng.hpp"

namespace forge {

std::string pairing_count(int n, int d) {
  const long long points = static_cast<long long>(n) * d;
  if (points % 2 != 0) throw Error("pairing model needs n*d even");
  // (nd)! / ((nd/2)! 2^{nd/2}) equals the double factorial (nd-1)!!.
  boost::multiprecision::cpp_int prod = 1;
  for (long long k = 1; k <= points / 2; ++k) prod *= 2 * k - 1;
  return prod.str();
}

PairingOutcome sample_pairing(int n, int d, std::uint64_t seed) {
  const long long points = static_cast<long long>(n) * d;
  if (points % 2 != 0) throw Error("pairing model needs n*d even");
  Rng rng(seed);
  PairingOutcome out;
  out.n = n;
  out.d = d;

  std::vector<int> free_list(points);
  for (long long p = 0; p < points; ++p) free_list[p] = static_cast<int>(p);
  while (!free_list.empty()) {
    const int u = free_list.front();
    free_list.erase(free_list.begin());
    const std::size_t pick = rng.below(free_list.size());
    const int v = free_list[pick];
    free_list.erase(free_list.begin() + static_cast<long long>(pick));
    out.matching.emplace_back(u, v);
    const int cu = u / d, cv = v / d;
    out.multi_edges.emplace_back(std::min(cu, cv), std::max(cu, cv));
  }

  out.simple = true;
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : out.multi_edges) {
    if (a == b || !seen.insert({a, b}).second) {
      out.simple = false;
      break;
    }
  }
  return out;
}

AcyclicDigraph sample_grd_oriented(int n, int d, std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    // Continue the same stream across rejections; the outcome is a
    // deterministic function of the seed.
    PairingOutcome out = sample_pairing(n, d, rng.next());
    if (!out.simple) continue;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(out.multi_edges.size());
    for (auto [a, b] : out.multi_edges) edges.emplace_back(a, b);
    return AcyclicDigraph(n, std::move(edges));
  }
  throw Error("rejection budget exhausted sampling a simple pairing");
}

AcyclicDigraph sample_gnp_oriented(int n, double p, std::uint64_t seed) {
  if (p < 0 || p > 1) throw Error("edge probability must lie in [0,1]");
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.unit() < p) edges.emplace_back(i, j);
  return AcyclicDigraph(n, std::move(edges));
}

std::vector<ComponentInfo> component_analysis(const AcyclicDigraph& h,
                                              const std::vector<int>& subset) {
  std::vector<char> inside(h.order(), 0);
  for (int v : subset) inside[v] = 1;
  std::vector<ComponentInfo> infos;
  for (const auto& comp : weak_components(h, subset)) {
    ComponentInfo info;
    info.vertices = comp;
    for (int v : comp)
      for (int w : h.out(v))
        if (inside[w]) ++info.edge_count;
    info.cycle_count = info.edge_count - static_cast<int>(comp.size()) + 1;
    infos.push_back(std::move(info));
  }
  return infos;
}

ForestPartitionOutcome random_forest_partition(const AcyclicDigraph& h,
                                               int d) {
  if (d < 1) throw Error("degree parameter must be positive");
  for (auto [u, v] : h.edges())
    if (u >= v) throw Error("forest partition expects forward edges");

  const int n = h.order();
  const int buckets = 5 * d;
  ForestPartitionOutcome out;

  std::vector<std::vector<int>> intervals;
  {
    const int base = n / buckets, extra = n % buckets;
    int next = 0;
    for (int b = 0; b < buckets && next < n; ++b) {
      const int len = base + (b < extra ? 1 : 0);
      std::vector<int> iv;
      for (int i = 0; i < len && next < n; ++i) iv.push_back(next++);
      if (!iv.empty()) intervals.push_back(std::move(iv));
    }
  }

  std::vector<char> inside(n, 0);
  for (std::size_t b = 0; b < intervals.size(); ++b) {
    std::fill(inside.begin(), inside.end(), 0);
    for (int v : intervals[b]) inside[v] = 1;

    std::vector<int> moved;
    for (const ComponentInfo& comp : component_analysis(h, intervals[b])) {
      if (comp.cycle_count >= 2) {
        out.success = false;
        out.failure_reason = "interval " + std::to_string(b) +
                             " has a component with " +
                             std::to_string(comp.cycle_count) + " cycles";
        return out;
      }
      if (comp.cycle_count == 0) continue;

      // Peel leaves to expose the unique cycle.
      std::set<int> comp_set(comp.vertices.begin(), comp.vertices.end());
      std::vector<int> deg(n, 0);
      for (int v : comp.vertices) {
        for (int w : h.out(v))
          if (comp_set.count(w)) {
            ++deg[v];
            ++deg[w];
          }
      }
      std::set<int> remaining = comp_set;
      bool peeled = true;
      while (peeled) {
        peeled = false;
        for (auto it = remaining.begin(); it != remaining.end();) {
          if (deg[*it] <= 1) {
            for (int w : h.out(*it))
              if (remaining.count(w)) --deg[w];
            for (int w : h.in(*it))
              if (remaining.count(w)) --deg[w];
            it = remaining.erase(it);
            peeled = true;
          } else {
            ++it;
          }
        }
      }
      const int top_cycle_vertex = *remaining.rbegin();
      // Moving the whole index suffix of the component (from the top cycle
      // vertex up) keeps every cross edge oriented keep -> moved.
      for (int v : comp.vertices)
        if (v >= top_cycle_vertex) moved.push_back(v);
    }

    if (moved.empty()) {
      out.partition.parts.push_back(intervals[b]);
    } else {
      std::sort(moved.begin(), moved.end());
      std::set<int> moved_set(moved.begin(), moved.end());
      std::vector<int> keep;
      for (int v : intervals[b])
        if (!moved_set.count(v)) keep.push_back(v);
      out.partition.parts.push_back(std::move(keep));
      out.partition.parts.push_back(std::move(moved));
    }
  }

  if (!is_directed_partition(h, out.partition) ||
      !parts_all_one_degenerate(h, out.partition))
    throw std::logic_error("forest partition failed its own validation");

  out.success = true;
  out.parts = out.partition.num_parts();
  for (const auto& part : out.partition.parts)
    for (const auto& comp : weak_components(h, part))
      out.max_component =
          std::max(out.max_component, static_cast<int>(comp.size()));
  return out;
}

}  // namespace forge
