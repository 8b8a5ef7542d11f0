#include "forge/digraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <unordered_set>

namespace forge {

namespace {

// Walks out-edges inside `remaining` until a vertex repeats, then trims the
// prefix so the returned list is exactly one directed cycle.
std::vector<int> find_cycle(int n, const std::vector<std::vector<int>>& out,
                            const std::vector<char>& remaining) {
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (remaining[v]) {
      start = v;
      break;
    }
  std::vector<int> path;
  std::vector<int> seen_at(n, -1);
  int cur = start;
  while (seen_at[cur] < 0) {
    seen_at[cur] = static_cast<int>(path.size());
    path.push_back(cur);
    for (int w : out[cur])
      if (remaining[w]) {
        cur = w;
        break;
      }
  }
  return {path.begin() + seen_at[cur], path.end()};
}

}  // namespace

AcyclicDigraph::AcyclicDigraph(int n, std::vector<std::pair<int, int>> edge_list)
    : n_(n) {
  if (n < 0) throw Error("vertex count must be nonnegative");
  out_.assign(n, {});
  in_.assign(n, {});

  std::unordered_set<long long> seen;
  seen.reserve(edge_list.size() * 2);
  for (auto [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error("edge endpoint out of range");
    if (u == v)
      throw GraphError(GraphError::Kind::SelfLoop,
                       "self-loop at vertex " + std::to_string(u));
    const long long key = static_cast<long long>(u) * n + v;
    const long long rkey = static_cast<long long>(v) * n + u;
    if (seen.count(key) || seen.count(rkey))
      throw GraphError(GraphError::Kind::DuplicateOrAntiparallelEdge,
                       "duplicate or antiparallel edge " + std::to_string(u) +
                           " -> " + std::to_string(v));
    seen.insert(key);
    out_[u].push_back(v);
    in_[v].push_back(u);
  }

  // Kahn's algorithm; the min-heap makes the order canonical (smallest
  // index first among ready vertices).
  std::vector<int> indeg(n);
  for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(in_[v].size());
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);

  topo_seq_.reserve(n);
  topo_pos_.assign(n, -1);
  while (!ready.empty()) {
    const int v = ready.top();
    ready.pop();
    topo_pos_[v] = static_cast<int>(topo_seq_.size());
    topo_seq_.push_back(v);
    for (int w : out_[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (static_cast<int>(topo_seq_.size()) != n) {
    std::vector<char> remaining(n, 0);
    for (int v = 0; v < n; ++v) remaining[v] = topo_pos_[v] < 0;
    throw GraphError(GraphError::Kind::CycleFound, "directed cycle found",
                     find_cycle(n, out_, remaining));
  }

  for (int v = 0; v < n; ++v) {
    std::sort(out_[v].begin(), out_[v].end());
    std::sort(in_[v].begin(), in_[v].end());
    max_degree_ = std::max(max_degree_, degree(v));
  }
  edges_ = std::move(edge_list);
  std::sort(edges_.begin(), edges_.end());
}

bool AcyclicDigraph::has_edge(int u, int v) const {
  const auto& nb = out_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

OrderedGraph::OrderedGraph(int n_in, std::vector<std::pair<int, int>> edge_list)
    : n(n_in) {
  for (auto& [u, v] : edge_list) {
    if (u == v) throw Error("ordered graph: self-loop");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw Error("ordered graph: endpoint out of range");
  }
  std::sort(edge_list.begin(), edge_list.end());
  if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
    throw Error("ordered graph: duplicate edge");
  edges = std::move(edge_list);
}

bool OrderedGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

bool OrderedGraph::is_matching() const {
  std::vector<int> deg(n, 0);
  for (auto [u, v] : edges)
    if (++deg[u] > 1 || ++deg[v] > 1) return false;
  return true;
}

bool is_directed_partition(const AcyclicDigraph& h, const DirectedPartition& p) {
  std::vector<int> part_of(h.order(), -1);
  int covered = 0;
  for (int i = 0; i < p.num_parts(); ++i)
    for (int v : p.parts[i]) {
      if (v < 0 || v >= h.order() || part_of[v] != -1) return false;
      part_of[v] = i;
      ++covered;
    }
  if (covered != h.order()) return false;
  for (auto [u, v] : h.edges())
    if (part_of[u] > part_of[v]) return false;
  return true;
}

bool parts_all_independent(const AcyclicDigraph& h, const DirectedPartition& p) {
  std::vector<int> part_of(h.order(), -1);
  for (int i = 0; i < p.num_parts(); ++i)
    for (int v : p.parts[i]) part_of[v] = i;
  for (auto [u, v] : h.edges())
    if (part_of[u] == part_of[v]) return false;
  return true;
}

bool parts_all_one_degenerate(const AcyclicDigraph& h,
                              const DirectedPartition& p) {
  for (const auto& part : p.parts)
    if (!induces_forest(h, part)) return false;
  return true;
}

std::vector<int> path_levels(const AcyclicDigraph& h) {
  std::vector<int> level(h.order(), 1);
  for (int v : h.topo_order())
    for (int u : h.in(v)) level[v] = std::max(level[v], level[u] + 1);
  return level;
}

int height(const AcyclicDigraph& h) {
  if (h.order() == 0) return 0;
  const auto lv = path_levels(h);
  return *std::max_element(lv.begin(), lv.end());
}

DirectedPartition height_partition(const AcyclicDigraph& h) {
  DirectedPartition p;
  p.parts.assign(height(h), {});
  const auto lv = path_levels(h);
  for (int v = 0; v < h.order(); ++v) p.parts[lv[v] - 1].push_back(v);
  return p;
}

std::pair<int, std::vector<int>> degeneracy_order(const AcyclicDigraph& h) {
  const int n = h.order();
  std::vector<int> deg(n), removal;
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = h.degree(v);
  int d = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
    d = std::max(d, deg[best]);
    removed[best] = 1;
    removal.push_back(best);
    for (int w : h.out(best))
      if (!removed[w]) --deg[w];
    for (int w : h.in(best))
      if (!removed[w]) --deg[w];
  }
  std::reverse(removal.begin(), removal.end());
  return {d, removal};
}

int degeneracy(const AcyclicDigraph& h) { return degeneracy_order(h).first; }

bool is_graded(const AcyclicDigraph& h) {
  const auto lv = path_levels(h);
  for (auto [u, v] : h.edges())
    if (lv[v] != lv[u] + 1) return false;
  return true;
}

std::vector<long long> edge_scale_histogram(const AcyclicDigraph& h) {
  int scales = 1;
  while ((1 << scales) < h.order()) ++scales;  // t = 0 .. ceil(log2 n)
  std::vector<long long> counts(scales + 1, 0);
  for (auto [u, v] : h.edges()) {
    const int len = h.topo_pos(v) - h.topo_pos(u);
    int t = 0;
    while ((2 << t) <= len) ++t;
    ++counts[t];
  }
  return counts;
}

std::vector<std::vector<int>> weak_components(const AcyclicDigraph& h,
                                              const std::vector<int>& subset) {
  std::vector<char> inside(h.order(), 0), visited(h.order(), 0);
  for (int v : subset) inside[v] = 1;
  std::vector<std::vector<int>> comps;
  for (int s : subset) {
    if (visited[s]) continue;
    std::vector<int> comp, stack{s};
    visited[s] = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      auto push = [&](int w) {
        if (inside[w] && !visited[w]) {
          visited[w] = 1;
          stack.push_back(w);
        }
      };
      for (int w : h.out(v)) push(w);
      for (int w : h.in(v)) push(w);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<std::vector<int>> weak_components(const AcyclicDigraph& h) {
  std::vector<int> all(h.order());
  std::iota(all.begin(), all.end(), 0);
  return weak_components(h, all);
}

bool induces_forest(const AcyclicDigraph& h, const std::vector<int>& subset) {
  std::vector<int> parent(h.order(), -2);
  for (int v : subset) parent[v] = -1;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] >= 0) {
      if (parent[parent[v]] >= 0) parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (int v : subset)
    for (int w : h.out(v)) {
      if (parent[w] == -2) continue;  // endpoint outside subset
      const int a = find(v), b = find(w);
      if (a == b) return false;
      parent[a] = b;
    }
  return true;
}

AcyclicDigraph induced_subgraph(const AcyclicDigraph& h,
                                const std::vector<int>& vertices) {
  std::vector<int> index(h.order(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    index[vertices[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : h.edges())
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  return AcyclicDigraph(static_cast<int>(vertices.size()), std::move(edges));
}

AcyclicDigraph dipath(int n) { return path_power(n, 1); }

AcyclicDigraph path_power(int n, int ell) {
  if (n < 1 || ell < 1) throw Error("path_power requires n >= 1, ell >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= std::min(n - 1, i + ell); ++j)
      edges.emplace_back(i, j);
  return AcyclicDigraph(n, std::move(edges));
}

AcyclicDigraph transitive_digraph(int n) {
  return n == 1 ? AcyclicDigraph(1, {}) : path_power(n, n - 1);
}

AcyclicDigraph reversed(const AcyclicDigraph& h) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(h.edges().size());
  for (auto [u, v] : h.edges()) edges.emplace_back(v, u);
  return AcyclicDigraph(h.order(), std::move(edges));
}

}  // namespace forge
