#include "forge/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "forge/rng.hpp"
#include "forge/tourney.hpp"

namespace forge {

// ---- Canonical form -------------------------------------------------------

namespace {

struct CanonSearch {
  int n;
  int total_bits;
  char beats[10][10];
  std::uint64_t best;
  int perm[10];
  bool used[10] = {};

  void rec(int pos, std::uint64_t key, int bits) {
    if (pos == n) {
      best = std::min(best, key);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::uint64_t col = 0;
      for (int i = 0; i < pos; ++i)
        col = (col << 1) | static_cast<std::uint64_t>(beats[perm[i]][v]);
      const std::uint64_t key2 = (key << pos) | col;
      const int bits2 = bits + pos;
      if (key2 > (best >> (total_bits - bits2))) continue;
      perm[pos] = v;
      used[v] = true;
      rec(pos + 1, key2, bits2);
      used[v] = false;
    }
  }
};

}  // namespace

std::uint64_t canonical_key(const Tournament& t) {
  const int n = t.order();
  if (n > 10) throw Error("canonical form limited to 10 vertices");
  if (n <= 1) return 0;
  CanonSearch cs;
  cs.n = n;
  cs.total_bits = n * (n - 1) / 2;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      cs.beats[u][v] = u != v && t.beats(u, v) ? 1 : 0;
  cs.best = cs.total_bits == 64 ? ~std::uint64_t{0}
                                : (std::uint64_t{1} << cs.total_bits) - 1;
  cs.rec(0, 0, 0);
  return cs.best;
}

namespace {

Tournament extend(const Tournament& parent, unsigned ext) {
  const int k = parent.order();
  Tournament child(k + 1);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      child.set_forward(i, j, parent.forward(i, j));
  for (int i = 0; i < k; ++i)
    child.set_forward(i, k, (ext >> i) & 1u);
  return child;
}

}  // namespace

const std::vector<Tournament>& tournament_classes(int n) {
  if (n < 1 || n > 9) throw Error("class lists cached for 1..9 vertices");
  static std::mutex mu;
  static std::map<int, std::vector<Tournament>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.count(n)) return cache.at(n);

  if (!cache.count(1)) cache[1] = {Tournament(1)};
  for (int k = 2; k <= n; ++k) {
    if (cache.count(k)) continue;
    const std::vector<Tournament>& parents = cache.at(k - 1);
    std::vector<Tournament> level;
    std::unordered_set<std::uint64_t> seen;

    const unsigned exts = 1u << (k - 1);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers =
        std::min<unsigned>(hw, k >= 8 ? 8 : 1);  // parallelize big levels only
    if (workers <= 1) {
      for (const Tournament& p : parents)
        for (unsigned e = 0; e < exts; ++e) {
          Tournament child = extend(p, e);
          if (seen.insert(canonical_key(child)).second)
            level.push_back(std::move(child));
        }
    } else {
      // Each worker canonicalizes a slice of parents; the merge walks
      // slices in parent order, so representatives are deterministic.
      std::vector<std::future<std::vector<std::pair<std::uint64_t, Tournament>>>>
          futs;
      const std::size_t chunk = (parents.size() + workers - 1) / workers;
      for (std::size_t lo = 0; lo < parents.size(); lo += chunk) {
        const std::size_t hi = std::min(parents.size(), lo + chunk);
        futs.push_back(std::async(std::launch::async, [&, lo, hi] {
          std::vector<std::pair<std::uint64_t, Tournament>> out;
          for (std::size_t pi = lo; pi < hi; ++pi)
            for (unsigned e = 0; e < exts; ++e) {
              Tournament child = extend(parents[pi], e);
              out.emplace_back(canonical_key(child), std::move(child));
            }
          return out;
        }));
      }
      for (auto& fu : futs)
        for (auto& [key, child] : fu.get())
          if (seen.insert(key).second) level.push_back(std::move(child));
    }
    cache[k] = std::move(level);
  }
  return cache.at(n);
}

// ---- Avoider scans ---------------------------------------------------------

std::optional<Tournament> find_avoider_plain(const AcyclicDigraph& h, int n) {
  const long long bits = Tournament::num_pairs(n);
  if (bits > 21) throw Error("plain enumeration limited to C(n,2) <= 21");
  for (std::uint64_t word = 0; word < (std::uint64_t{1} << bits); ++word) {
    Tournament t(n);
    long long p = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) t.set_forward(i, j, (word >> p++) & 1);
    if (!contains_copy(t, h)) return t;
  }
  return std::nullopt;
}

std::optional<Tournament> find_avoider_exhaustive(const AcyclicDigraph& h,
                                                  int n, int threads) {
  threads = std::max(1, threads);
  if (n <= 9) {
    const std::vector<Tournament>& reps = tournament_classes(n);
    if (threads == 1 || reps.size() < 64) {
      for (const Tournament& t : reps)
        if (!contains_copy(t, h)) return t;
      return std::nullopt;
    }
    std::vector<std::future<std::pair<std::size_t, std::optional<Tournament>>>>
        futs;
    const std::size_t chunk = (reps.size() + threads - 1) / threads;
    for (std::size_t lo = 0; lo < reps.size(); lo += chunk) {
      const std::size_t hi = std::min(reps.size(), lo + chunk);
      futs.push_back(std::async(std::launch::async, [&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i)
          if (!contains_copy(reps[i], h))
            return std::make_pair(i, std::optional<Tournament>(reps[i]));
        return std::make_pair(reps.size(), std::optional<Tournament>());
      }));
    }
    std::size_t best = reps.size();
    std::optional<Tournament> found;
    for (auto& fu : futs) {
      auto [idx, t] = fu.get();
      if (t && idx < best) {
        best = idx;
        found = std::move(t);
      }
    }
    return found;
  }
  if (n != 10)
    throw Error("exhaustive host scan limited to 10 vertices");

  // Covering set: every 10-vertex tournament is isomorphic to some
  // one-vertex extension of a 9-vertex class representative.
  const std::vector<Tournament>& parents = tournament_classes(9);
  auto scan = [&](std::size_t lo, std::size_t hi)
      -> std::pair<std::size_t, std::optional<Tournament>> {
    for (std::size_t pi = lo; pi < hi; ++pi)
      for (unsigned e = 0; e < 512; ++e) {
        Tournament child = extend(parents[pi], e);
        if (!contains_copy(child, h))
          return {pi * 512 + e, std::optional<Tournament>(std::move(child))};
      }
    return {parents.size() * 512, std::optional<Tournament>()};
  };
  if (threads == 1) return scan(0, parents.size()).second;
  std::vector<std::future<std::pair<std::size_t, std::optional<Tournament>>>>
      futs;
  const std::size_t chunk = (parents.size() + threads - 1) / threads;
  for (std::size_t lo = 0; lo < parents.size(); lo += chunk)
    futs.push_back(std::async(std::launch::async, scan, lo,
                              std::min(parents.size(), lo + chunk)));
  std::size_t best = parents.size() * 512 + 1;
  std::optional<Tournament> found;
  for (auto& fu : futs) {
    auto [idx, t] = fu.get();
    if (t && idx < best) {
      best = idx;
      found = std::move(t);
    }
  }
  return found;
}

RamseyResult oriented_ramsey_1(const AcyclicDigraph& h, int max_n,
                               int threads) {
  if (max_n > 10) throw Error("exhaustive r1 limited to max_n <= 10");
  RamseyResult res;
  res.max_n_checked = max_n;
  res.exhaustive = true;
  std::optional<Tournament> last_avoider;
  for (int n = h.order(); n <= max_n; ++n) {
    auto avoider = find_avoider_exhaustive(h, n, threads);
    if (!avoider) {
      res.value = n;
      res.witness = last_avoider ? last_avoider
                                 : std::optional<Tournament>(
                                       Tournament::transitive(n - 1));
      return res;
    }
    last_avoider = std::move(avoider);
  }
  res.witness = last_avoider;
  return res;  // inconclusive: value stays -1
}

std::optional<Tournament> find_avoider_search(const AcyclicDigraph& h, int n,
                                              std::uint64_t seed,
                                              long long iterations) {
  Rng rng(seed);
  Tournament t = random_tournament(n, rng);
  long long cost = count_copies(t, h, 5000);
  if (cost == 0) return t;
  double temperature = std::max(4.0, cost / 4.0);
  for (long long it = 0; it < iterations && cost > 0; ++it) {
    const int i = static_cast<int>(rng.below(n - 1));
    const int j = i + 1 + static_cast<int>(rng.below(n - 1 - i));
    t.set_forward(i, j, !t.forward(i, j));
    const long long next = count_copies(t, h, 5000);
    const long long delta = next - cost;
    if (delta <= 0 ||
        rng.unit() < std::exp(-static_cast<double>(delta) / temperature)) {
      cost = next;
    } else {
      t.set_forward(i, j, !t.forward(i, j));  // undo
    }
    temperature = std::max(0.05, temperature * 0.99995);
  }
  if (cost == 0) return t;
  return std::nullopt;
}

// ---- Generic pattern search in colored hosts ------------------------------

namespace {

// Backtracking embedding count over an arbitrary arc predicate.
template <typename Arc>
long long count_with_arc(int host_n, Arc arc, const AcyclicDigraph& pat,
                         long long cap) {
  const int hn = pat.order();
  if (hn > host_n) return 0;
  std::vector<int> image(hn, -1);
  std::vector<char> used(host_n, 0);
  long long count = 0;

  std::function<bool(int)> rec = [&](int idx) {  // returns "cap reached"
    if (idx == hn) {
      ++count;
      return count >= cap;
    }
    const int v = pat.topo_order()[idx];
    for (int w = 0; w < host_n; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (int u : pat.in(v))
        if (image[u] >= 0 && !arc(image[u], w)) {
          ok = false;
          break;
        }
      if (ok)
        for (int u : pat.out(v))
          if (image[u] >= 0 && !arc(w, image[u])) {
            ok = false;
            break;
          }
      if (!ok) continue;
      image[v] = w;
      used[w] = 1;
      if (rec(idx + 1)) return true;
      image[v] = -1;
      used[w] = 0;
    }
    return false;
  };
  rec(0);
  return count;
}

}  // namespace

bool colored_contains(const ColoredTournament& ct, int color,
                      const AcyclicDigraph& h) {
  auto arc = [&](int u, int v) {
    return ct.base().beats(u, v) && ct.color(u, v) == color;
  };
  return count_with_arc(ct.base().order(), arc, h, 1) > 0;
}

long long count_monochromatic_copies(const ColoredTournament& ct, int color,
                                     const AcyclicDigraph& h) {
  auto arc = [&](int u, int v) {
    return ct.base().beats(u, v) && ct.color(u, v) == color;
  };
  return count_with_arc(ct.base().order(), arc, h,
                        std::numeric_limits<long long>::max());
}

long long count_copies(const Tournament& t, const AcyclicDigraph& h,
                       long long cap) {
  auto arc = [&](int u, int v) { return t.beats(u, v); };
  return count_with_arc(t.order(), arc, h, cap);
}

namespace {

// Copies whose Hamiltonian-order image is monotone in the host labeling.
long long count_monotone_copies(const ColoredTournament& ct, int color,
                                const AcyclicDigraph& h, bool increasing) {
  const auto ham = hamiltonian_order(h);
  if (!ham) throw Error("pattern has no Hamiltonian path");
  const int hn = h.order();
  const int big_n = ct.base().order();
  long long count = 0;
  std::vector<int> image(hn, -1);  // by Hamiltonian position

  std::function<void(int)> rec = [&](int idx) {
    if (idx == hn) {
      ++count;
      return;
    }
    const int lo = idx == 0 ? 0 : (increasing ? image[idx - 1] + 1 : 0);
    const int hi =
        idx == 0 ? big_n : (increasing ? big_n : image[idx - 1]);
    for (int w = lo; w < hi; ++w) {
      bool ok = true;
      for (int prev = 0; prev < idx && ok; ++prev) {
        const int pu = (*ham)[prev], pv = (*ham)[idx];
        const int iu = image[prev];
        if (ct.color(iu, w) != color) {
          if (h.adjacent(pu, pv)) ok = false;
          continue;
        }
        if (h.has_edge(pu, pv) && !ct.base().beats(iu, w)) ok = false;
        if (h.has_edge(pv, pu) && !ct.base().beats(w, iu)) ok = false;
      }
      if (ok) {
        image[idx] = w;
        rec(idx + 1);
        image[idx] = -1;
      }
    }
  };
  rec(0);
  return count;
}

}  // namespace

long long count_increasing_copies(const ColoredTournament& ct, int color,
                                  const AcyclicDigraph& h) {
  return count_monotone_copies(ct, color, h, true);
}

long long count_decreasing_copies(const ColoredTournament& ct, int color,
                                  const AcyclicDigraph& h) {
  return count_monotone_copies(ct, color, h, false);
}

long long count_ordered_copies(const EdgeColoring& chi, int color,
                               const OrderedGraph& g) {
  long long count = 0;
  std::vector<int> image(g.n, -1);
  std::function<void(int)> rec = [&](int idx) {
    if (idx == g.n) {
      ++count;
      return;
    }
    const int lo = idx == 0 ? 0 : image[idx - 1] + 1;
    for (int w = lo; w <= chi.n - (g.n - idx); ++w) {
      bool ok = true;
      for (int prev = 0; prev < idx && ok; ++prev)
        if (g.has_edge(prev, idx) && chi.at(image[prev], w) != color)
          ok = false;
      if (ok) {
        image[idx] = w;
        rec(idx + 1);
        image[idx] = -1;
      }
    }
  };
  rec(0);
  return count;
}

bool contains_ordered_copy(const EdgeColoring& chi, int color,
                           const OrderedGraph& g) {
  if (g.n > chi.n) return false;
  bool found = false;
  std::vector<int> image(g.n, -1);
  std::function<void(int)> rec = [&](int idx) {
    if (found) return;
    if (idx == g.n) {
      found = true;
      return;
    }
    const int lo = idx == 0 ? 0 : image[idx - 1] + 1;
    for (int w = lo; w <= chi.n - (g.n - idx) && !found; ++w) {
      bool ok = true;
      for (int prev = 0; prev < idx && ok; ++prev)
        if (g.has_edge(prev, idx) && chi.at(image[prev], w) != color)
          ok = false;
      if (ok) {
        image[idx] = w;
        rec(idx + 1);
        image[idx] = -1;
      }
    }
  };
  rec(0);
  return found;
}

// ---- Multicolor and ordered enumeration -----------------------------------

RamseyResult oriented_ramsey_k(const AcyclicDigraph& h, int k, int max_n,
                               int threads) {
  (void)threads;
  if (k < 1) throw Error("need k >= 1 colors");
  RamseyResult res;
  res.max_n_checked = max_n;
  res.exhaustive = true;

  std::optional<ColoredTournament> last_avoider;
  for (int n = h.order(); n <= max_n; ++n) {
    const long long digits = Tournament::num_pairs(n);
    const double space = std::pow(2.0 * k, static_cast<double>(digits));
    if (space > 6.0e7)
      throw Error("k-color enumeration space too large at N = " +
                  std::to_string(n));

    std::vector<int> digit(digits, 0);
    bool found_avoider = false;
    while (true) {
      ColoredTournament ct(Tournament(n), k);
      long long p = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++p) {
          ct.base().set_forward(i, j, digit[p] % 2);
          ct.set_color(i, j, digit[p] / 2 + 1);
        }
      bool mono = false;
      for (int c = 1; c <= k && !mono; ++c)
        if (colored_contains(ct, c, h)) mono = true;
      if (!mono) {
        found_avoider = true;
        last_avoider = std::move(ct);
        break;
      }
      long long pos = 0;
      while (pos < digits && ++digit[pos] == 2 * k) digit[pos++] = 0;
      if (pos == digits) break;
    }
    if (!found_avoider) {
      res.value = n;
      res.colored_witness = last_avoider;
      return res;
    }
  }
  res.colored_witness = last_avoider;
  return res;
}

RamseyResult ordered_ramsey(const std::vector<OrderedGraph>& g, int max_n) {
  if (g.empty()) throw Error("need at least one ordered pattern");
  const int k = static_cast<int>(g.size());
  RamseyResult res;
  res.max_n_checked = max_n;
  res.exhaustive = true;

  std::optional<EdgeColoring> last_avoider;
  for (int n = 1; n <= max_n; ++n) {
    const long long digits = n * (n - 1) / 2;
    const double space = std::pow(static_cast<double>(k),
                                  static_cast<double>(digits));
    if (space > 3.0e8)
      throw Error("ordered enumeration space too large at N = " +
                  std::to_string(n));

    std::vector<int> digit(digits, 0);
    bool found_avoider = false;
    while (true) {
      EdgeColoring chi(n, k);
      for (long long p = 0; p < digits; ++p) chi.color[p] = digit[p] + 1;
      bool mono = false;
      for (int c = 1; c <= k && !mono; ++c)
        if (contains_ordered_copy(chi, c, g[c - 1])) mono = true;
      if (!mono) {
        found_avoider = true;
        last_avoider = std::move(chi);
        break;
      }
      long long pos = 0;
      while (pos < digits && ++digit[pos] == k) digit[pos++] = 0;
      if (pos == digits) break;
    }
    if (!found_avoider) {
      res.value = n;
      res.coloring_witness = last_avoider;
      return res;
    }
  }
  res.coloring_witness = last_avoider;
  return res;
}

// ---- Ordered <-> oriented reductions ---------------------------------------

std::optional<std::vector<int>> hamiltonian_order(const AcyclicDigraph& h) {
  const std::vector<int>& topo = h.topo_order();
  for (std::size_t i = 0; i + 1 < topo.size(); ++i)
    if (!h.has_edge(topo[i], topo[i + 1])) return std::nullopt;
  return topo;
}

OrderedGraph h_plus(const AcyclicDigraph& h) {
  const auto ham = hamiltonian_order(h);
  if (!ham) throw Error("pattern has no Hamiltonian directed path");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < h.order(); ++i)
    for (int j = i + 1; j < h.order(); ++j)
      if (h.has_edge((*ham)[i], (*ham)[j])) edges.emplace_back(i, j);
  return OrderedGraph(h.order(), std::move(edges));
}

OrderedGraph h_minus(const AcyclicDigraph& h) {
  const OrderedGraph plus = h_plus(h);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : plus.edges)
    edges.emplace_back(plus.n - 1 - v, plus.n - 1 - u);
  return OrderedGraph(plus.n, std::move(edges));
}

AcyclicDigraph path_matching_digraph(const OrderedGraph& matching) {
  if (!matching.is_matching()) throw Error("pattern is not a matching");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < matching.n; ++i) edges.emplace_back(i, i + 1);
  for (auto [u, v] : matching.edges)
    if (v != u + 1) edges.emplace_back(u, v);
  return AcyclicDigraph(matching.n, std::move(edges));
}

ColoredTournament lower_bound_coloring_from_ordered(const EdgeColoring& chi) {
  ColoredTournament ct(Tournament::transitive(chi.n), chi.k);
  for (int i = 0; i < chi.n; ++i)
    for (int j = i + 1; j < chi.n; ++j) ct.set_color(i, j, chi.at(i, j));
  return ct;
}

EdgeColoring oriented_to_ordered_coloring(const ColoredTournament& ct) {
  const int n = ct.base().order();
  const int k = ct.colors();
  EdgeColoring chi(n, 2 * k);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      chi.set(i, j,
              ct.base().forward(i, j) ? ct.color(i, j) : ct.color(i, j) + k);
  return chi;
}

EdgeColoring merge_colors(const EdgeColoring& chi, int keep) {
  if (keep < 1 || keep > chi.k) throw Error("kept color out of range");
  EdgeColoring merged(chi.n, 2);
  for (std::size_t p = 0; p < chi.color.size(); ++p)
    merged.color[p] = chi.color[p] == keep ? 1 : 2;
  return merged;
}

OrderedGraph random_matching(int n, std::uint64_t seed) {
  if (n % 2 != 0) throw Error("perfect matching needs even n");
  Rng rng(seed);
  std::vector<int> free_list(n);
  std::iota(free_list.begin(), free_list.end(), 0);
  std::vector<std::pair<int, int>> edges;
  while (!free_list.empty()) {
    const int u = free_list.front();
    free_list.erase(free_list.begin());
    const std::size_t pick = rng.below(free_list.size());
    const int v = free_list[pick];
    free_list.erase(free_list.begin() + static_cast<long long>(pick));
    edges.emplace_back(u, v);
  }
  return OrderedGraph(n, std::move(edges));
}

bool digraph_isomorphic(const AcyclicDigraph& a, const AcyclicDigraph& b) {
  if (a.order() != b.order() || a.num_edges() != b.num_edges()) return false;
  const int n = a.order();
  if (n > 8) throw Error("brute-force digraph isomorphism limited to n <= 8");

  auto degree_profile = [](const AcyclicDigraph& g) {
    std::vector<std::pair<int, int>> prof;
    for (int v = 0; v < g.order(); ++v)
      prof.emplace_back(g.out(v).size(), g.in(v).size());
    std::sort(prof.begin(), prof.end());
    return prof;
  };
  if (degree_profile(a) != degree_profile(b)) return false;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (auto [u, v] : a.edges())
      if (!b.has_edge(perm[u], perm[v])) {
        match = false;
        break;
      }
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace forge
