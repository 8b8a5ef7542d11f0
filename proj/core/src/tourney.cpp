#include "forge/tourney.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <numeric>
#include <unordered_map>

namespace forge {

bool validate_tt_witness(const Tournament& t, const TTWitness& w) {
  if (w.size != static_cast<int>(w.vertices.size())) return false;
  for (std::size_t i = 0; i < w.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < w.vertices.size(); ++j)
      if (!t.beats(w.vertices[i], w.vertices[j])) return false;
  return true;
}

Tournament lex_product(const Tournament& g, const Tournament& h) {
  const long long n = static_cast<long long>(g.order()) * h.order();
  if (n > (1 << 15)) throw Error("lex product exceeds size budget");
  Tournament p(static_cast<int>(n));
  const int hn = h.order();
  for (int a = 0; a < static_cast<int>(n); ++a) {
    const int g1 = a / hn, h1 = a % hn;
    for (int b = a + 1; b < static_cast<int>(n); ++b) {
      const int g2 = b / hn, h2 = b % hn;
      const bool fwd = g1 == g2 ? h.beats(h1, h2) : g.beats(g1, g2);
      p.set_forward(a, b, fwd);
    }
  }
  return p;
}

Tournament lex_power(const Tournament& r, int m) {
  if (m < 1) throw Error("lex power requires m >= 1");
  Tournament p = r;
  for (int i = 1; i < m; ++i) p = lex_product(p, r);
  return p;
}

int lex_power_first_coordinate(int vertex, int r, int m) {
  long long block = 1;
  for (int i = 1; i < m; ++i) block *= r;
  return static_cast<int>(vertex / block);
}

namespace {

struct MaxTTSearch {
  const std::vector<std::uint64_t>& out_mask;
  std::unordered_map<std::uint64_t, int> memo;

  int exact(std::uint64_t cand) {
    if (cand == 0) return 0;
    auto it = memo.find(cand);
    if (it != memo.end()) return it->second;
    int best = 0;
    for (std::uint64_t rest = cand; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      best = std::max(best, 1 + exact(cand & out_mask[v]));
    }
    memo.emplace(cand, best);
    return best;
  }

  // Branch and bound for larger n; `chain` holds the incumbent.
  std::vector<int> chain, cur;

  void branch(std::uint64_t cand) {
    if (cur.size() + static_cast<std::size_t>(std::popcount(cand)) <=
        chain.size())
      return;
    if (cand == 0) {
      if (cur.size() > chain.size()) chain = cur;
      return;
    }
    for (std::uint64_t rest = cand; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      cur.push_back(v);
      branch(cand & out_mask[v]);
      cur.pop_back();
      if (cur.size() + static_cast<std::size_t>(std::popcount(rest)) <=
          chain.size())
        return;
    }
  }
};

}  // namespace

TTWitness max_transitive_subtournament(const Tournament& t) {
  const int n = t.order();
  if (n > 64) throw Error("exact transitive search limited to 64 vertices");
  if (n == 0) return {};

  std::vector<std::uint64_t> out_mask(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (u != v && t.beats(v, u)) out_mask[v] |= std::uint64_t{1} << u;

  const std::uint64_t all =
      n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  MaxTTSearch search{out_mask, {}, {}, {}};

  TTWitness w;
  if (n <= 24) {
    w.size = search.exact(all);
    // Reconstruct the witness by following optimal choices, smallest
    // vertex first for determinism.
    std::uint64_t cand = all;
    for (int left = w.size; left > 0; --left) {
      for (std::uint64_t rest = cand; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (search.exact(cand & out_mask[v]) == left - 1) {
          w.vertices.push_back(v);
          cand &= out_mask[v];
          break;
        }
      }
    }
  } else {
    // Greedy chain as the initial incumbent: always move to the
    // out-neighborhood of the highest-out-degree candidate.
    std::uint64_t cand = all;
    while (cand) {
      int best = -1, best_deg = -1;
      for (std::uint64_t rest = cand; rest;) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        const int deg = std::popcount(cand & out_mask[v]);
        if (deg > best_deg) {
          best = v;
          best_deg = deg;
        }
      }
      search.chain.push_back(best);
      cand &= out_mask[best];
    }
    search.branch(all);
    w.size = static_cast<int>(search.chain.size());
    w.vertices = search.chain;
  }
  return w;
}

Tournament paley_tournament(int q) {
  auto is_prime = [](int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  };
  if (!is_prime(q) || q % 4 != 3)
    throw Error("paley tournament requires a prime q = 3 (mod 4)");
  std::vector<char> residue(q, 0);
  for (int x = 1; x < q; ++x)
    residue[static_cast<int>(static_cast<long long>(x) * x % q)] = 1;
  Tournament t(q);
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) t.set_forward(i, j, residue[(j - i) % q]);
  return t;
}

Tournament random_tournament(int n, Rng& rng) {
  Tournament t(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) t.set_forward(i, j, rng.bit());
  return t;
}

Tournament random_tournament(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_tournament(n, rng);
}

TTFreeSearch find_tt_free(int r, int t, int trials, std::uint64_t seed,
                          int threads) {
  if (r < 1 || t < 2) throw Error("find_tt_free requires r >= 1, t >= 2");
  auto run_range = [&](int lo, int hi) {
    TTFreeSearch res;
    for (int i = lo; i < hi; ++i) {
      Rng rng = Rng::fork(seed, static_cast<std::uint64_t>(i));
      Tournament cand = random_tournament(r, rng);
      ++res.trials_run;
      if (max_transitive_subtournament(cand).size < t) {
        res.found = std::move(cand);
        res.trial = i;
        break;
      }
    }
    return res;
  };

  threads = std::max(1, threads);
  if (threads == 1) return run_range(0, trials);

  std::vector<std::future<TTFreeSearch>> futs;
  const int chunk = (trials + threads - 1) / threads;
  for (int lo = 0; lo < trials; lo += chunk)
    futs.push_back(std::async(std::launch::async, run_range, lo,
                              std::min(trials, lo + chunk)));
  TTFreeSearch merged;
  for (auto& fu : futs) {
    TTFreeSearch part = fu.get();
    merged.trials_run += part.trials_run;
    if (part.found && (merged.trial < 0 || part.trial < merged.trial)) {
      merged.found = std::move(part.found);
      merged.trial = part.trial;
    }
  }
  return merged;
}

long long forward_edges(const Tournament& t, const std::vector<int>& order) {
  long long cnt = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (t.beats(order[i], order[j])) ++cnt;
  return cnt;
}

namespace {

std::vector<int> median_exact(const Tournament& t) {
  const int n = t.order();
  std::vector<std::uint64_t> in_mask(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (u != v && t.beats(u, v)) in_mask[v] |= std::uint64_t{1} << u;

  const std::uint64_t size = std::uint64_t{1} << n;
  std::vector<int> dp(size, 0);
  std::vector<std::int8_t> last(size, -1);
  for (std::uint64_t s = 1; s < size; ++s) {
    for (std::uint64_t rest = s; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      const std::uint64_t prev = s & ~(std::uint64_t{1} << v);
      const int val = dp[prev] + std::popcount(in_mask[v] & prev);
      if (val > dp[s]) {
        dp[s] = val;
        last[s] = static_cast<std::int8_t>(v);
      } else if (last[s] < 0) {
        last[s] = static_cast<std::int8_t>(v);
      }
    }
  }
  std::vector<int> order(n);
  std::uint64_t s = size - 1;
  for (int pos = n - 1; pos >= 0; --pos) {
    const int v = last[s];
    order[pos] = v;
    s &= ~(std::uint64_t{1} << v);
  }
  return order;
}

std::vector<int> median_local_search(const Tournament& t) {
  const int n = t.order();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return t.out_degree(a) > t.out_degree(b);
  });

  bool improved = true;
  while (improved) {
    improved = false;
    for (int i = 0; i + 1 < n; ++i)
      if (t.beats(order[i + 1], order[i])) {
        std::swap(order[i], order[i + 1]);
        improved = true;
      }
    // Single-vertex reinsertion: move order[i] to position j when the net
    // change in forward edges is positive.
    for (int i = 0; i < n && !improved; ++i) {
      int gain = 0;
      for (int j = i - 1; j >= 0; --j) {
        gain += t.beats(order[i], order[j]) ? 1 : -1;
        if (gain > 0) {
          const int v = order[i];
          order.erase(order.begin() + i);
          order.insert(order.begin() + j, v);
          improved = true;
          break;
        }
      }
      if (improved) break;
      gain = 0;
      for (int j = i + 1; j < n; ++j) {
        gain += t.beats(order[j], order[i]) ? 1 : -1;
        if (gain > 0) {
          const int v = order[i];
          order.erase(order.begin() + i);
          order.insert(order.begin() + j, v);
          improved = true;
          break;
        }
      }
    }
  }
  return order;
}

}  // namespace

std::vector<int> median_ordering(const Tournament& t) {
  if (t.order() == 0) return {};
  std::vector<int> order =
      t.order() <= 20 ? median_exact(t) : median_local_search(t);
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (!t.beats(order[i], order[i + 1]))
      throw Error("median ordering violates consecutive-forward property");
  return order;
}

namespace {

struct CopySearch {
  const Tournament& host;
  const AcyclicDigraph& pat;
  std::vector<std::vector<int>> cand;
  std::vector<int> image;
  std::vector<char> used;

  bool solve(int embedded) {
    if (embedded == pat.order()) return true;

    // Fewest candidates first among unembedded vertices with an embedded
    // neighbor; ties by topological position. When no vertex has an
    // embedded neighbor (start or a fresh component), take the
    // topologically first unembedded vertex.
    int pick = -1;
    for (int v : pat.topo_order()) {
      if (image[v] >= 0) continue;
      bool anchored = false;
      for (int u : pat.out(v))
        if (image[u] >= 0) anchored = true;
      for (int u : pat.in(v))
        if (image[u] >= 0) anchored = true;
      if (!anchored) continue;
      if (pick < 0 || cand[v].size() < cand[pick].size()) pick = v;
    }
    if (pick < 0)
      for (int v : pat.topo_order())
        if (image[v] < 0) {
          pick = v;
          break;
        }

    const std::vector<int> options = cand[pick];
    for (int w : options) {
      if (used[w]) continue;
      bool consistent = true;
      for (int u : pat.in(pick))
        if (image[u] >= 0 && !host.beats(image[u], w)) consistent = false;
      for (int u : pat.out(pick))
        if (image[u] >= 0 && !host.beats(w, image[u])) consistent = false;
      if (!consistent) continue;

      image[pick] = w;
      used[w] = 1;
      // Narrow neighbor candidate lists; restore on backtrack.
      std::vector<std::pair<int, std::vector<int>>> saved;
      auto narrow = [&](int x, bool w_to_x) {
        if (image[x] >= 0) return;
        saved.emplace_back(x, cand[x]);
        std::vector<int> next;
        for (int y : cand[x])
          if (y != w && (w_to_x ? host.beats(w, y) : host.beats(y, w)))
            next.push_back(y);
        cand[x] = std::move(next);
      };
      for (int x : pat.out(pick)) narrow(x, true);
      for (int x : pat.in(pick)) narrow(x, false);

      if (solve(embedded + 1)) return true;

      for (auto& [x, old] : saved) cand[x] = std::move(old);
      image[pick] = -1;
      used[w] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<Embedding> contains_copy(const Tournament& t,
                                       const AcyclicDigraph& h,
                                       std::optional<std::uint64_t> seed) {
  if (h.order() > t.order()) return std::nullopt;
  if (h.order() == 0) return Embedding{};

  std::vector<int> base(t.order());
  std::iota(base.begin(), base.end(), 0);
  if (seed) {
    Rng rng(*seed);
    for (int i = t.order() - 1; i > 0; --i) {
      const int j = static_cast<int>(rng.below(i + 1));
      std::swap(base[i], base[j]);
    }
  }

  std::vector<int> host_outdeg(t.order());
  for (int w = 0; w < t.order(); ++w) host_outdeg[w] = t.out_degree(w);

  CopySearch search{t, h, {}, {}, {}};
  search.cand.assign(h.order(), {});
  for (int v = 0; v < h.order(); ++v) {
    const int need_out = static_cast<int>(h.out(v).size());
    const int need_in = static_cast<int>(h.in(v).size());
    for (int w : base) {
      const int indeg = t.order() - 1 - host_outdeg[w];
      if (host_outdeg[w] >= need_out && indeg >= need_in)
        search.cand[v].push_back(w);
    }
  }
  search.image.assign(h.order(), -1);
  search.used.assign(t.order(), 0);
  if (!search.solve(0)) return std::nullopt;
  return Embedding{search.image};
}

}  // namespace forge
