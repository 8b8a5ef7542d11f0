#include "forge/embed.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace forge {

long long count_forward(const Tournament& t, const std::vector<int>& w1,
                        const std::vector<int>& w2) {
  long long cnt = 0;
  for (int a : w1)
    for (int b : w2)
      if (a != b && t.beats(a, b)) ++cnt;
  return cnt;
}

double validate_dense_pair(const Tournament& t, const std::vector<int>& w1,
                           const std::vector<int>& w2) {
  if (w1.empty() || w2.empty())
    throw Error("dense pair validation requires nonempty sets");
  return static_cast<double>(count_forward(t, w1, w2)) /
         (static_cast<double>(w1.size()) * static_cast<double>(w2.size()));
}

namespace {

// Correctly-oriented neighbor count of w inside `cand`: out-neighbors when
// the unembedded vertex is an out-neighbor of the current one, in-neighbors
// otherwise.
int oriented_count(const Tournament& t, int w, const std::vector<int>& cand,
                   bool outward) {
  int cnt = 0;
  for (int x : cand)
    if (x != w && (outward ? t.beats(w, x) : t.beats(x, w))) ++cnt;
  return cnt;
}

}  // namespace

EmbedOutcome greedy_embed(const AcyclicDigraph& h, const Tournament& t,
                          const std::vector<int>& order, double c) {
  const int n = h.order();
  const int big_n = t.order();
  if (c <= 0 || c > 0.5) throw Error("greedy embedding requires 0 < c <= 1/2");
  if (static_cast<int>(order.size()) != n)
    throw Error("embedding order must be a permutation of the pattern");

  std::vector<int> pos(n);  // embedding-order position per vertex
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  std::vector<std::vector<int>> cand(n);
  {
    std::vector<int> all(big_n);
    for (int w = 0; w < big_n; ++w) all[w] = w;
    for (int v = 0; v < n; ++v) cand[v] = all;
  }
  std::vector<int> image(n, -1), embedded_nbrs(n, 0);

  for (int step = 0; step < n; ++step) {
    const int vt = order[step];

    // Unembedded neighbors, with the orientation the image must respect.
    std::vector<std::pair<int, bool>> look;  // (vertex, outward?)
    for (int u : h.out(vt))
      if (image[u] < 0) look.emplace_back(u, true);
    for (int u : h.in(vt))
      if (image[u] < 0) look.emplace_back(u, false);

    int chosen = -1;
    for (int w : cand[vt]) {
      bool ok = true;
      for (auto [u, outward] : look)
        if (oriented_count(t, w, cand[u], outward) <
            c * static_cast<double>(cand[u].size())) {
          ok = false;
          break;
        }
      if (ok) {
        chosen = w;
        break;
      }
    }

    if (chosen < 0) {
      FailureWitness fw;
      fw.failed_step = step + 1;
      fw.failed_vertex = vt;
      fw.order = order;
      fw.candidates = cand;
      fw.w0 = cand[vt];
      for (int w : fw.w0) {
        int best = -1;
        for (auto [u, outward] : look) {
          if (oriented_count(t, w, cand[u], outward) <
              c * static_cast<double>(cand[u].size())) {
            if (best < 0 || pos[u] < pos[best]) best = u;
          }
        }
        fw.assigned_j.push_back(best);
      }
      // Popular = most frequent assigned vertex; ties by embedding position.
      std::map<int, int> freq;
      for (int j : fw.assigned_j)
        if (j >= 0) ++freq[j];
      int best_cnt = 0;
      for (auto [j, cnt] : freq)
        if (cnt > best_cnt ||
            (cnt == best_cnt && fw.popular >= 0 && pos[j] < pos[fw.popular])) {
          fw.popular = j;
          best_cnt = cnt;
        }
      return fw;
    }

    image[vt] = chosen;
    cand[vt] = {chosen};
    for (int v = 0; v < n; ++v) {
      if (image[v] >= 0 || v == vt) continue;
      std::vector<int>& set = cand[v];
      if (h.has_edge(vt, v)) {
        std::vector<int> next;
        for (int x : set)
          if (x != chosen && t.beats(chosen, x)) next.push_back(x);
        set = std::move(next);
        ++embedded_nbrs[v];
      } else if (h.has_edge(v, vt)) {
        std::vector<int> next;
        for (int x : set)
          if (x != chosen && t.beats(x, chosen)) next.push_back(x);
        set = std::move(next);
        ++embedded_nbrs[v];
      } else {
        set.erase(std::remove(set.begin(), set.end(), chosen), set.end());
      }
      // Candidate-count invariant of the framework; violation is a bug.
      const double floor_bound =
          std::pow(c, embedded_nbrs[v]) * big_n - (step + 1);
      if (static_cast<double>(set.size()) < floor_bound - 1e-9)
        throw std::logic_error("greedy embedding candidate invariant broken");
    }
  }

  Embedding phi;
  phi.map = std::move(image);
  return phi;
}

namespace {

// Exact per-vertex count of correctly-oriented edges from `base` to w.
long long pair_deficit_order(const Tournament& t, const std::vector<int>& base,
                             int w, bool base_to_w) {
  long long cnt = 0;
  for (int x : base)
    if (x != w && (base_to_w ? t.beats(x, w) : t.beats(w, x))) ++cnt;
  return cnt;
}

}  // namespace

DenseOutcome find_dense_pair(const AcyclicDigraph& h, const Tournament& t,
                             double c) {
  if (c <= 0 || c > 0.5) throw Error("find_dense_pair requires 0 < c <= 1/2");
  const int n = h.order();
  const long long big_n = t.order();
  auto [d, order] = degeneracy_order(h);
  const int delta = h.max_degree();

  const double required =
      delta == 0 ? n : 2.0 * delta * std::pow(c, -d) * n;
  if (static_cast<double>(big_n) < required)
    throw PreconditionError(
        "host too small for the dense-pair dichotomy",
        static_cast<long long>(std::ceil(required)));

  EmbedOutcome out = greedy_embed(h, t, order, c);
  if (std::holds_alternative<Embedding>(out))
    return std::get<Embedding>(out);

  const FailureWitness& fw = std::get<FailureWitness>(out);
  if (fw.w0.empty() || fw.popular < 0)
    throw std::logic_error("dense-pair extraction with empty candidate set");

  const bool outward = h.has_edge(fw.failed_vertex, fw.popular);
  const std::vector<int>& bulk = fw.candidates[fw.popular];

  std::vector<int> assigned;
  for (std::size_t i = 0; i < fw.w0.size(); ++i)
    if (fw.assigned_j[i] == fw.popular) assigned.push_back(fw.w0[i]);

  const double size_bound = std::pow(c, d) * static_cast<double>(big_n) /
                            (2.0 * std::max(1, delta));

  // Every assigned vertex has fewer than c|bulk| correctly-oriented
  // neighbors in bulk, hence at least (1-c)|bulk| edges in the dense
  // direction once it lies outside bulk. Dropping the overlap keeps the
  // density exact; keep it only if the size bound would break.
  std::vector<char> in_bulk(t.order(), 0);
  for (int x : bulk) in_bulk[x] = 1;
  std::vector<int> trimmed;
  for (int w : assigned)
    if (!in_bulk[w]) trimmed.push_back(w);
  if (static_cast<double>(trimmed.size()) < size_bound) trimmed = assigned;

  // Dense direction: bulk -> assigned when the popular vertex was an
  // out-neighbor (the assigned vertices lack out-edges there), assigned ->
  // bulk otherwise.
  DensePair pair;
  pair.swapped_branch = outward;
  std::vector<int>* trim_side = nullptr;
  if (outward) {
    pair.w1 = bulk;
    pair.w2 = trimmed;
    trim_side = &pair.w2;
  } else {
    pair.w1 = trimmed;
    pair.w2 = bulk;
    trim_side = &pair.w1;
  }

  // Residual overlap can cost one pair per shared vertex; shed the worst
  // vertices while the size bound allows.
  auto recount = [&]() {
    pair.forward_count = count_forward(t, pair.w1, pair.w2);
    pair.delta_achieved =
        static_cast<double>(pair.forward_count) /
        (static_cast<double>(pair.w1.size()) * pair.w2.size());
  };
  recount();
  while (pair.delta_achieved < 1.0 - c &&
         static_cast<double>(trim_side->size()) - 1.0 >= size_bound) {
    std::size_t worst = 0;
    long long worst_cnt = -1;
    for (std::size_t i = 0; i < trim_side->size(); ++i) {
      const long long cnt =
          pair_deficit_order(t, bulk, (*trim_side)[i], outward);
      if (worst_cnt < 0 || cnt < worst_cnt) {
        worst_cnt = cnt;
        worst = i;
      }
    }
    trim_side->erase(trim_side->begin() + static_cast<long long>(worst));
    recount();
  }

  if (pair.delta_achieved < 1.0 - c ||
      static_cast<double>(std::min(pair.w1.size(), pair.w2.size())) <
          size_bound)
    throw std::logic_error("dense-pair extraction missed its contract");
  return pair;
}

namespace {

struct ForestPlan {
  std::vector<int> order;    // component vertices, children before parents
  std::vector<int> parent;   // parent in the rooted tree, -1 at the root
};

ForestPlan plan_component(const AcyclicDigraph& h,
                          const std::vector<int>& comp) {
  ForestPlan plan;
  std::vector<char> inside(h.order(), 0), seen(h.order(), 0);
  for (int v : comp) inside[v] = 1;
  std::vector<int> bfs{comp[0]}, parent(h.order(), -1);
  seen[comp[0]] = 1;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    const int v = bfs[head];
    auto visit = [&](int u) {
      if (inside[u] && !seen[u]) {
        seen[u] = 1;
        parent[u] = v;
        bfs.push_back(u);
      }
    };
    for (int u : h.out(v)) visit(u);
    for (int u : h.in(v)) visit(u);
  }
  plan.order.assign(bfs.rbegin(), bfs.rend());
  plan.parent = std::move(parent);
  return plan;
}

}  // namespace

DenseOutcome forest_dense_pair(const AcyclicDigraph& h, const Tournament& t,
                               const std::vector<std::vector<int>>& sets) {
  const int n = h.order();
  if (static_cast<int>(sets.size()) != n)
    throw Error("forest_dense_pair needs one candidate set per vertex");
  {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    if (!induces_forest(h, all))
      throw Error("forest_dense_pair requires a 1-degenerate pattern");
  }
  const int delta = std::max(1, h.max_degree());

  long long m_min = t.order();
  for (const auto& s : sets)
    m_min = std::min(m_min, static_cast<long long>(s.size()));
  if (m_min < std::max<long long>(n, 3LL * n * delta))
    throw PreconditionError("candidate sets below 3*n*maxdeg",
                            std::max<long long>(n, 3LL * n * delta));

  const auto comps = weak_components(h);
  std::size_t max_comp = 0;
  for (const auto& c : comps) max_comp = std::max(max_comp, c.size());
  const double threshold = static_cast<double>(m_min) /
                           (4.0 * static_cast<double>(max_comp) * delta);

  std::vector<char> used(t.order(), 0);
  std::vector<int> image(n, -1);

  for (const auto& comp : comps) {
    const ForestPlan plan = plan_component(h, comp);
    const int mc = static_cast<int>(comp.size());

    // Disjoint per-vertex pools: the lexicographically smallest q-subset
    // of each candidate set among the still-free vertices.
    long long local_min = t.order();
    for (int v : comp) {
      long long avail = 0;
      for (int x : sets[v])
        if (!used[x]) ++avail;
      local_min = std::min(local_min, avail);
    }
    const long long q = local_min / mc;
    if (q < 1) throw PreconditionError("candidate sets exhausted", -1);

    std::vector<char> taken(t.order(), 0);
    std::vector<std::vector<int>> pool(n);
    for (int v : plan.order) {
      for (int x : sets[v]) {
        if (used[x] || taken[x]) continue;
        pool[v].push_back(x);
        taken[x] = 1;
        if (static_cast<long long>(pool[v].size()) == q) break;
      }
      if (static_cast<long long>(pool[v].size()) < q)
        throw std::logic_error("disjoint pool construction fell short");
    }

    // Witness sets over monotone paths: w survives iff every child set
    // holds a correctly-oriented partner.
    std::vector<std::vector<int>> witness(n);
    std::vector<std::vector<int>> children(n);
    for (int v : comp)
      if (plan.parent[v] >= 0) children[plan.parent[v]].push_back(v);

    auto oriented_ok = [&](int child, int par, int x, int w) {
      // x is the child's image candidate, w the parent's.
      return h.has_edge(child, par) ? t.beats(x, w) : t.beats(w, x);
    };

    for (int v : plan.order) {
      if (children[v].empty()) {
        witness[v] = pool[v];
        continue;
      }
      for (int w : pool[v]) {
        bool ok = true;
        for (int u : children[v]) {
          bool found = false;
          for (int x : witness[u])
            if (oriented_ok(u, v, x, w)) {
              found = true;
              break;
            }
          if (!found) {
            ok = false;
            break;
          }
        }
        if (ok) witness[v].push_back(w);
      }
    }

    const int root = plan.order.back();
    if (!witness[root].empty()) {
      // Extract the embedding top-down; disjoint pools keep it injective.
      std::vector<std::pair<int, int>> stack{{root, witness[root][0]}};
      while (!stack.empty()) {
        auto [v, w] = stack.back();
        stack.pop_back();
        image[v] = w;
        used[w] = 1;
        for (int u : children[v])
          for (int x : witness[u])
            if (oriented_ok(u, v, x, w)) {
              stack.emplace_back(u, x);
              break;
            }
      }
      continue;
    }

    // First vertex (children-before-parents order) whose witness set fell
    // under the threshold; its fullest failure class is one biclique side.
    int bad = -1;
    for (int v : plan.order)
      if (static_cast<double>(witness[v].size()) < threshold) {
        bad = v;
        break;
      }
    if (bad < 0 || children[bad].empty())
      throw std::logic_error("forest dichotomy bookkeeping broken");

    int best_child = -1;
    std::vector<int> best_x;
    for (int u : children[bad]) {
      std::vector<int> x_set;
      for (int w : pool[bad]) {
        bool none = true;
        for (int x : witness[u])
          if (oriented_ok(u, bad, x, w)) {
            none = false;
            break;
          }
        if (none) x_set.push_back(w);
      }
      if (best_child < 0 || x_set.size() > best_x.size()) {
        best_child = u;
        best_x = std::move(x_set);
      }
    }

    DensePair pair;
    // All edges run one way between best_x and the child's witness set.
    if (h.has_edge(best_child, bad)) {
      pair.w1 = best_x;  // no child->x edge exists, so x -> child everywhere
      pair.w2 = witness[best_child];
    } else {
      pair.w1 = witness[best_child];
      pair.w2 = best_x;
    }
    pair.forward_count = count_forward(t, pair.w1, pair.w2);
    pair.delta_achieved = 1.0;
    const long long full = static_cast<long long>(pair.w1.size()) *
                           static_cast<long long>(pair.w2.size());
    if (pair.forward_count != full ||
        static_cast<double>(std::min(pair.w1.size(), pair.w2.size())) <
            threshold)
      throw std::logic_error("forest dense pair missed its contract");
    return pair;
  }

  Embedding phi;
  phi.map = std::move(image);
  return phi;
}

Embedding inner_stage(const AcyclicDigraph& h, const Tournament& t,
                      const std::vector<std::vector<int>>& sets) {
  const int n = h.order();
  if (static_cast<int>(sets.size()) != n)
    throw Error("inner_stage needs one vertex set per pattern vertex");
  const int delta = h.max_degree();

  for (const auto& s : sets)
    if (static_cast<int>(s.size()) < 4 * n)
      throw PreconditionError("inner_stage requires |V_i| >= 4n", 4LL * n);
  if (delta > 0) {
    const double need = 1.0 - 1.0 / (8.0 * delta * delta);
    for (auto [i, j] : h.edges())
      if (validate_dense_pair(t, sets[i], sets[j]) < need)
        throw PreconditionError("inner_stage density precondition fails");
  }

  // Refinement: drop vertices with high reverse in-degree toward any
  // out-neighbor set.
  std::vector<std::vector<int>> refined(n);
  for (int i = 0; i < n; ++i) {
    refined[i] = sets[i];
    if (delta == 0) continue;
    std::vector<int> keep;
    for (int w : sets[i]) {
      bool ok = true;
      for (int j : h.out(i)) {
        long long rev = 0;
        for (int x : sets[j])
          if (x != w && t.beats(x, w)) ++rev;
        if (static_cast<double>(rev) >=
            static_cast<double>(sets[j].size()) / (4.0 * delta)) {
          ok = false;
          break;
        }
      }
      if (ok) keep.push_back(w);
    }
    refined[i] = std::move(keep);
  }

  std::vector<int> image(n, -1);
  std::vector<char> used(t.order(), 0);
  for (int v : h.topo_order()) {
    int pick = -1;
    for (int w : refined[v]) {
      if (used[w]) continue;
      bool ok = true;
      for (int u : h.in(v))
        if (!t.beats(image[u], w)) {
          ok = false;
          break;
        }
      if (ok) {
        pick = w;
        break;
      }
    }
    if (pick < 0)
      throw std::logic_error(
          "inner_stage failed despite validated preconditions");
    image[v] = pick;
    used[pick] = 1;
  }

  Embedding phi;
  phi.map = std::move(image);
  return phi;
}

}  // namespace forge
