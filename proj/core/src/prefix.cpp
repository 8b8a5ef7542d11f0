#include "forge/prefix.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "forge/ramsey.hpp"
#include "forge/tourney.hpp"

namespace forge {

namespace {

int ceil_log2(int v) {
  int bits = 0;
  while ((1 << bits) < v) ++bits;
  return bits;
}

std::string binary_label(int value, int bits) {
  std::string s(bits, '0');
  for (int b = 0; b < bits; ++b)
    if (value & (1 << (bits - 1 - b))) s[b] = '1';
  return s;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.size() >= prefix.size() &&
         std::equal(prefix.begin(), prefix.end(), s.begin());
}

// Adjacency between codewords plus the per-prefix split contributions:
// split0[x] holds codewords below x0 adjacent to something below x1.
struct CodeView {
  std::vector<std::string> code;
  std::map<std::string, std::vector<int>> preimage;
  std::map<std::string, std::set<std::string>> split0, split1;
  std::set<std::string> interior;  // proper prefixes of codewords

  int a0(const std::string& x) const {
    auto it = split0.find(x);
    return it == split0.end() ? 0 : static_cast<int>(it->second.size());
  }
  int a1(const std::string& x) const {
    auto it = split1.find(x);
    return it == split1.end() ? 0 : static_cast<int>(it->second.size());
  }
  int cost(const std::string& x) const {
    const int c0 = a0(x), c1 = a1(x);
    return (c0 == 0 || c1 == 0) ? 1 : std::min(c0, c1);
  }
};

CodeView analyze_code(const AcyclicDigraph& h, const PrefixLabeling& rho,
                      LabelingStats* stats) {
  if (static_cast<int>(rho.label.size()) != h.order())
    throw Error("labeling must cover every vertex");
  for (const auto& s : rho.label)
    for (char ch : s)
      if (ch != '0' && ch != '1')
        throw Error("codewords must be binary strings");

  CodeView view;
  for (int v = 0; v < h.order(); ++v) view.preimage[rho.label[v]].push_back(v);
  for (const auto& [word, verts] : view.preimage) view.code.push_back(word);

  if (!rho.declared_code.empty()) {
    std::set<std::string> declared(rho.declared_code.begin(),
                                   rho.declared_code.end());
    for (const auto& word : view.code)
      if (!declared.count(word))
        throw LabelingError(LabelingError::Kind::NotAPrefixCode,
                            "label '" + word + "' is not a declared codeword");
    if (declared.size() != view.code.size())
      throw LabelingError(LabelingError::Kind::NotSurjective,
                          "declared code has unused codewords");
  }

  for (std::size_t i = 0; i + 1 < view.code.size(); ++i)
    if (starts_with(view.code[i + 1], view.code[i]))
      throw LabelingError(LabelingError::Kind::NotAPrefixCode,
                          "'" + view.code[i] + "' is a prefix of '" +
                              view.code[i + 1] + "'");

  for (auto [u, v] : h.edges()) {
    const std::string& a = rho.label[u];
    const std::string& b = rho.label[v];
    if (a != b && !(a < b))
      throw LabelingError(LabelingError::Kind::OrderViolation,
                          "edge " + std::to_string(u) + "->" +
                              std::to_string(v) + " runs against the code order");
  }

  for (const auto& word : view.code)
    for (std::size_t len = 0; len < word.size(); ++len)
      view.interior.insert(word.substr(0, len));

  // Cross-codeword adjacency, attributed to the longest common prefix.
  std::set<std::pair<std::string, std::string>> adjacent_pairs;
  for (auto [u, v] : h.edges()) {
    const std::string& a = rho.label[u];
    const std::string& b = rho.label[v];
    if (a != b) adjacent_pairs.insert({std::min(a, b), std::max(a, b)});
  }
  std::map<std::string, int> adj_degree;
  for (const auto& [a, b] : adjacent_pairs) {
    ++adj_degree[a];
    ++adj_degree[b];
    std::size_t lcp = 0;
    while (lcp < a.size() && lcp < b.size() && a[lcp] == b[lcp]) ++lcp;
    const std::string x = a.substr(0, lcp);
    // a < b and neither is a prefix of the other, so a continues with 0.
    view.split0[x].insert(a);
    view.split1[x].insert(b);
  }

  if (stats) {
    stats->code = view.code;
    stats->depth = 0;
    for (const auto& word : view.code)
      stats->depth = std::max(stats->depth, static_cast<int>(word.size()));
    stats->max_degree = 0;
    for (auto& [word, deg] : adj_degree)
      stats->max_degree = std::max(stats->max_degree, deg);
    stats->max_component = 0;
    stats->is_coloring = true;
    stats->is_forest_labeling = true;
    for (const auto& [word, verts] : view.preimage) {
      for (const auto& comp : weak_components(h, verts))
        stats->max_component =
            std::max(stats->max_component, static_cast<int>(comp.size()));
      if (!induces_forest(h, verts)) stats->is_forest_labeling = false;
    }
    stats->is_coloring = stats->max_component <= 1;
    stats->complexity = 1.0;
    for (const auto& word : view.code) {
      double prod = 1.0;
      for (std::size_t len = 0; len < word.size(); ++len)
        prod *= view.cost(word.substr(0, len));
      stats->complexity = std::max(stats->complexity, prod);
    }
  }
  return view;
}

}  // namespace

LabelingStats labeling_stats(const AcyclicDigraph& h,
                             const PrefixLabeling& rho) {
  LabelingStats stats;
  analyze_code(h, rho, &stats);
  return stats;
}

PrefixLabeling height_prefix_coloring(const AcyclicDigraph& h) {
  const DirectedPartition parts = height_partition(h);
  const int bits = ceil_log2(parts.num_parts());
  PrefixLabeling rho;
  rho.label.assign(h.order(), "");
  for (int i = 0; i < parts.num_parts(); ++i)
    for (int v : parts.parts[i]) rho.label[v] = binary_label(i, bits);
  return rho;
}

PrefixLabeling graded_prefix_coloring(const AcyclicDigraph& h) {
  if (!is_graded(h)) throw Error("pattern is not graded");
  PrefixLabeling rho = height_prefix_coloring(h);
  const LabelingStats stats = labeling_stats(h, rho);
  if (stats.complexity != 1.0)
    throw std::logic_error("graded coloring must have complexity 1");
  return rho;
}

PrefixLabeling forest_prefix_labeling(const AcyclicDigraph& h,
                                      const DirectedPartition& partition) {
  if (!is_directed_partition(h, partition))
    throw Error("not a directed partition");
  if (!parts_all_one_degenerate(h, partition))
    throw Error("a part is not a forest");
  const int bits = ceil_log2(partition.num_parts());
  PrefixLabeling rho;
  rho.label.assign(h.order(), "");
  for (int i = 0; i < partition.num_parts(); ++i)
    for (int v : partition.parts[i]) rho.label[v] = binary_label(i, bits);
  return rho;
}

long long Skeleton::size() const {
  long long best = -1;
  for (const auto& [word, verts] : sets) {
    const long long sz = static_cast<long long>(verts.size());
    if (best < 0 || sz < best) best = sz;
  }
  return best < 0 ? 0 : best;
}

bool validate_skeleton(const AcyclicDigraph& h, const Tournament& t,
                       const PrefixLabeling& rho, const Skeleton& sk) {
  const CodeView view = analyze_code(h, rho, nullptr);
  for (const auto& word : view.code) {
    auto it = sk.sets.find(word);
    if (it == sk.sets.end() || it->second.empty()) return false;
  }
  std::set<std::pair<std::string, std::string>> pairs;
  for (auto [u, v] : h.edges()) {
    const std::string& a = rho.label[u];
    const std::string& b = rho.label[v];
    if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
  }
  for (const auto& [a, b] : pairs) {
    const auto& va = sk.sets.at(a);
    const auto& vb = sk.sets.at(b);
    if (sk.delta >= 1.0) {
      if (count_forward(t, vb, va) != 0) return false;
    } else if (validate_dense_pair(t, va, vb) < sk.delta - 1e-12) {
      return false;
    }
  }
  return true;
}

namespace {

long long count_in_from(const Tournament& t, const std::vector<int>& from,
                        int w) {
  long long cnt = 0;
  for (int x : from)
    if (x != w && t.beats(x, w)) ++cnt;
  return cnt;
}

long long count_out_to(const Tournament& t, int w,
                       const std::vector<int>& to) {
  long long cnt = 0;
  for (int x : to)
    if (x != w && t.beats(w, x)) ++cnt;
  return cnt;
}

struct SkeletonBuilder {
  const AcyclicDigraph& h;
  const Tournament& t;
  const PrefixLabeling& rho;
  const CodeView& view;
  double c;
  int d;
  bool force;
  std::set<std::string> codewords;
  Skeleton out;

  std::optional<Embedding> descend(const std::string& x, std::vector<int> vx) {
    if (codewords.count(x)) {
      out.sets[x] = std::move(vx);
      return std::nullopt;
    }
    const bool has0 = view.interior.count(x + "0") || codewords.count(x + "0");
    const bool has1 = view.interior.count(x + "1") || codewords.count(x + "1");
    if (!has0) return descend(x + "1", std::move(vx));
    if (!has1) return descend(x + "0", std::move(vx));

    const int a0 = view.a0(x), a1 = view.a1(x);
    if (a0 == 0 || a1 == 0) {
      // No adjacency crosses this boundary; both sides inherit V_x.
      if (auto e = descend(x + "0", vx)) return e;
      return descend(x + "1", std::move(vx));
    }

    const double cx = c / (4.0 * std::min(a0, a1));
    const Tournament sub = induced_tournament(t, vx);
    DenseOutcome split = [&] {
      try {
        return find_dense_pair(h, sub, cx);
      } catch (const PreconditionError& e) {
        throw PreconditionError("skeleton split at '" + x +
                                    "' lacks room: " + e.what(),
                                e.required_n);
      }
    }();
    if (std::holds_alternative<Embedding>(split)) {
      Embedding e = std::get<Embedding>(split);
      for (int& w : e.map) w = vx[w];
      return e;
    }
    const DensePair& pair = std::get<DensePair>(split);
    std::vector<int> src(pair.w1), tgt(pair.w2);
    for (int& w : src) w = vx[w];
    for (int& w : tgt) w = vx[w];
    std::sort(src.begin(), src.end());
    std::sort(tgt.begin(), tgt.end());

    if (a0 <= a1) {
      // 0-side first, inside the dense source; prune the 1-side afterwards
      // against every finished set adjacent across this boundary.
      std::vector<int> base;
      for (int w : src)
        if (static_cast<double>(count_in_from(t, tgt, w)) <=
            2.0 * cx * static_cast<double>(tgt.size()))
          base.push_back(w);
      if (auto e = descend(x + "0", std::move(base))) return e;

      std::vector<int> right = std::move(tgt);
      for (const auto& y : view.split0.at(x)) {
        const std::vector<int>& vy = out.sets.at(y);
        std::vector<int> keep;
        for (int u : right)
          if (static_cast<double>(count_out_to(t, u, vy)) <
              c * static_cast<double>(vy.size()))
            keep.push_back(u);
        right = std::move(keep);
      }
      return descend(x + "1", std::move(right));
    }

    // Mirrored roles: 1-side first inside the dense target.
    std::vector<int> base;
    for (int w : tgt)
      if (static_cast<double>(count_out_to(t, w, src)) <=
          2.0 * cx * static_cast<double>(src.size()))
        base.push_back(w);
    if (auto e = descend(x + "1", std::move(base))) return e;

    std::vector<int> left = std::move(src);
    for (const auto& z : view.split1.at(x)) {
      const std::vector<int>& vz = out.sets.at(z);
      std::vector<int> keep;
      for (int u : left)
        if (static_cast<double>(count_in_from(t, vz, u)) <
            c * static_cast<double>(vz.size()))
          keep.push_back(u);
      left = std::move(keep);
    }
    return descend(x + "0", std::move(left));
  }
};

// Marginal overlap between two skeleton sets can cost one ordered pair per
// shared vertex; shedding shared vertices from the larger set restores the
// exact density bound.
void repair_marginal_pairs(const AcyclicDigraph& h, const Tournament& t,
                           const PrefixLabeling& rho, Skeleton* sk) {
  std::set<std::pair<std::string, std::string>> pairs;
  for (auto [u, v] : h.edges()) {
    const std::string& a = rho.label[u];
    const std::string& b = rho.label[v];
    if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
  }
  for (const auto& [a, b] : pairs) {
    auto& va = sk->sets.at(a);
    auto& vb = sk->sets.at(b);
    if (validate_dense_pair(t, va, vb) >= sk->delta) continue;
    auto& larger = va.size() >= vb.size() ? va : vb;
    const auto& smaller = va.size() >= vb.size() ? vb : va;
    std::set<int> other(smaller.begin(), smaller.end());
    std::vector<int> kept;
    for (int w : larger)
      if (!other.count(w)) kept.push_back(w);
    if (!kept.empty()) larger = std::move(kept);
  }
}

}  // namespace

SkeletonOutcome build_skeleton(const AcyclicDigraph& h, const Tournament& t,
                               const PrefixLabeling& rho, double c,
                               bool force) {
  LabelingStats stats;
  const CodeView view = analyze_code(h, rho, &stats);
  if (c <= 0 || c >= 1) throw Error("skeleton parameter must be in (0,1)");

  const int n = h.order();
  const int delta = h.max_degree();
  const int d = degeneracy(h);
  const double required =
      delta == 0
          ? n
          : std::pow(std::pow(4.0, d + 1) * delta / std::pow(c, d),
                     stats.depth) *
                std::pow(stats.complexity, d) * n;
  if (!force && static_cast<double>(t.order()) < required)
    throw PreconditionError("host too small for skeleton construction",
                            static_cast<long long>(std::ceil(required)));

  std::vector<int> all(t.order());
  for (int w = 0; w < t.order(); ++w) all[w] = w;

  SkeletonBuilder builder{h,    t,
                          rho,  view,
                          c,    d,
                          force, {stats.code.begin(), stats.code.end()},
                          {}};
  builder.out.delta = 1.0 - c;
  if (auto e = builder.descend("", std::move(all))) return *e;

  Skeleton sk = std::move(builder.out);
  repair_marginal_pairs(h, t, rho, &sk);
  if (!validate_skeleton(h, t, rho, sk))
    throw std::logic_error("skeleton failed its own density re-validation");
  if (!force && delta > 0) {
    const double size_bound =
        std::pow(std::pow(c, d) / (std::pow(4.0, d + 1) * delta),
                 stats.depth) *
        std::pow(stats.complexity, -d) * t.order();
    if (static_cast<double>(sk.size()) < std::floor(size_bound))
      throw std::logic_error("skeleton size fell below its guarantee");
  }
  return sk;
}

namespace {

// One split of the 1-dense construction: build a fine skeleton for the
// forest labeling inside `vx`, refine it, then embed the parts one at a
// time; a failed part yields the 1-dense pair (in global indices).
DenseOutcome one_dense_split(const AcyclicDigraph& h, const Tournament& t,
                             const std::vector<int>& vx,
                             const PrefixLabeling& rho1,
                             const LabelingStats& s1, bool force) {
  const int delta = std::max(1, h.max_degree());
  const int a1_deg = std::max(1, s1.max_degree);
  const double c1 = 1.0 / (16.0 * a1_deg * delta);

  const Tournament sub = induced_tournament(t, vx);
  SkeletonOutcome skel_out = [&] {
    try {
      return build_skeleton(h, sub, rho1, c1, force);
    } catch (const PreconditionError& e) {
      throw PreconditionError(
          std::string("inner forest skeleton lacks room: ") + e.what(),
          e.required_n);
    }
  }();
  if (std::holds_alternative<Embedding>(skel_out)) {
    Embedding e = std::get<Embedding>(skel_out);
    for (int& w : e.map) w = vx[w];
    return e;
  }
  const Skeleton& skel = std::get<Skeleton>(skel_out);

  // Drop vertices with high reverse in-degree toward any adjacent later set.
  std::set<std::pair<std::string, std::string>> pairs;
  for (auto [u, v] : h.edges()) {
    const std::string& a = rho1.label[u];
    const std::string& b = rho1.label[v];
    if (a != b) pairs.insert({std::min(a, b), std::max(a, b)});
  }
  std::map<std::string, std::vector<int>> refined;
  for (const auto& [word, verts] : skel.sets) {
    std::vector<int> keep;
    for (int w : verts) {
      bool ok = true;
      for (const auto& [a, b] : pairs) {
        if (a != word) continue;
        const auto& vb = skel.sets.at(b);
        if (static_cast<double>(count_in_from(sub, vb, w)) >=
            static_cast<double>(vb.size()) / (8.0 * delta)) {
          ok = false;
          break;
        }
      }
      if (ok) keep.push_back(w);
    }
    refined[word] = std::move(keep);
  }

  // Sequential part embedding in code order.
  std::vector<std::vector<int>> cand(h.order());
  std::map<std::string, std::vector<int>> preimage;
  for (int v = 0; v < h.order(); ++v) {
    preimage[rho1.label[v]].push_back(v);
    cand[v] = refined.at(rho1.label[v]);
  }

  std::vector<int> image(h.order(), -1);
  for (const auto& word : s1.code) {
    const std::vector<int>& part = preimage.at(word);
    const AcyclicDigraph part_h = induced_subgraph(h, part);
    std::vector<std::vector<int>> part_sets(part.size());
    for (std::size_t i = 0; i < part.size(); ++i) part_sets[i] = cand[part[i]];

    DenseOutcome out = [&] {
      try {
        return forest_dense_pair(part_h, sub, part_sets);
      } catch (const PreconditionError& e) {
        throw PreconditionError(
            std::string("part embedding lacks candidates: ") + e.what(),
            e.required_n);
      }
    }();
    if (std::holds_alternative<DensePair>(out)) {
      DensePair pair = std::get<DensePair>(out);
      for (int& w : pair.w1) w = vx[w];
      for (int& w : pair.w2) w = vx[w];
      return pair;
    }

    const Embedding& e = std::get<Embedding>(out);
    std::vector<char> used(sub.order(), 0);
    for (std::size_t i = 0; i < part.size(); ++i) {
      image[part[i]] = e.map[i];
      used[e.map[i]] = 1;
    }
    for (int v = 0; v < h.order(); ++v) {
      if (image[v] >= 0) continue;
      std::vector<int> next;
      for (int u : cand[v])
        if (!used[u]) next.push_back(u);
      cand[v] = std::move(next);
      for (int w : h.in(v))
        if (image[w] >= 0 && rho1.label[w] == word) {
          std::vector<int> filtered;
          for (int u : cand[v])
            if (sub.beats(image[w], u)) filtered.push_back(u);
          cand[v] = std::move(filtered);
        }
    }
  }

  Embedding full;
  full.map.resize(h.order());
  for (int v = 0; v < h.order(); ++v) full.map[v] = vx[image[v]];
  return full;
}

}  // namespace

double two_labeling_gamma(int m1, int a1, int maxdeg, int d, int depth1,
                          double comp1) {
  const double core = std::pow(
      1024.0 * std::max(1, a1) * std::max(1, maxdeg) * std::max(1, maxdeg),
      static_cast<double>(d) * depth1);
  return 1.0 / (std::max(1, m1) * core * std::pow(comp1, d));
}

SkeletonOutcome biclique_skeleton(const AcyclicDigraph& h, const Tournament& t,
                                  const PrefixLabeling& rho1,
                                  const PrefixLabeling& rho2, bool force) {
  LabelingStats s1, s2;
  const CodeView view1 = analyze_code(h, rho1, &s1);
  const CodeView view2 = analyze_code(h, rho2, &s2);
  (void)view1;
  if (!s1.is_forest_labeling)
    throw Error("first labeling must be a forest prefix labeling");

  const int n = h.order();
  const int delta = h.max_degree();
  const int d = degeneracy(h);
  const double gamma =
      delta == 0 ? 0.5
                 : std::min(0.5, two_labeling_gamma(s1.max_component,
                                                    s1.max_degree, delta, d,
                                                    s1.depth, s1.complexity));
  const double required = std::pow(gamma, -s2.depth) * n;
  if (!force && static_cast<double>(t.order()) < required)
    throw PreconditionError("host too small for the 1-dense skeleton",
                            static_cast<long long>(std::ceil(required)));

  Skeleton sk;
  sk.delta = 1.0;
  std::set<std::string> codewords(s2.code.begin(), s2.code.end());

  std::optional<Embedding> found;
  std::function<void(const std::string&, std::vector<int>)> descend =
      [&](const std::string& x, std::vector<int> vx) {
        if (found) return;
        if (codewords.count(x)) {
          sk.sets[x] = std::move(vx);
          return;
        }
        const bool has0 =
            view2.interior.count(x + "0") || codewords.count(x + "0");
        const bool has1 =
            view2.interior.count(x + "1") || codewords.count(x + "1");
        if (!has0) return descend(x + "1", std::move(vx));
        if (!has1) return descend(x + "0", std::move(vx));

        if (view2.a0(x) == 0 || view2.a1(x) == 0) {
          // No adjacency across the boundary: halve for disjointness only.
          const std::size_t half = (vx.size() + 1) / 2;
          std::vector<int> lo(vx.begin(), vx.begin() + half);
          std::vector<int> hi(vx.begin() + half, vx.end());
          descend(x + "0", std::move(lo));
          if (!found) descend(x + "1", std::move(hi));
          return;
        }

        DenseOutcome out = one_dense_split(h, t, vx, rho1, s1, force);
        if (std::holds_alternative<Embedding>(out)) {
          found = std::get<Embedding>(out);
          return;
        }
        DensePair pair = std::get<DensePair>(out);
        descend(x + "0", std::move(pair.w1));
        if (!found) descend(x + "1", std::move(pair.w2));
      };

  std::vector<int> all(t.order());
  for (int w = 0; w < t.order(); ++w) all[w] = w;
  descend("", std::move(all));
  if (found) return *found;

  if (!validate_skeleton(h, t, rho2, sk))
    throw std::logic_error("1-dense skeleton failed re-validation");
  if (!force &&
      static_cast<double>(sk.size()) <
          std::floor(std::pow(gamma, s2.depth) * t.order()))
    throw std::logic_error("1-dense skeleton size fell below its guarantee");
  return sk;
}

Embedding embed_via_coloring(const AcyclicDigraph& h, const Tournament& t,
                             std::optional<PrefixLabeling> rho, bool force) {
  const PrefixLabeling coloring = rho ? *rho : height_prefix_coloring(h);
  const LabelingStats stats = labeling_stats(h, coloring);
  if (!stats.is_coloring)
    throw Error("embed_via_coloring requires a prefix coloring");

  const int n = h.order();
  const int delta = h.max_degree();
  if (delta == 0) {
    if (t.order() < n) throw PreconditionError("host smaller than pattern", n);
    Embedding e;
    e.map.resize(n);
    for (int v = 0; v < n; ++v) e.map[v] = v;
    return e;
  }

  const double required =
      coloring_pipeline_bound(n, delta, stats.depth, stats.complexity);
  if (!force && static_cast<double>(t.order()) < required)
    throw PreconditionError("host below the coloring pipeline bound",
                            static_cast<long long>(std::ceil(required)));

  const double c = 1.0 / (8.0 * delta * delta);
  SkeletonOutcome out = build_skeleton(h, t, coloring, c, force);
  if (std::holds_alternative<Embedding>(out)) {
    Embedding e = std::get<Embedding>(out);
    if (!validate_embedding(h, t, e))
      throw std::logic_error("skeleton-phase embedding failed validation");
    return e;
  }
  const Skeleton& sk = std::get<Skeleton>(out);
  std::vector<std::vector<int>> sets(n);
  for (int v = 0; v < n; ++v) sets[v] = sk.sets.at(coloring.label[v]);
  Embedding e = [&] {
    try {
      return inner_stage(h, t, sets);
    } catch (const PreconditionError& err) {
      throw PreconditionError(std::string("inner stage rejected skeleton: ") +
                                  err.what(),
                              err.required_n);
    }
  }();
  if (!validate_embedding(h, t, e))
    throw std::logic_error("inner-stage embedding failed validation");
  return e;
}

Embedding embed_via_two_labelings(
    const AcyclicDigraph& h, const Tournament& t, const PrefixLabeling& rho1,
    const PrefixLabeling& rho2, bool force,
    std::function<long long(const AcyclicDigraph&)> part_ramsey) {
  LabelingStats s1 = labeling_stats(h, rho1);
  LabelingStats s2 = labeling_stats(h, rho2);
  if (!s1.is_forest_labeling)
    throw Error("first labeling must be a forest prefix labeling");

  if (!part_ramsey) {
    part_ramsey = [](const AcyclicDigraph& part) -> long long {
      const int m = part.order();
      if (m <= 1) return 1;
      std::vector<int> all(m);
      for (int v = 0; v < m; ++v) all[v] = v;
      if (induces_forest(part, all))
        return static_cast<long long>(
            std::ceil(21.0 * m / 8.0 - 47.0 / 16.0));
      if (m <= 6) {
        const RamseyResult r = oriented_ramsey_1(part, 10);
        if (!r.exhaustive || r.value < 0)
          throw Error("exhaustive part estimate inconclusive");
        return r.value;
      }
      throw Error("non-forest part of 7+ vertices needs a caller estimate");
    };
  }

  std::map<std::string, std::vector<int>> preimage;
  for (int v = 0; v < h.order(); ++v) preimage[rho2.label[v]].push_back(v);
  long long worst_part = h.order();
  for (const auto& [word, verts] : preimage)
    worst_part = std::max(worst_part, part_ramsey(induced_subgraph(h, verts)));

  const int delta = h.max_degree();
  const int d = degeneracy(h);
  const double gamma =
      delta == 0 ? 0.5
                 : std::min(0.5, two_labeling_gamma(s1.max_component,
                                                    s1.max_degree, delta, d,
                                                    s1.depth, s1.complexity));
  const double required =
      std::pow(gamma, -s2.depth) * static_cast<double>(worst_part);
  if (!force && static_cast<double>(t.order()) < required)
    throw PreconditionError("host below the two-labeling pipeline bound",
                            static_cast<long long>(std::ceil(required)));

  SkeletonOutcome out = biclique_skeleton(h, t, rho1, rho2, force);
  if (std::holds_alternative<Embedding>(out)) {
    Embedding e = std::get<Embedding>(out);
    if (!validate_embedding(h, t, e))
      throw std::logic_error("skeleton-phase embedding failed validation");
    return e;
  }
  const Skeleton& sk = std::get<Skeleton>(out);

  Embedding full;
  full.map.assign(h.order(), -1);
  for (const auto& [word, verts] : preimage) {
    const std::vector<int>& host_set = sk.sets.at(word);
    const AcyclicDigraph part_h = induced_subgraph(h, verts);
    const Tournament host = induced_tournament(t, host_set);
    const auto e = contains_copy(host, part_h);
    if (!e)
      throw Error("part embedding failed although |V_x| >= r1(part)");
    for (std::size_t i = 0; i < verts.size(); ++i)
      full.map[verts[i]] = host_set[e->map[i]];
  }
  if (!validate_embedding(h, t, full))
    throw std::logic_error("two-labeling embedding failed validation");
  return full;
}

ForestPartitionReport forest_partition(const AcyclicDigraph& h) {
  ForestPartitionReport report;
  std::vector<int> part_of(h.order(), -1);
  std::vector<std::vector<int>> parts;

  for (int v : h.topo_order()) {
    int lowest = 0;
    for (int u : h.in(v)) lowest = std::max(lowest, part_of[u]);
    int chosen = -1;
    for (int i = lowest; i < static_cast<int>(parts.size()); ++i) {
      std::vector<int> candidate = parts[i];
      candidate.push_back(v);
      if (induces_forest(h, candidate)) {
        chosen = i;
        break;
      }
    }
    if (chosen < 0) {
      parts.push_back({});
      chosen = static_cast<int>(parts.size()) - 1;
    }
    parts[chosen].push_back(v);
    part_of[v] = chosen;
  }

  report.partition.parts = std::move(parts);
  if (!is_directed_partition(h, report.partition) ||
      !parts_all_one_degenerate(h, report.partition))
    throw std::logic_error("forest partition failed its own validation");
  report.parts = report.partition.num_parts();
  report.max_component = 0;
  for (const auto& part : report.partition.parts)
    for (const auto& comp : weak_components(h, part))
      report.max_component =
          std::max(report.max_component, static_cast<int>(comp.size()));
  return report;
}

double coloring_pipeline_bound(int n, int maxdeg, int depth, double comp) {
  if (maxdeg == 0) return n;
  return std::pow(std::pow(2.0, 5.0 * maxdeg + 4) *
                      std::pow(static_cast<double>(maxdeg), 2.0 * maxdeg + 1),
                  depth) *
         std::pow(comp, maxdeg) * n;
}

}  // namespace forge
