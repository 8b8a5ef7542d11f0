#include "forge/walks.hpp"

#include <algorithm>

namespace forge {

std::string WalkViolation::describe() const {
  switch (kind) {
    case Kind::RunOutOfRange:
      return "run " + std::to_string(i) + " out of range";
    case Kind::ConsecutiveEqual:
      return "runs " + std::to_string(i) + "," + std::to_string(i + 1) +
             " repeat a vertex";
    case Kind::BackEdgeTooClose:
      return "back-edge pair (" + std::to_string(i) + "," +
             std::to_string(j) + ") too close";
  }
  return "";
}

std::optional<WalkViolation> walk_violation(const Tournament& r,
                                            const MonotoneFunction& f, int s,
                                            const Walk& walk) {
  const int ell = static_cast<int>(walk.runs.size());
  for (int i = 0; i < ell; ++i) {
    const auto [v, a] = walk.runs[i];
    if (v < 0 || v >= r.order() || a < 1 || a > s)
      return WalkViolation{WalkViolation::Kind::RunOutOfRange, i + 1, -1};
  }
  for (int i = 0; i + 1 < ell; ++i)
    if (walk.runs[i].first == walk.runs[i + 1].first)
      return WalkViolation{WalkViolation::Kind::ConsecutiveEqual, i + 1, -1};

  std::vector<long long> prefix(ell + 1, 0);
  for (int i = 0; i < ell; ++i) prefix[i + 1] = prefix[i] + walk.runs[i].second;
  for (int i = 0; i < ell; ++i)
    for (int j = i + 1; j < ell; ++j) {
      const int vi = walk.runs[i].first, vj = walk.runs[j].first;
      if (vi == vj) continue;
      if (!r.beats(vj, vi)) continue;  // only back-edges v_i <- v_j
      const long long between = prefix[j] - prefix[i + 1];
      const long long cap = std::min(walk.runs[i].second, walk.runs[j].second);
      if (!(static_cast<double>(between) > f(cap)))
        return WalkViolation{WalkViolation::Kind::BackEdgeTooClose, i + 1,
                             j + 1};
    }
  return std::nullopt;
}

bool is_valid_walk(const Tournament& r, const MonotoneFunction& f, int s,
                   const Walk& walk) {
  return !walk_violation(r, f, s, walk).has_value();
}

Walk extract_walk(const Embedding& phi, int n, int r_order, int m) {
  long long block = 1;
  for (int i = 1; i < m; ++i) block *= r_order;
  Walk walk;
  for (int j = 0; j < n; ++j) {
    const int head = static_cast<int>(phi.map[j] / block);
    if (!walk.runs.empty() && walk.runs.back().first == head)
      ++walk.runs.back().second;
    else
      walk.runs.push_back({head, 1});
  }
  return walk;
}

namespace {

struct WalkSearch {
  const Tournament& r;
  const MonotoneFunction& f;
  int s;
  long long budget;
  long long visited = 0;
  bool truncated = false;

  std::vector<std::pair<int, int>> runs;
  std::vector<long long> prefix{0};
  Walk best;
  long long best_length = 0;

  bool extension_valid(int v, int a) {
    const int ell = static_cast<int>(runs.size());
    if (ell > 0 && runs.back().first == v) return false;
    const long long end = prefix.back() + a;
    for (int i = 0; i < ell; ++i) {
      if (runs[i].first == v) continue;
      if (!r.beats(v, runs[i].first)) continue;  // back-edge v_i <- v_new
      const long long between = prefix[ell] - prefix[i + 1];
      const long long cap = std::min<long long>(runs[i].second, a);
      if (!(static_cast<double>(between) > f(cap))) return false;
    }
    (void)end;
    return true;
  }

  void dfs() {
    if (++visited > budget) {
      truncated = true;
      return;
    }
    const long long len = prefix.back();
    if (len > best_length) {
      best_length = len;
      best.runs = runs;
    }
    for (int v = 0; v < r.order() && !truncated; ++v)
      for (int a = s; a >= 1 && !truncated; --a) {
        if (!extension_valid(v, a)) continue;
        runs.push_back({v, a});
        prefix.push_back(prefix.back() + a);
        dfs();
        runs.pop_back();
        prefix.pop_back();
      }
  }
};

}  // namespace

GrowthEstimate longest_walk(const Tournament& r, const MonotoneFunction& f,
                            int s, long long budget) {
  WalkSearch search{r, f, s, budget, 0, false, {}, {0}, {}, 0};
  search.dfs();
  GrowthEstimate est;
  est.s = s;
  est.best_length = search.best_length;
  est.exact = !search.truncated;
  est.best = search.best;
  est.nodes_visited = search.visited;
  return est;
}

ShortnessReport shortness_probe(const Tournament& r, const MonotoneFunction& f,
                                int s_lo, int s_hi, double t,
                                long long budget) {
  ShortnessReport report;
  report.t = t;
  report.t_in_lemma_range = t >= 1e6;
  for (int s = s_lo; s <= s_hi; ++s) {
    const GrowthEstimate est = longest_walk(r, f, s, budget);
    ShortnessLine line;
    line.s = s;
    line.best_length = est.best_length;
    line.exact = est.exact;
    line.within_2st = static_cast<double>(est.best_length) <= 2.0 * s * t;
    line.within_f = static_cast<double>(est.best_length) <= f(s);
    line.hypothesis_hold = f(s) > 6.0 * s * t * t;
    report.lines.push_back(line);
  }
  return report;
}

}  // namespace forge
