#include "forge/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace forge {

MonotoneFunction MonotoneFunction::constant(double c) {
  if (c <= 0) throw Error("constant f must be positive");
  MonotoneFunction f;
  f.kind_ = Kind::Constant;
  f.c_ = c;
  f.desc_ = "const:" + std::to_string(c);
  return f;
}

MonotoneFunction MonotoneFunction::closed_form(double t) {
  if (t < 3) throw Error("closed-form f requires t >= 3");
  MonotoneFunction f;
  f.kind_ = Kind::ClosedForm;
  f.c_ = t;
  f.desc_ = "paper:" + std::to_string(t);
  return f;
}

MonotoneFunction MonotoneFunction::table(std::vector<double> values) {
  if (values.empty()) throw Error("table f must be nonempty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) throw Error("table f must be positive");
    if (i > 0 && values[i] < values[i - 1])
      throw Error("table f must be nondecreasing");
  }
  MonotoneFunction f;
  f.kind_ = Kind::Table;
  f.table_ = std::move(values);
  f.desc_ = "table:" + std::to_string(f.table_.size()) + "-entries";
  return f;
}

double MonotoneFunction::operator()(long long s) const {
  switch (kind_) {
    case Kind::Constant:
      return c_;
    case Kind::ClosedForm: {
      const double t = c_;
      if (s < 4) return 40.0 * std::pow(t, 1.5) * std::log2(t);
      const double ls = std::log2(static_cast<double>(s));
      return 10.0 * static_cast<double>(s) * static_cast<double>(s) *
             std::pow(t, 1.5) * std::log2(t) / (ls * ls);
    }
    case Kind::Table: {
      const std::size_t i =
          std::min<std::size_t>(static_cast<std::size_t>(s), table_.size());
      return table_[i - 1];
    }
  }
  return 0;  // unreachable
}

MonotoneFunction MonotoneFunction::parse(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error("bad f spec '" + spec + "': expected const:<c>|paper:<t>|table:v,...");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "const") return constant(std::stod(rest));
  if (kind == "paper") return closed_form(std::stod(rest));
  if (kind == "table") {
    std::vector<double> vals;
    std::size_t pos = 0;
    while (pos < rest.size()) {
      auto comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      vals.push_back(std::stod(rest.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return table(std::move(vals));
  }
  throw Error("unknown f kind '" + kind + "'");
}

double truncated_degree_sum(const MonotoneFunction& f, int n) {
  double s = 0.0;
  for (int m = 0; (1LL << (m + 2)) <= 4LL * n; ++m)
    s += f(1LL << (m + 2)) * std::pow(0.25, m);
  return s;
}

AcyclicDigraph build_interval_mesh(const MonotoneFunction& f, int n) {
  if (n < 1) throw Error("mesh size must be >= 1");
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<int> deg(n, 0);
  std::vector<std::pair<int, int>> edges;

  // Lowest-degree vertex in [lo, hi); ties go to the smallest index.
  auto lowest = [&](int lo, int hi) {
    int best = lo;
    for (int v = lo + 1; v < hi; ++v)
      if (deg[v] < deg[best]) best = v;
    return best;
  };
  auto have_edge_between = [&](int lo1, int hi1, int lo2, int hi2) {
    for (int u = lo1; u < hi1; ++u)
      for (int v = lo2; v < hi2; ++v)
        if (adj[u][v]) return true;
    return false;
  };

  for (int m = 0; (2LL << m) <= n; ++m) {
    const long long len = 1LL << m;
    const long long blocks = n / len;  // only intervals fully inside [n]
    const double reach = f(4 * len) / static_cast<double>(len) + 4.0;
    for (long long i = 0; i + 1 < blocks; ++i) {
      for (long long j = i + 1; j < blocks; ++j) {
        if (static_cast<double>(j - i) > reach) break;
        const int lo1 = static_cast<int>(i * len), hi1 = static_cast<int>((i + 1) * len);
        const int lo2 = static_cast<int>(j * len), hi2 = static_cast<int>((j + 1) * len);
        if (have_edge_between(lo1, hi1, lo2, hi2)) continue;
        const int u = lowest(lo1, hi1);
        const int v = lowest(lo2, hi2);
        adj[u][v] = 1;
        ++deg[u];
        ++deg[v];
        edges.emplace_back(u, v);
      }
    }
  }
  return AcyclicDigraph(n, std::move(edges));
}

namespace {

struct VerifySlice {
  long long checked = 0;
  std::optional<MeshCertificate::IntervalPair> witness;  // lexicographic first
};

// Scans interval pairs with a1 in [a1_lo, a1_hi) in lexicographic
// (a1, b1, a2, b2) order. The slice runs to completion so that the reported
// pair count is a pure function of (h, f), independent of thread count;
// only the lexicographically first violation is recorded.
VerifySlice verify_range(const std::vector<std::vector<long long>>& pre,
                         const MonotoneFunction& f, int n, int a1_lo,
                         int a1_hi) {
  VerifySlice out;
  auto edge_count = [&](int lo1, int hi1, int lo2, int hi2) {
    return pre[hi1][hi2] - pre[lo1][hi2] - pre[hi1][lo2] + pre[lo1][lo2];
  };
  for (int a1 = a1_lo; a1 < a1_hi; ++a1) {
    for (int b1 = a1 + 1; b1 <= n - 1; ++b1) {
      const int len1 = b1 - a1;
      const double max_gap = f(len1);
      for (int a2 = b1; a2 <= n - 1; ++a2) {
        const double gap = a2 - b1;
        if (gap > max_gap) break;
        for (int b2 = a2 + 1; b2 <= n; ++b2) {
          const int len2 = b2 - a2;
          if (gap > f(std::min(len1, len2))) continue;
          ++out.checked;
          if (!out.witness && edge_count(a1, b1, a2, b2) == 0)
            out.witness = MeshCertificate::IntervalPair{a1, b1, a2, b2};
        }
      }
    }
  }
  return out;
}

}  // namespace

MeshCertificate verify_interval_mesh(const AcyclicDigraph& h,
                                     const MonotoneFunction& f, int threads) {
  const int n = h.order();
  for (auto [u, v] : h.edges())
    if (u >= v) throw Error("mesh verification requires all edges forward");

  MeshCertificate cert;
  cert.n = n;
  cert.f_desc = f.describe();
  cert.max_degree = h.max_degree();
  cert.truncated_s = truncated_degree_sum(f, n);
  cert.degree_bound_ok = cert.max_degree <= 2 * cert.truncated_s + 17;

  // pre[i][j] = number of edges (u,v) with u < i and v < j.
  std::vector<std::vector<long long>> pre(
      n + 1, std::vector<long long>(n + 1, 0));
  for (auto [u, v] : h.edges()) ++pre[u + 1][v + 1];
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      pre[i][j] += pre[i - 1][j] + pre[i][j - 1] - pre[i - 1][j - 1];

  threads = std::max(1, threads);
  if (threads == 1 || n < 8) {
    auto slice = verify_range(pre, f, n, 0, n);
    cert.pairs_checked = slice.checked;
    cert.witness = slice.witness;
  } else {
    std::vector<std::future<VerifySlice>> futs;
    const int chunk = (n + threads - 1) / threads;
    for (int lo = 0; lo < n; lo += chunk) {
      const int hi = std::min(n, lo + chunk);
      futs.push_back(std::async(std::launch::async, verify_range,
                                std::cref(pre), std::cref(f), n, lo, hi));
    }
    for (auto& fu : futs) {
      auto slice = fu.get();
      cert.pairs_checked += slice.checked;
      if (slice.witness && !cert.witness) cert.witness = slice.witness;
    }
  }
  cert.pass = !cert.witness.has_value();
  return cert;
}

AcyclicDigraph restrict_window(const AcyclicDigraph& h, int lo, int hi) {
  if (lo < 0 || hi > h.order() || lo > hi)
    throw Error("restrict window out of range");
  std::vector<int> vertices(hi - lo);
  for (int i = lo; i < hi; ++i) vertices[i - lo] = i;
  return induced_subgraph(h, vertices);
}

}  // namespace forge
