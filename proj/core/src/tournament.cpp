#include "forge/tournament.hpp"

namespace forge {

int Tournament::out_degree(int v) const {
  int deg = 0;
  for (int u = 0; u < n_; ++u)
    if (u != v && beats(v, u)) ++deg;
  return deg;
}

std::vector<int> Tournament::out_neighbors(int v) const {
  std::vector<int> nb;
  for (int u = 0; u < n_; ++u)
    if (u != v && beats(v, u)) nb.push_back(u);
  return nb;
}

std::vector<int> Tournament::in_neighbors(int v) const {
  std::vector<int> nb;
  for (int u = 0; u < n_; ++u)
    if (u != v && beats(u, v)) nb.push_back(u);
  return nb;
}

Tournament Tournament::transitive(int n) {
  Tournament t(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) t.set_forward(i, j, true);
  return t;
}

Tournament induced_tournament(const Tournament& t,
                              const std::vector<int>& vertices) {
  Tournament sub(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      sub.set_forward(static_cast<int>(i), static_cast<int>(j),
                      t.beats(vertices[i], vertices[j]));
  return sub;
}

bool validate_embedding(const AcyclicDigraph& h, const Tournament& t,
                        const Embedding& phi) {
  if (static_cast<int>(phi.map.size()) != h.order()) return false;
  std::vector<char> used(t.order(), 0);
  for (int img : phi.map) {
    if (img < 0 || img >= t.order() || used[img]) return false;
    used[img] = 1;
  }
  for (auto [u, v] : h.edges())
    if (!t.beats(phi.map[u], phi.map[v])) return false;
  return true;
}

}  // namespace forge
