#include "throttle/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace throttle {

namespace {

using Coloring = std::vector<int>;

int cell_count(const Coloring& c) { return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1; }

// Splits cells by the multiset of neighbor colors until stable. Cell order is
// inherited from the old color, so the result is isomorphism-invariant.
void refine(const Graph& g, Coloring& colors) {
  const int n = g.order();
  int cells = cell_count(colors);
  std::vector<std::pair<std::vector<int>, Vertex>> sig(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[v].first;
      s.clear();
      s.push_back(colors[v]);
      std::vector<int> nbr;
      for (Mask m = g.adj(v); m; m &= m - 1) nbr.push_back(colors[std::countr_zero(m)]);
      std::sort(nbr.begin(), nbr.end());
      s.insert(s.end(), nbr.begin(), nbr.end());
      sig[v].second = v;
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    int rank = -1;
    const std::vector<int>* prev = nullptr;
    for (auto& [s, v] : sorted) {
      if (!prev || s != *prev) ++rank;
      colors[v] = rank;
      prev = &s;
    }
    if (rank + 1 == cells) return;
    cells = rank + 1;
  }
}

std::vector<Mask> rows_under(const Graph& g, const Coloring& pos) {
  std::vector<Mask> rows(g.order(), 0);
  for (const Edge& e : g.edges()) {
    rows[pos[e.u]] |= bit(pos[e.v]);
    rows[pos[e.v]] |= bit(pos[e.u]);
  }
  return rows;
}

void search(const Graph& g, Coloring colors, CanonicalForm& best, bool& have_best) {
  refine(g, colors);
  const int n = g.order();
  if (cell_count(colors) == n) {
    auto rows = rows_under(g, colors);
    if (!have_best || rows < best.rows) {
      best.rows = std::move(rows);
      best.permutation.assign(colors.begin(), colors.end());
      have_best = true;
    }
    return;
  }
  // First non-singleton cell, by color.
  std::vector<int> sizes(n, 0);
  for (int c : colors) ++sizes[c];
  int target = 0;
  while (sizes[target] == 1) ++target;
  for (Vertex v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    Coloring next = colors;
    for (Vertex u = 0; u < n; ++u)
      if (colors[u] > target || (colors[u] == target && u != v)) ++next[u];
    search(g, std::move(next), best, have_best);
  }
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  CanonicalForm best;
  bool have_best = false;
  Coloring colors(g.order());
  for (Vertex v = 0; v < g.order(); ++v) colors[v] = g.degree(v);
  // Degrees are not contiguous; normalize to ranks.
  std::vector<int> distinct(colors);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int& c : colors) c = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin());
  search(g, std::move(colors), best, have_best);
  return best;
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("permutation size mismatch");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  std::sort(edges.begin(), edges.end());
  return Graph(g.order(), edges);
}

Graph canonical_graph(const Graph& g) { return relabel(g, canonical_form(g).permutation); }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a).rows == canonical_form(b).rows;
}

}  // namespace throttle
