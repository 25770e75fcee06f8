#pragma once

// Slow, direct implementations used only to cross-check the library.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "throttle/graph.hpp"

namespace oracle {

using throttle::Graph;
using throttle::Vertex;

inline std::vector<std::vector<Vertex>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<Vertex>> adj(g.order());
  for (const auto& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

inline std::vector<bool> from_mask(int n, std::uint64_t m) {
  std::vector<bool> out(n);
  for (int i = 0; i < n; ++i) out[i] = (m >> i) & 1;
  return out;
}

enum class Rule { Standard, Psd, Power };

/// One simultaneous step; `first` marks the power-domination step.
inline std::vector<bool> next_fill(Rule rule, const std::vector<std::vector<Vertex>>& adj,
                                   const std::vector<bool>& filled, bool first) {
  const int n = static_cast<int>(filled.size());
  std::vector<bool> add(n, false);
  if (rule == Rule::Power && first) {
    for (int v = 0; v < n; ++v)
      if (filled[v])
        for (Vertex w : adj[v])
          if (!filled[w]) add[w] = true;
    return add;
  }
  // Component label of each unfilled vertex in G - filled (all one label for the standard rule).
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (filled[s] || comp[s] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex w : adj[x])
        if (!filled[w] && comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  for (int v = 0; v < n; ++v) {
    if (!filled[v]) continue;
    std::vector<std::vector<Vertex>> by_comp(std::max(next, 1));
    for (Vertex w : adj[v])
      if (!filled[w]) by_comp[rule == Rule::Psd ? comp[w] : 0].push_back(w);
    for (const auto& part : by_comp)
      if (part.size() == 1) add[part[0]] = true;
  }
  return add;
}

/// Propagation time, or nullopt if the process stalls.
inline std::optional<int> propagation_time(Rule rule, const Graph& g, std::uint64_t initial) {
  const auto adj = adjacency_lists(g);
  auto filled = from_mask(g.order(), initial);
  for (int t = 0;; ++t) {
    if (std::all_of(filled.begin(), filled.end(), [](bool b) { return b; })) return t;
    auto add = next_fill(rule, adj, filled, t == 0);
    bool any = false;
    for (std::size_t i = 0; i < add.size(); ++i)
      if (add[i] && !filled[i]) filled[i] = any = true;
    if (!any) return std::nullopt;
  }
}

inline bool dominates(const Graph& g, std::uint64_t d) {
  const auto adj = adjacency_lists(g);
  for (int v = 0; v < g.order(); ++v) {
    bool ok = (d >> v) & 1;
    for (Vertex w : adj[v]) ok = ok || ((d >> w) & 1);
    if (!ok) return false;
  }
  return true;
}

inline int domination_number(const Graph& g) {
  int best = g.order();
  for (std::uint64_t d = 0; d < (std::uint64_t{1} << g.order()); ++d)
    if (dominates(g, d)) best = std::min(best, __builtin_popcountll(d));
  return best;
}

/// kind: 0 sum, 1 initial-cost product, 2 no-initial-cost product.
inline std::optional<std::uint64_t> throttling(Rule rule, int kind, const Graph& g) {
  std::optional<std::uint64_t> best;
  const std::uint64_t full = (std::uint64_t{1} << g.order()) - 1;
  for (std::uint64_t b = 1; b <= full; ++b) {
    if (kind == 2 && b == full) continue;
    auto t = propagation_time(rule, g, b);
    if (!t) continue;
    const std::uint64_t k = __builtin_popcountll(b);
    const std::uint64_t value = kind == 0 ? k + *t : kind == 1 ? k * (1 + *t) : k * *t;
    if (!best || value < *best) best = value;
  }
  return best;
}

/// Isomorphism by trying every permutation.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = a.edges();
  do {
    bool ok = true;
    for (const auto& e : edges)
      if (!b.adjacent(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
