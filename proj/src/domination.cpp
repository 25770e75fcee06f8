#include "throttle/domination.hpp"

#include <bit>
#include <stdexcept>

namespace throttle {

bool is_dominating(const Graph& g, Mask d) { return g.closed_neighborhood(d) == full_mask(g.order()); }

DominationResult domination_number(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("domination_number: graph has no vertices");
  for (int k = 1; k <= n; ++k) {
    const Mask last = full_mask(n) & ~full_mask(n - k);
    for (Mask s = full_mask(k);; s = next_same_popcount(s)) {
      if (is_dominating(g, s)) return {k, VertexSet(n, s)};
      if (s == last) break;
    }
  }
  return {n, VertexSet::full(n)};
}

std::vector<VertexSet> enumerate_min_dominating_sets(const Graph& g) {
  const int n = g.order();
  const int k = domination_number(g).value;
  std::vector<VertexSet> out;
  const Mask last = full_mask(n) & ~full_mask(n - k);
  for (Mask s = full_mask(k);; s = next_same_popcount(s)) {
    if (is_dominating(g, s)) out.emplace_back(n, s);
    if (s == last) break;
  }
  return out;
}

int induced_edge_count(const Graph& g, Mask d) {
  int twice = 0;
  for (Mask m = d; m; m &= m - 1) twice += popcount(g.adj(std::countr_zero(m)) & d);
  return twice / 2;
}

int degree_sum(const Graph& g, Mask d) {
  int sum = 0;
  for (Mask m = d; m; m &= m - 1) sum += popcount(g.adj(std::countr_zero(m)));
  return sum;
}

VertexSet epn(const Graph& g, const VertexSet& d, Vertex v) {
  if (d.order() != g.order()) throw std::invalid_argument("vertex set does not belong to this graph");
  if (!d.contains(v)) throw std::invalid_argument("epn: vertex " + std::to_string(v) + " is not in the set");
  Mask others = 0;
  for (Mask m = d.bits() & ~bit(v); m; m &= m - 1) others |= g.adj(std::countr_zero(m));
  return VertexSet(g.order(), g.adj(v) & ~d.bits() & ~others);
}

std::string_view to_string(Optimality o) {
  switch (o) {
    case Optimality::Minimum: return "minimum";
    case Optimality::EdgeMaximum: return "edge-maximum";
    case Optimality::Optimal: return "optimal";
  }
  return "?";
}

DominationCertificate make_certificate(const Graph& g, const VertexSet& d, Optimality optimality) {
  if (!is_dominating(g, d.bits())) throw std::invalid_argument("make_certificate: set is not dominating");
  DominationCertificate cert;
  cert.set = d;
  cert.induced_edges = induced_edge_count(g, d.bits());
  cert.degree_sum = degree_sum(g, d.bits());
  cert.optimality = optimality;
  for (Vertex v : d.members()) cert.private_neighbors.emplace(v, epn(g, d, v));
  return cert;
}

namespace {

template <typename Score>
std::vector<VertexSet> keep_maximal(const std::vector<VertexSet>& sets, Score score) {
  std::vector<VertexSet> out;
  int best = -1;
  for (const VertexSet& s : sets) {
    int value = score(s);
    if (value > best) {
      best = value;
      out.clear();
    }
    if (value == best) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<VertexSet> edge_maximum_dominating_sets(const Graph& g) {
  return keep_maximal(enumerate_min_dominating_sets(g), [&](const VertexSet& s) { return induced_edge_count(g, s.bits()); });
}

std::vector<VertexSet> optimal_dominating_sets(const Graph& g) {
  return keep_maximal(edge_maximum_dominating_sets(g), [&](const VertexSet& s) { return degree_sum(g, s.bits()); });
}

DominationCertificate optimal_dominating_set(const Graph& g) {
  // Colex enumeration yields increasing bitmasks, so the first is the least.
  return make_certificate(g, optimal_dominating_sets(g).front(), Optimality::Optimal);
}

}  // namespace throttle
