#include "throttle/graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace throttle {

VertexSet VertexMap::apply(const VertexSet& source, int target_order) const {
  VertexSet out(target_order);
  for (Vertex s : source.members()) {
    if (s >= static_cast<int>(image.size())) throw std::out_of_range("vertex map source label out of range");
    if (image[s]) out.insert(*image[s]);
  }
  return out;
}

Graph::Graph(int order, const std::vector<Edge>& edges) {
  if (order < 0 || order > kMaxOrder)
    throw std::invalid_argument("graph order " + std::to_string(order) + " outside 0.." + std::to_string(kMaxOrder));
  adj_.assign(order, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= order)
      throw std::invalid_argument("edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " has an invalid endpoint");
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (adj_[e.u] & bit(e.v))
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
    ++edge_count_;
  }
}

void Graph::check(Vertex v) const {
  if (v < 0 || v >= order()) throw std::out_of_range("vertex label " + std::to_string(v) + " out of range");
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  check(a);
  check(b);
  return (adj_[a] >> b) & 1;
}

VertexSet Graph::neighborhood(Vertex v, bool closed) const {
  check(v);
  return VertexSet(order(), closed ? adj_[v] | bit(v) : adj_[v]);
}

int Graph::degree(Vertex v) const {
  check(v);
  return popcount(adj_[v]);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex v = 0; v < order(); ++v)
    for (Mask m = adj_[v] & ~full_mask(v + 1); m; m &= m - 1) out.emplace_back(v, std::countr_zero(m));
  return out;
}

Mask Graph::closed_neighborhood(Mask s) const {
  Mask out = s;
  for (Mask m = s; m; m &= m - 1) out |= adj_[std::countr_zero(m)];
  return out;
}

std::pair<Graph, VertexMap> induced_subgraph(const Graph& g, const VertexSet& keep) {
  if (keep.order() != g.order()) throw std::invalid_argument("vertex set does not belong to this graph");
  VertexMap map;
  map.image.assign(g.order(), std::nullopt);
  int next = 0;
  for (Vertex v : keep.members()) map.image[v] = next++;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (map.image[e.u] && map.image[e.v]) edges.emplace_back(*map.image[e.u], *map.image[e.v]);
  return {Graph(next, edges), std::move(map)};
}

std::vector<Mask> components_within(const Graph& g, Mask within) {
  std::vector<Mask> out;
  Mask rest = within;
  while (rest) {
    Mask comp = rest & -rest;
    Mask frontier = comp;
    while (frontier) {
      Mask grow = 0;
      for (Mask m = frontier; m; m &= m - 1) grow |= g.adj(std::countr_zero(m));
      frontier = grow & within & ~comp;
      comp |= frontier;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  for (Mask m : components_within(g, full_mask(g.order()))) out.emplace_back(g.order(), m);
  return out;
}

bool is_connected(const Graph& g) { return components_within(g, full_mask(g.order())).size() <= 1; }

std::pair<Graph, VertexMap> delete_vertex(const Graph& g, Vertex x) {
  if (x < 0 || x >= g.order()) throw std::out_of_range("vertex label " + std::to_string(x) + " out of range");
  VertexSet keep = VertexSet::full(g.order());
  keep.erase(x);
  return induced_subgraph(g, keep);
}

namespace {
void require_edge(const Graph& g, Edge e) {
  if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v))
    throw std::invalid_argument("no edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " in graph");
}
}  // namespace

Graph delete_edge(const Graph& g, Edge e) {
  require_edge(g, e);
  std::vector<Edge> edges = g.edges();
  std::erase(edges, e);
  return Graph(g.order(), edges);
}

std::pair<Graph, VertexMap> contract_edge(const Graph& g, Edge e) {
  require_edge(g, e);
  VertexMap map;
  map.image.resize(g.order());
  for (Vertex s = 0; s < g.order(); ++s) map.image[s] = s < e.v ? s : s - 1;
  map.image[e.v] = e.u;
  map.merged = e;
  map.merged_into = e.u;

  std::vector<Edge> edges;
  Mask seen_at_merge = 0;
  for (const Edge& f : g.edges()) {
    if (f == e) continue;
    Vertex a = *map.image[f.u], b = *map.image[f.v];
    // Parallel edges only arise at the merged vertex.
    if (a == e.u || b == e.u) {
      Vertex other = a == e.u ? b : a;
      if (seen_at_merge & bit(other)) continue;
      seen_at_merge |= bit(other);
    }
    edges.emplace_back(a, b);
  }
  return {Graph(g.order() - 1, edges), std::move(map)};
}

std::pair<Graph, VertexMap> subdivide_edge(const Graph& g, Edge e) {
  require_edge(g, e);
  const Vertex z = g.order();
  std::vector<Edge> edges = g.edges();
  std::erase(edges, e);
  edges.emplace_back(e.u, z);
  edges.emplace_back(e.v, z);
  VertexMap map;
  for (Vertex s = 0; s < g.order(); ++s) map.image.emplace_back(s);
  map.new_vertex = z;
  return {Graph(g.order() + 1, edges), std::move(map)};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), edges);
}

Graph join_vertex(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  for (Vertex v = 0; v < g.order(); ++v) edges.emplace_back(v, g.order());
  return Graph(g.order() + 1, edges);
}

}  // namespace throttle
