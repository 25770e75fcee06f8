#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "throttle/vertex_set.hpp"

namespace throttle {

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Relabeling from a source graph onto a graph derived from it.
///
/// `image[s]` is the label in the derived graph of source vertex `s`, or
/// `std::nullopt` if `s` was deleted. Contraction records the merged pair and
/// the label they collapsed onto; subdivision records the added vertex.
struct VertexMap {
  std::vector<std::optional<Vertex>> image;
  std::optional<Edge> merged;
  std::optional<Vertex> merged_into;
  std::optional<Vertex> new_vertex;

  /// Image of a set of source vertices, dropping deleted ones.
  VertexSet apply(const VertexSet& source, int target_order) const;
};

/// Immutable simple undirected graph on vertices 0..n-1 with n <= 64.
class Graph {
 public:
  Graph() = default;
  /// Throws std::invalid_argument on loops, duplicate edges, or bad labels.
  Graph(int order, const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }
  bool has_edge() const { return edge_count_ > 0; }

  bool adjacent(Vertex a, Vertex b) const;
  VertexSet neighborhood(Vertex v, bool closed = false) const;
  int degree(Vertex v) const;
  std::vector<Edge> edges() const;
  VertexSet vertices() const { return VertexSet::full(order()); }

  /// Open neighborhood bitmask, unchecked. Hot path for the search code.
  Mask adj(Vertex v) const { return adj_[v]; }
  const std::vector<Mask>& adjacency() const { return adj_; }

  /// Closed neighborhood of a set, N[S].
  Mask closed_neighborhood(Mask s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check(Vertex v) const;

  std::vector<Mask> adj_;
  int edge_count_ = 0;
};

std::pair<Graph, VertexMap> induced_subgraph(const Graph& g, const VertexSet& keep);

/// Vertex sets of the connected components, ordered by least member.
std::vector<VertexSet> components(const Graph& g);
/// Components of the subgraph induced by `within`, as masks.
std::vector<Mask> components_within(const Graph& g, Mask within);
bool is_connected(const Graph& g);

std::pair<Graph, VertexMap> delete_vertex(const Graph& g, Vertex x);
Graph delete_edge(const Graph& g, Edge e);
/// The merged vertex takes the smaller endpoint's slot; labels above the
/// larger endpoint shift down by one.
std::pair<Graph, VertexMap> contract_edge(const Graph& g, Edge e);
/// The new vertex gets label n.
std::pair<Graph, VertexMap> subdivide_edge(const Graph& g, Edge e);

/// Disjoint union; the second graph's labels are shifted by first.order().
Graph disjoint_union(const Graph& a, const Graph& b);
/// Adds one vertex (label n) adjacent to everything.
Graph join_vertex(const Graph& g);

}  // namespace throttle
