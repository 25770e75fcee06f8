#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "throttle/graph.hpp"

namespace throttle {

/// A generated graph with its distinguished vertices and edges by name.
struct NamedGraph {
  Graph graph;
  std::map<std::string, Vertex> vertices;
  std::map<std::string, Edge> edges;
  /// Figure the graph was transcribed from, empty for pure generators.
  std::string figure;
  std::string description;

  Vertex vertex(const std::string& name) const;
  Edge edge(const std::string& name) const;
};

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
/// K_{1,n-1}, center 0.
Graph star(int n);
Graph empty(int n);

/// Center 0; leg i occupies consecutive labels, innermost first.
NamedGraph spider(const std::vector<int>& legs);

/// H with r pendant leaves on every vertex. Leaves of vertex v get labels
/// n + r*v .. n + r*v + r - 1.
Graph corona(const Graph& h, int r);

/// Union of g1 and g2 (g2 shifted by |g1|) plus the matching edges
/// (i, |g1| + j) for each pair (i, j).
Graph matched_sum(const Graph& g1, const Graph& g2, const std::vector<std::pair<Vertex, Vertex>>& matching);

/// K_{1,k} x P_2. Spine endpoints are 0 and 1 (named "u", "v"; edge "spine").
NamedGraph book(int k);

/// For connected H of order 2k: two pendants on each v_i and a further
/// pendant on u_{i,2} for i <= k. Names: v1.., u1_1, u1_2, u1_3, ...
NamedGraph family_6n7(const Graph& h, bool force = false);

/// Adds one leaf to the first leaf of H o 2K_1.
NamedGraph ex11_57(const Graph& h);
/// Star with n-1 leaves plus an edge between leaves 1 and 2; center "c".
NamedGraph star_plus_edge(int n);
/// ((H o K_1) o K_1) joined with a universal vertex "u".
NamedGraph corona_tower(const Graph& h);

/// Parses a compact graph name: K<n>, P<n>, C<n>, S<n> (star), E<n> (empty).
Graph small_graph(std::string_view spec);

/// Named figure graphs and parametric families, e.g. "fig4_twin",
/// "family_6n7:K2", "spider:2,2,1,1", "ex11_57(K2)". Throws
/// std::invalid_argument for unknown names.
NamedGraph fixture(std::string_view name);
std::vector<std::string> fixture_names();

/// Graphs of order n (1 <= n <= 9), one per isomorphism class, in canonical
/// labeling and a fixed order. Cached.
const std::vector<Graph>& graphs_up_to_isomorphism(int n);
std::vector<Graph> enumerate_graphs(int n, bool connected_only, bool up_to_isomorphism = true);
/// Streams every labeled graph on n vertices (1 <= n <= 9).
void for_each_labeled_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit);

}  // namespace throttle
