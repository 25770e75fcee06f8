#pragma once

#include <map>
#include <string_view>
#include <vector>

#include "throttle/graph.hpp"

namespace throttle {

bool is_dominating(const Graph& g, Mask d);

struct DominationResult {
  int value = 0;
  VertexSet witness;
};

/// gamma(G) with the first minimum dominating set in colex order.
DominationResult domination_number(const Graph& g);

/// All dominating sets of size gamma(G), colex order.
std::vector<VertexSet> enumerate_min_dominating_sets(const Graph& g);

/// Number of edges of G with both ends in d.
int induced_edge_count(const Graph& g, Mask d);
/// Sum of degrees in G over d.
int degree_sum(const Graph& g, Mask d);

/// External private neighbors of v with respect to d. Throws
/// std::invalid_argument if v is not in d.
VertexSet epn(const Graph& g, const VertexSet& d, Vertex v);

enum class Optimality { Minimum, EdgeMaximum, Optimal };
std::string_view to_string(Optimality o);

struct DominationCertificate {
  VertexSet set;
  int induced_edges = 0;
  int degree_sum = 0;
  Optimality optimality = Optimality::Minimum;
  /// epn[v, D] for each member v.
  std::map<Vertex, VertexSet> private_neighbors;
};

DominationCertificate make_certificate(const Graph& g, const VertexSet& d, Optimality optimality);

/// Minimum dominating sets maximizing the induced edge count.
std::vector<VertexSet> edge_maximum_dominating_sets(const Graph& g);
/// Edge-maximum minimum dominating sets that also maximize the degree sum.
std::vector<VertexSet> optimal_dominating_sets(const Graph& g);

/// The optimal dominating set with the least bitmask.
DominationCertificate optimal_dominating_set(const Graph& g);

}  // namespace throttle
