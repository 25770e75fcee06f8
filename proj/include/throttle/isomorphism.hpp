#pragma once

#include <vector>

#include "throttle/graph.hpp"

namespace throttle {

/// Canonical labeling by color refinement plus individualization. Two graphs
/// are isomorphic iff their canonical codes are equal.
struct CanonicalForm {
  /// Adjacency rows of the relabeled graph, row i = neighbors of new label i.
  std::vector<Mask> rows;
  /// permutation[old] = new label.
  std::vector<Vertex> permutation;
};

CanonicalForm canonical_form(const Graph& g);

/// The graph relabeled into canonical order.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Relabels g so that vertex v becomes perm[v].
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace throttle
