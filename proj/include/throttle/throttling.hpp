#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "throttle/forcing.hpp"

namespace throttle {

enum class ThrottlingKind { Sum, ProductInitialCost, ProductNoInitialCost };

inline constexpr ThrottlingKind kAllKinds[] = {ThrottlingKind::Sum, ThrottlingKind::ProductInitialCost,
                                               ThrottlingKind::ProductNoInitialCost};

std::string_view to_string(ThrottlingKind kind);
/// Accepts "sum", "prodx" (initial cost) and "prodstar" (no initial cost).
ThrottlingKind parse_kind(std::string_view name);

using ThrottleValue = std::optional<std::uint64_t>;  // nullopt = infinity

/// |B| + pt, |B| (1 + pt) or |B| pt.
std::uint64_t combine(ThrottlingKind kind, int size, int pt);

/// Throttling number of one initial set; infinity if it does not force.
/// ProductNoInitialCost requires an edge and B != V(G).
ThrottleValue throttle_set(RuleKind rule, ThrottlingKind kind, const Graph& g, const VertexSet& b);

struct ThrottleAtK {
  ThrottleValue value;
  PropagationTime pt;
  std::optional<VertexSet> witness;
};

/// Minimum over sets of size k. k ranges over 1..n (1..n-1 for the
/// no-initial-cost kind).
ThrottleAtK throttle_k(RuleKind rule, ThrottlingKind kind, const Graph& g, int k);

struct ThrottlingResult {
  RuleKind rule{};
  ThrottlingKind kind{};
  std::uint64_t value = 0;
  VertexSet witness;
  int witness_pt = 0;
  /// per_k[k - 1] = th(G, k), filled only on request.
  std::vector<ThrottleValue> per_k;
};

/// Graph-level throttling number. The witness is the first optimal set in
/// (size, colex) order. Throws std::invalid_argument for the no-initial-cost
/// kind on an edgeless graph.
ThrottlingResult throttle(RuleKind rule, ThrottlingKind kind, const Graph& g, bool with_table = false);

struct KOfP {
  std::optional<int> k;
  std::optional<VertexSet> witness;
};

/// Least k with pt_Z(G, k) = p.
KOfP k_of_p(const Graph& g, int p);

/// th*_Z(G) computed as k(G, 1). Requires an edge.
int th_star_z_via_identity(const Graph& g);

struct MatchedSumWitness {
  VertexSet first;
  VertexSet second;
  std::vector<Edge> matching;
};

/// Whether V(G) splits into equal halves whose crossing edges form a perfect
/// matching. Throws std::invalid_argument for odd or zero order.
std::optional<MatchedSumWitness> is_matched_sum(const Graph& g);

}  // namespace throttle
