#include "throttle/throttling.hpp"

#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace throttle {

std::string_view to_string(ThrottlingKind kind) {
  switch (kind) {
    case ThrottlingKind::Sum: return "sum";
    case ThrottlingKind::ProductInitialCost: return "prodx";
    case ThrottlingKind::ProductNoInitialCost: return "prodstar";
  }
  return "?";
}

ThrottlingKind parse_kind(std::string_view name) {
  if (name == "sum") return ThrottlingKind::Sum;
  if (name == "prodx" || name == "x" || name == "product") return ThrottlingKind::ProductInitialCost;
  if (name == "prodstar" || name == "star" || name == "*") return ThrottlingKind::ProductNoInitialCost;
  throw std::invalid_argument("unknown throttling kind '" + std::string(name) + "'");
}

std::uint64_t combine(ThrottlingKind kind, int size, int pt) {
  const auto b = static_cast<std::uint64_t>(size);
  const auto t = static_cast<std::uint64_t>(pt);
  switch (kind) {
    case ThrottlingKind::Sum: return b + t;
    case ThrottlingKind::ProductInitialCost: return b * (1 + t);
    case ThrottlingKind::ProductNoInitialCost: return b * t;
  }
  return 0;
}

namespace {

int max_k(ThrottlingKind kind, const Graph& g) {
  return kind == ThrottlingKind::ProductNoInitialCost ? g.order() - 1 : g.order();
}

void require_kind_applies(ThrottlingKind kind, const Graph& g) {
  if (g.order() < 1) throw std::invalid_argument("throttling: graph has no vertices");
  if (kind == ThrottlingKind::ProductNoInitialCost && !g.has_edge())
    throw std::invalid_argument("no-initial-cost product throttling needs a graph with an edge");
}

// Largest pt that could still give a value strictly below `bound` at size k.
int pt_cap(ThrottlingKind kind, int k, std::uint64_t bound) {
  const auto kk = static_cast<std::uint64_t>(k);
  std::int64_t cap = 0;
  switch (kind) {
    case ThrottlingKind::Sum: cap = static_cast<std::int64_t>(bound) - k - 1; break;
    case ThrottlingKind::ProductInitialCost: cap = static_cast<std::int64_t>((bound - 1) / kk) - 1; break;
    case ThrottlingKind::ProductNoInitialCost: cap = static_cast<std::int64_t>((bound - 1) / kk); break;
  }
  if (cap > std::numeric_limits<int>::max()) return std::numeric_limits<int>::max();
  return static_cast<int>(cap);
}

// Minimum pt over k-subsets, considering only times <= cap.
ThrottleAtK search_k(RuleKind rule, ThrottlingKind kind, const Graph& g, int k, int cap) {
  const int n = g.order();
  ThrottleAtK best;
  if (k == n) {
    if (cap >= 0) best = {combine(kind, n, 0), PropagationTime(0), VertexSet::full(n)};
    return best;
  }
  if (cap < 1) return best;
  const Mask last = full_mask(n) & ~full_mask(n - k);
  for (Mask s = full_mask(k);; s = next_same_popcount(s)) {
    PropagationTime t = propagation_time(rule, g, s, cap);
    if (t.is_finite()) {
      best = {combine(kind, k, t.value()), t, VertexSet(n, s)};
      if (t.value() == 1) break;
      cap = t.value() - 1;
    }
    if (s == last) break;
  }
  return best;
}

}  // namespace

ThrottleValue throttle_set(RuleKind rule, ThrottlingKind kind, const Graph& g, const VertexSet& b) {
  require_kind_applies(kind, g);
  if (b.order() != g.order()) throw std::invalid_argument("vertex set does not belong to this graph");
  if (kind == ThrottlingKind::ProductNoInitialCost && b.is_full())
    throw std::invalid_argument("no-initial-cost product throttling excludes B = V(G)");
  if (b.empty()) return std::nullopt;
  PropagationTime t = propagation_time(rule, g, b);
  if (!t.is_finite()) return std::nullopt;
  return combine(kind, b.size(), t.value());
}

ThrottleAtK throttle_k(RuleKind rule, ThrottlingKind kind, const Graph& g, int k) {
  require_kind_applies(kind, g);
  if (k < 1 || k > max_k(kind, g))
    throw std::out_of_range("throttle_k: k must be in 1.." + std::to_string(max_k(kind, g)));
  return search_k(rule, kind, g, k, std::numeric_limits<int>::max());
}

ThrottlingResult throttle(RuleKind rule, ThrottlingKind kind, const Graph& g, bool with_table) {
  require_kind_applies(kind, g);
  ThrottlingResult result;
  result.rule = rule;
  result.kind = kind;
  std::optional<std::uint64_t> best;
  const int top = max_k(kind, g);
  for (int k = 1; k <= top; ++k) {
    // Cheapest conceivable value at size k: pt >= 1 unless k = n. Not
    // monotone in k for the initial-cost kind (k = n gives n), so no break.
    const std::uint64_t floor_k = combine(kind, k, k == g.order() ? 0 : 1);
    if (!with_table && best && floor_k >= *best) continue;
    const int cap = (best && !with_table) ? pt_cap(kind, k, *best) : std::numeric_limits<int>::max();
    ThrottleAtK at = search_k(rule, kind, g, k, cap);
    if (with_table) result.per_k.push_back(at.value);
    if (at.value && (!best || *at.value < *best)) {
      best = at.value;
      result.value = *at.value;
      result.witness = *at.witness;
      result.witness_pt = at.pt.value();
    }
  }
  return result;
}

KOfP k_of_p(const Graph& g, int p) {
  if (p < 0) throw std::invalid_argument("k_of_p: p must be nonnegative");
  for (int k = 1; k <= g.order(); ++k) {
    KPropagation at = pt_k(RuleKind::StandardZF, g, k);
    if (at.time == PropagationTime(p)) return {k, at.witness};
  }
  return {};
}

int th_star_z_via_identity(const Graph& g) {
  if (!g.has_edge()) throw std::invalid_argument("th_star_z_via_identity: graph has no edge");
  return *k_of_p(g, 1).k;
}

std::optional<MatchedSumWitness> is_matched_sum(const Graph& g) {
  const int n = g.order();
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("is_matched_sum: order must be even and positive");
  const int half = n / 2;
  const Mask all = full_mask(n);
  const Mask last = all & ~full_mask(n - half);
  for (Mask s = full_mask(half);; s = next_same_popcount(s)) {
    if (s & 1) {  // vertex 0 always on the first side
      bool ok = true;
      for (Vertex v = 0; v < n && ok; ++v) {
        const Mask across = g.adj(v) & ((s & bit(v)) ? all & ~s : s);
        ok = popcount(across) == 1;
      }
      if (ok) {
        MatchedSumWitness w{VertexSet(n, s), VertexSet(n, all & ~s), {}};
        for (Mask m = s; m; m &= m - 1) {
          const Vertex v = std::countr_zero(m);
          w.matching.emplace_back(v, std::countr_zero(g.adj(v) & ~s));
        }
        return w;
      }
    }
    if (s == last) break;
  }
  return std::nullopt;
}

}  // namespace throttle
