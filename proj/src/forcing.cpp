#include "throttle/forcing.hpp"

#include <bit>
#include <stdexcept>

namespace throttle {

std::string_view to_string(RuleKind rule) {
  switch (rule) {
    case RuleKind::StandardZF: return "zf";
    case RuleKind::PSDZF: return "psd";
    case RuleKind::PowerDomination: return "pd";
  }
  return "?";
}

RuleKind parse_rule(std::string_view name) {
  if (name == "zf" || name == "Z" || name == "standard") return RuleKind::StandardZF;
  if (name == "psd" || name == "Z+" || name == "Zplus") return RuleKind::PSDZF;
  if (name == "pd" || name == "gammaP" || name == "power") return RuleKind::PowerDomination;
  throw std::invalid_argument("unknown rule '" + std::string(name) + "'");
}

int PropagationTime::value() const {
  if (!is_finite()) throw std::logic_error("propagation time is infinite");
  return steps_;
}

std::string PropagationTime::to_string() const { return is_finite() ? std::to_string(steps_) : "inf"; }

namespace {

Mask standard_step(const Graph& g, Mask filled) {
  Mask out = 0;
  for (Mask m = filled; m; m &= m - 1) {
    Mask open = g.adj(std::countr_zero(m)) & ~filled;
    if (open && (open & (open - 1)) == 0) out |= open;
  }
  return out;
}

Mask psd_step(const Graph& g, Mask filled) {
  const Mask unfilled = full_mask(g.order()) & ~filled;
  if (!unfilled) return 0;
  std::vector<Mask> parts = components_within(g, unfilled);
  Mask out = 0;
  for (Mask m = filled; m; m &= m - 1) {
    Mask open = g.adj(std::countr_zero(m)) & unfilled;
    if (!open) continue;
    if ((open & (open - 1)) == 0) {
      out |= open;
      continue;
    }
    for (Mask part : parts) {
      Mask here = open & part;
      if (here && (here & (here - 1)) == 0) out |= here;
    }
  }
  return out;
}

}  // namespace

Mask step_mask(RuleKind rule, const Graph& g, Mask filled, int time_index) {
  switch (rule) {
    case RuleKind::StandardZF: return standard_step(g, filled);
    case RuleKind::PSDZF: return psd_step(g, filled);
    case RuleKind::PowerDomination:
      return time_index == 1 ? g.closed_neighborhood(filled) & ~filled : standard_step(g, filled);
  }
  return 0;
}

VertexSet step(RuleKind rule, const Graph& g, const VertexSet& filled, int time_index) {
  if (filled.order() != g.order()) throw std::invalid_argument("vertex set does not belong to this graph");
  if (time_index < 1) throw std::invalid_argument("time index must be positive");
  return VertexSet(g.order(), step_mask(rule, g, filled.bits(), time_index));
}

PropagationTrace propagate(RuleKind rule, const Graph& g, const VertexSet& initial) {
  if (initial.order() != g.order()) throw std::invalid_argument("vertex set does not belong to this graph");
  PropagationTrace trace;
  trace.rule = rule;
  trace.initial = initial;
  trace.cumulative.push_back(initial);
  const Mask all = full_mask(g.order());
  Mask filled = initial.bits();
  for (int t = 1; filled != all; ++t) {
    Mask fresh = step_mask(rule, g, filled, t);
    if (!fresh) break;
    filled |= fresh;
    trace.fills.emplace_back(g.order(), fresh);
    trace.cumulative.emplace_back(g.order(), filled);
  }
  trace.completed = filled == all;
  return trace;
}

PropagationTime propagation_time(RuleKind rule, const Graph& g, Mask initial, int cap) {
  const Mask all = full_mask(g.order());
  Mask filled = initial;
  int t = 0;
  while (filled != all) {
    if (t == cap) return PropagationTime::infinity();
    Mask fresh = step_mask(rule, g, filled, ++t);
    if (!fresh) return PropagationTime::infinity();
    filled |= fresh;
  }
  return PropagationTime(t);
}

PropagationTime propagation_time(RuleKind rule, const Graph& g, const VertexSet& initial) {
  if (initial.order() != g.order()) throw std::invalid_argument("vertex set does not belong to this graph");
  return propagation_time(rule, g, initial.bits());
}

bool is_forcing_set(RuleKind rule, const Graph& g, const VertexSet& initial) {
  return propagation_time(rule, g, initial).is_finite();
}

ParameterResult parameter_number(RuleKind rule, const Graph& g) {
  const int n = g.order();
  if (n < 1) throw std::invalid_argument("parameter_number: graph has no vertices");
  for (int k = 1; k <= n; ++k) {
    const Mask last = full_mask(n) & ~full_mask(n - k);
    for (Mask s = full_mask(k);; s = next_same_popcount(s)) {
      if (propagation_time(rule, g, s).is_finite()) return {k, VertexSet(n, s)};
      if (s == last) break;
    }
  }
  return {n, VertexSet::full(n)};  // unreachable: V(G) always forces
}

KPropagation pt_k(RuleKind rule, const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || k > n) throw std::out_of_range("pt_k: k must be in 1.." + std::to_string(n));
  if (k == n) return {PropagationTime(0), VertexSet::full(n)};
  KPropagation best;
  const Mask last = full_mask(n) & ~full_mask(n - k);
  for (Mask s = full_mask(k);; s = next_same_popcount(s)) {
    // Only strictly better times matter, so cap one below the incumbent.
    const int cap = best.time.is_finite() ? best.time.value() - 1 : std::numeric_limits<int>::max();
    PropagationTime t = propagation_time(rule, g, s, cap);
    if (t < best.time) {
      best = {t, VertexSet(n, s)};
      if (t.value() == 1) break;  // k < n forces pt >= 1
    }
    if (s == last) break;
  }
  return best;
}

KPropagation graph_propagation_time(RuleKind rule, const Graph& g) {
  return pt_k(rule, g, parameter_number(rule, g).value);
}

std::vector<Mask> minimal_forcing_sets(RuleKind rule, const Graph& g) {
  const int n = g.order();
  std::vector<Mask> out;
  for (int k = 1; k <= n; ++k) {
    const Mask last = full_mask(n) & ~full_mask(n - k);
    for (Mask s = full_mask(k);; s = next_same_popcount(s)) {
      bool dominated = false;
      for (Mask m : out)
        if ((m & ~s) == 0) {
          dominated = true;
          break;
        }
      if (!dominated && propagation_time(rule, g, s).is_finite()) out.push_back(s);
      if (s == last) break;
    }
  }
  return out;
}

}  // namespace throttle
