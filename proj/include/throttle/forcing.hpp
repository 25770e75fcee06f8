#pragma once

#include <compare>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "throttle/graph.hpp"

namespace throttle {

enum class RuleKind { StandardZF, PSDZF, PowerDomination };

inline constexpr RuleKind kAllRules[] = {RuleKind::StandardZF, RuleKind::PSDZF, RuleKind::PowerDomination};

std::string_view to_string(RuleKind rule);
/// Accepts "zf", "psd", "pd" and the long names.
RuleKind parse_rule(std::string_view name);

/// Nonnegative integer or infinity.
class PropagationTime {
 public:
  constexpr PropagationTime() = default;  // infinity
  constexpr explicit PropagationTime(int steps) : steps_(steps) {}
  static constexpr PropagationTime infinity() { return {}; }

  constexpr bool is_finite() const { return steps_ != kInf; }
  /// Throws std::logic_error on infinity.
  int value() const;
  std::string to_string() const;

  friend constexpr bool operator==(PropagationTime, PropagationTime) = default;
  friend constexpr auto operator<=>(PropagationTime a, PropagationTime b) { return a.steps_ <=> b.steps_; }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();
  int steps_ = kInf;
};

/// B^{(i)} and B^{[i]} for one run of a propagation process.
struct PropagationTrace {
  RuleKind rule{};
  VertexSet initial;
  /// fills[i] is the set filled during step i + 1.
  std::vector<VertexSet> fills;
  /// cumulative[i] is the filled set after step i; cumulative[0] == initial.
  std::vector<VertexSet> cumulative;
  bool completed = false;

  PropagationTime time() const {
    return completed ? PropagationTime(static_cast<int>(fills.size())) : PropagationTime::infinity();
  }
  const VertexSet& final_set() const { return cumulative.back(); }
};

/// Every vertex that can be filled at once given `filled`; empty on a stall.
/// For power domination, step 1 is the domination step.
Mask step_mask(RuleKind rule, const Graph& g, Mask filled, int time_index);
VertexSet step(RuleKind rule, const Graph& g, const VertexSet& filled, int time_index);

PropagationTrace propagate(RuleKind rule, const Graph& g, const VertexSet& initial);

/// Propagation time from `initial`. Stops early and reports infinity once
/// more than `cap` steps would be needed.
PropagationTime propagation_time(RuleKind rule, const Graph& g, Mask initial,
                                 int cap = std::numeric_limits<int>::max());
PropagationTime propagation_time(RuleKind rule, const Graph& g, const VertexSet& initial);

bool is_forcing_set(RuleKind rule, const Graph& g, const VertexSet& initial);

struct ParameterResult {
  int value = 0;
  VertexSet witness;
};

/// Z, Z_+ or gamma_P with the first minimum forcing set in colex order.
ParameterResult parameter_number(RuleKind rule, const Graph& g);

struct KPropagation {
  PropagationTime time;
  /// First set of size k in colex order attaining `time`; absent if none forces.
  std::optional<VertexSet> witness;
};

/// pt(G, k): minimum propagation time over sets of size k.
KPropagation pt_k(RuleKind rule, const Graph& g, int k);

/// pt(G) = pt(G, Y(G)).
KPropagation graph_propagation_time(RuleKind rule, const Graph& g);

/// Inclusion-minimal forcing sets, colex order.
std::vector<Mask> minimal_forcing_sets(RuleKind rule, const Graph& g);

}  // namespace throttle
