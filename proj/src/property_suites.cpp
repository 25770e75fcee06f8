#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "throttle/constructive.hpp"
#include "throttle/graph_io.hpp"
#include "throttle/isomorphism.hpp"
#include "throttle/suites.hpp"

namespace throttle {

namespace {

using Rng = std::mt19937_64;

/// Empty string means the graph satisfies the property.
using Check = std::function<std::string(const Graph&, Rng&)>;

enum class Domain { All, NoIsolated, WithEdge, Connected, ConnectedEdge, ConnectedMin3, ConnectedEven };

struct SuiteDef {
  PropertySuiteInfo info;
  Domain domain;
  Check check;
};

bool in_domain(const Graph& g, Domain d) {
  switch (d) {
    case Domain::All: return true;
    case Domain::NoIsolated:
      for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return false;
      return true;
    case Domain::WithEdge: return g.has_edge();
    case Domain::Connected: return is_connected(g);
    case Domain::ConnectedEdge: return g.order() >= 2 && is_connected(g);
    case Domain::ConnectedMin3: return g.order() >= 3 && is_connected(g);
    case Domain::ConnectedEven: return g.order() >= 2 && g.order() % 2 == 0 && is_connected(g);
  }
  return false;
}

std::string set_string(int n, Mask m) { return VertexSet(n, m).to_string(); }

std::string edge_string(Edge e) { return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"; }

PropagationTime pt(RuleKind rule, const Graph& g, Mask b) { return propagation_time(rule, g, b); }

/// Throttling numbers memoized by canonical form; derived graphs repeat a lot.
class ThrottleCache {
 public:
  std::uint64_t get(RuleKind rule, ThrottlingKind kind, const Graph& g) {
    Key key{canonical_form(g).rows, rule, kind};
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    const std::uint64_t value = throttle(rule, kind, g).value;
    std::lock_guard lock(mutex_);
    cache_.emplace(std::move(key), value);
    return value;
  }

 private:
  using Key = std::tuple<std::vector<Mask>, RuleKind, ThrottlingKind>;
  std::mutex mutex_;
  std::map<Key, std::uint64_t> cache_;
};

ThrottleCache& throttle_cache() {
  static ThrottleCache cache;
  return cache;
}

std::uint64_t th(RuleKind rule, ThrottlingKind kind, const Graph& g) { return throttle_cache().get(rule, kind, g); }

// ---- domination -------------------------------------------------------------

std::string check_ore(const Graph& g, Rng&) {
  const int gamma = domination_number(g).value;
  if (2 * gamma > g.order()) return "gamma " + std::to_string(gamma) + " exceeds n/2";
  return {};
}

std::string check_epn_nonempty(const Graph& g, Rng&) {
  for (const VertexSet& d : edge_maximum_dominating_sets(g))
    for (Vertex v : d.members())
      if (epn(g, d, v).bits() == 0)
        return "epn[" + std::to_string(v) + ", " + d.to_string() + "] is empty";
  return {};
}

std::string isolated_after_removal(const Graph& g, const VertexSet& d, Mask a) {
  const Mask rest = full_mask(g.order()) & ~a;
  for (Mask m = rest; m; m &= m - 1) {
    const Vertex v = std::countr_zero(m);
    if ((g.adj(v) & rest) == 0)
      return "D=" + d.to_string() + " A=" + set_string(g.order(), a) + " isolates " + std::to_string(v);
  }
  return {};
}

std::string check_no_isolated_after_epn(const Graph& g, Rng& rng) {
  const bool all_choices = g.order() <= 6;
  for (const VertexSet& d : optimal_dominating_sets(g)) {
    std::vector<std::vector<Vertex>> options;
    for (Vertex v : d.members()) {
      auto cands = epn(g, d, v).members();
      if (cands.empty()) return "epn[" + std::to_string(v) + ", " + d.to_string() + "] is empty";
      options.push_back(std::move(cands));
    }
    if (all_choices) {
      std::vector<std::size_t> idx(options.size(), 0);
      while (true) {
        Mask a = 0;
        for (std::size_t i = 0; i < options.size(); ++i) a |= bit(options[i][idx[i]]);
        if (auto v = isolated_after_removal(g, d, a); !v.empty()) return v;
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == options[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
      }
    } else {
      for (int trial = 0; trial < 100; ++trial) {
        Mask a = 0;
        for (const auto& opt : options) a |= bit(opt[std::uniform_int_distribution<std::size_t>(0, opt.size() - 1)(rng)]);
        if (auto v = isolated_after_removal(g, d, a); !v.empty()) return v;
      }
    }
  }
  return {};
}

std::string check_six_sevenths(const Graph& g, Rng&) {
  const int n = g.order();
  const std::uint64_t value = th(RuleKind::PowerDomination, ThrottlingKind::ProductInitialCost, g);
  if (7 * value > static_cast<std::uint64_t>(6 * n)) return "product throttling " + std::to_string(value) + " > 6n/7";
  const BoundCertificate cert = construct_pd_certificate(g, BoundTarget::ProductSixSevenths);
  if (cert.pt > 2) return "certificate pt " + std::to_string(cert.pt);
  if (cert.value < value) return "certificate below the exhaustive optimum";
  const EqualityReport eq = check_six_sevenths_equality(g);
  if (eq.status == EqualityStatus::Violated) return "equality without gamma = 3n/7";
  return {};
}

std::string check_third_plus_two(const Graph& g, Rng&) {
  const int n = g.order();
  const std::uint64_t value = th(RuleKind::PowerDomination, ThrottlingKind::Sum, g);
  if (value > static_cast<std::uint64_t>(n / 3 + 2)) return "sum throttling " + std::to_string(value) + " > n/3 + 2";
  const BoundCertificate cert = construct_pd_certificate(g, BoundTarget::SumThirdPlusTwo);
  if (cert.value < value) return "certificate below the exhaustive optimum";
  return {};
}

// ---- propagation ------------------------------------------------------------

std::string check_monotone(const Graph& g, Rng&) {
  const int n = g.order();
  for (RuleKind rule : kAllRules) {
    std::vector<PropagationTime> times(std::size_t{1} << n);
    for (Mask b = 0; b <= full_mask(n); ++b) {
      times[b] = pt(rule, g, b);
      if ((times[b] == PropagationTime(0)) != (b == full_mask(n)))
        return std::string(to_string(rule)) + ": pt 0 iff B = V fails at " + set_string(n, b);
      if (times[b].is_finite() != is_forcing_set(rule, g, VertexSet(n, b)))
        return std::string(to_string(rule)) + ": pt finite iff forcing fails at " + set_string(n, b);
    }
    for (Mask b = 0; b <= full_mask(n); ++b)
      for (Vertex v = 0; v < n; ++v)
        if (!(b & bit(v)) && times[b | bit(v)] > times[b])
          return std::string(to_string(rule)) + ": adding " + std::to_string(v) + " to " + set_string(n, b) +
                 " slows propagation";
  }
  return {};
}

std::string check_psd_superset(const Graph& g, Rng&) {
  const int n = g.order();
  for (Mask b = 0; b <= full_mask(n); ++b) {
    const Mask zf = step_mask(RuleKind::StandardZF, g, b, 1);
    const Mask psd = step_mask(RuleKind::PSDZF, g, b, 1);
    if ((zf & ~psd) != 0) return "standard step leaves PSD step at " + set_string(n, b);
  }
  return {};
}

std::string check_pd_dominating(const Graph& g, Rng&) {
  const int n = g.order();
  for (Mask b = 0; b < full_mask(n); ++b)
    if (is_dominating(g, b) && pt(RuleKind::PowerDomination, g, b) != PropagationTime(1))
      return "dominating set " + set_string(n, b) + " does not have pt 1";
  return {};
}

// ---- local graph changes ----------------------------------------------------

/// Lifts a mask on a derived graph back to source labels (contracted vertex excluded).
Mask lift(const VertexMap& map, Mask derived, std::optional<Vertex> skip = std::nullopt) {
  Mask out = 0;
  for (Vertex s = 0; s < static_cast<Vertex>(map.image.size()); ++s) {
    const auto d = map.image[s];
    if (!d || (skip && *d == *skip)) continue;
    if (derived & bit(*d)) out |= bit(s);
  }
  return out;
}

Mask push(const VertexMap& map, Mask source) {
  Mask out = 0;
  for (Mask m = source; m; m &= m - 1)
    if (auto d = map.image[std::countr_zero(m)]) out |= bit(*d);
  return out;
}

/// How item 7 (subdivision, sets of G) picks the added vertex.
enum class SubdivisionAdd { Endpoint, NewVertex };

/// Checks the seven propagation-time items and reports the first violation of
/// each failing item.
std::string check_lemma_changes(const Graph& g, SubdivisionAdd item7) {
  const int n = g.order();
  const auto edges = g.edges();
  std::map<std::pair<int, std::string>, std::string> failures;
  auto fail = [&](int item, const std::string& rule, const std::string& detail) {
    failures.emplace(std::pair{item, rule}, "item " + std::to_string(item) + " (" + rule + "): " + detail);
  };
  for (RuleKind rule : kAllRules) {
    const std::string r(to_string(rule));
    std::vector<PropagationTime> base(std::size_t{1} << n);
    for (Mask b = 0; b <= full_mask(n); ++b) base[b] = pt(rule, g, b);

    for (const Edge& e : edges) {
      const std::string at = "edge " + edge_string(e);
      const Mask uv = bit(e.u) | bit(e.v);
      const Graph minus = delete_edge(g, e);
      auto [sub, sub_map] = subdivide_edge(g, e);
      auto [con, con_map] = contract_edge(g, e);
      const Vertex y = *con_map.merged_into;
      const Vertex z = *sub_map.new_vertex;

      // Item 1: sets of G - e, same labels.
      for (Mask b = 0; b <= full_mask(n); ++b) {
        const PropagationTime t = pt(rule, minus, b);
        if (t.is_finite() && std::min(base[b | bit(e.u)], base[b | bit(e.v)]) > t)
          fail(1, r, at + " B'=" + set_string(n, b));
      }
      for (Mask b = 0; b <= full_mask(n); ++b) {
        if (!base[b].is_finite()) continue;
        // Item 2: sets of G, deleting e.
        if (std::min(pt(rule, minus, b | bit(e.u)), pt(rule, minus, b | bit(e.v))) > base[b])
          fail(2, r, at + " B=" + set_string(n, b));
        // Item 5: power dominating sets of G, contracting e.
        if (rule == RuleKind::PowerDomination && pt(rule, con, push(con_map, b & ~uv) | bit(y)) > base[b])
          fail(5, r, at + " B=" + set_string(n, b));
        // Item 7: sets of G, subdividing e.
        const PropagationTime t7 = item7 == SubdivisionAdd::Endpoint
                                       ? std::min(pt(rule, sub, b | bit(e.u)), pt(rule, sub, b | bit(e.v)))
                                       : pt(rule, sub, b | bit(z));
        if (t7 > base[b])
          fail(7, r, at + " B=" + set_string(n, b) + " pt(G,B)=" + base[b].to_string() + " pt(G_e,B+w)=" + t7.to_string());
      }
      // Item 4: sets of G/e.
      for (Mask b = 0; b <= full_mask(n - 1); ++b) {
        const PropagationTime t = pt(rule, con, b);
        if (!t.is_finite()) continue;
        const Mask rest = lift(con_map, b, y);
        const PropagationTime lifted =
            (b & bit(y)) ? base[rest | uv] : std::min(base[rest | bit(e.u)], base[rest | bit(e.v)]);
        if (lifted > t) fail(4, r, at + " B'=" + set_string(n - 1, b));
      }
      // Item 6: sets of G_e.
      for (Mask b = 0; b <= full_mask(n + 1); ++b) {
        const PropagationTime t = pt(rule, sub, b);
        if (!t.is_finite()) continue;
        const Mask rest = b & ~bit(z);
        const PropagationTime back =
            (b & bit(z)) ? std::min(base[rest | bit(e.u)], base[rest | bit(e.v)]) : base[rest];
        if (back > t) fail(6, r, at + " B'=" + set_string(n + 1, b));
      }
    }
    // Item 3: sets of G - x.
    for (Vertex x = 0; x < n; ++x) {
      auto [minus, map] = delete_vertex(g, x);
      for (Mask b = 0; b <= full_mask(n - 1); ++b) {
        const PropagationTime t = pt(rule, minus, b);
        if (t.is_finite() && base[lift(map, b) | bit(x)] > t)
          fail(3, r, "vertex " + std::to_string(x) + " B'=" + set_string(n - 1, b));
      }
    }
  }
  std::string out;
  for (const auto& [key, text] : failures) out += (out.empty() ? "" : "; ") + text;
  return out;
}

std::string check_lemma_as_stated(const Graph& g, Rng&) { return check_lemma_changes(g, SubdivisionAdd::Endpoint); }

std::string check_lemma_subdivision_vertex(const Graph& g, Rng&) {
  return check_lemma_changes(g, SubdivisionAdd::NewVertex);
}

/// lo * a <= b * hi style checks on throttling values.
bool within(std::uint64_t lower_num, std::uint64_t value, std::uint64_t upper_num) {
  return lower_num <= value && value <= upper_num;
}

std::string check_factor_bounds(const Graph& g, Rng&) {
  const auto star = ThrottlingKind::ProductNoInitialCost;
  const auto cross = ThrottlingKind::ProductInitialCost;
  for (RuleKind rule : {RuleKind::PowerDomination, RuleKind::PSDZF}) {
    const std::string r(to_string(rule));
    const std::uint64_t s = th(rule, star, g), x = th(rule, cross, g);
    auto fail = [&](const std::string& item, const std::string& where) { return r + " item " + item + ": " + where; };

    for (const Edge& e : g.edges()) {
      const std::string where = "edge " + edge_string(e);
      const Graph minus = delete_edge(g, e);
      // Item 1: th(G)/2 <= th(G-e) <= 2 th(G).
      if (minus.has_edge() && !within(s, 2 * th(rule, star, minus), 4 * s)) return fail("1 (star)", where);
      if (!within(x, 2 * th(rule, cross, minus), 4 * x)) return fail("1 (cross)", where);

      const Graph con = contract_edge(g, e).first;
      if (rule == RuleKind::PowerDomination) {
        // Item 3: two-sided factor 2.
        if (con.has_edge() && !within(s, 2 * th(rule, star, con), 4 * s)) return fail("3 (star)", where);
        if (!within(x, 2 * th(rule, cross, con), 4 * x)) return fail("3 (cross)", where);
      } else {
        // Item 4: lower bound only.
        if (con.has_edge() && s > 2 * th(rule, star, con)) return fail("4 (star)", where);
        if (x > 2 * th(rule, cross, con)) return fail("4 (cross)", where);
      }

      const Graph sub = subdivide_edge(g, e).first;
      // Item 5: th*(G) <= th*(G_e) <= 2 th*(G).
      if (!within(s, th(rule, star, sub), 2 * s)) return fail("5", where);
      // Item 6: factor 2 for power domination, 3/2 for PSD.
      const std::uint64_t xs = th(rule, cross, sub);
      if (rule == RuleKind::PowerDomination ? !within(x, xs, 2 * x) : (xs < x || 2 * xs > 3 * x))
        return fail("6", where);
    }
    for (Vertex v = 0; v < g.order(); ++v) {
      const Graph minus = delete_vertex(g, v).first;
      const std::string where = "vertex " + std::to_string(v);
      // Item 2: th(G)/2 <= th(G-x).
      if (minus.has_edge() && s > 2 * th(rule, star, minus)) return fail("2 (star)", where);
      if (x > 2 * th(rule, cross, minus)) return fail("2 (cross)", where);
    }
  }
  return {};
}

std::string check_zf_unit_steps(const Graph& g, Rng&) {
  const auto z = RuleKind::StandardZF;
  const auto star = ThrottlingKind::ProductNoInitialCost;
  const std::int64_t s = static_cast<std::int64_t>(th(z, star, g));
  auto between = [](std::int64_t lo, std::uint64_t v, std::int64_t hi) {
    return lo <= static_cast<std::int64_t>(v) && static_cast<std::int64_t>(v) <= hi;
  };
  for (Vertex v = 0; v < g.order(); ++v) {
    const Graph minus = delete_vertex(g, v).first;
    if (minus.has_edge() && !between(s - 1, th(z, star, minus), s)) return "item 1: vertex " + std::to_string(v);
  }
  for (const Edge& e : g.edges()) {
    const std::string where = "edge " + edge_string(e);
    const Graph minus = delete_edge(g, e);
    if (minus.has_edge() && !between(s - 1, th(z, star, minus), s + 1)) return "item 2: " + where;
    const Graph con = contract_edge(g, e).first;
    if (con.has_edge() && !between(s - 1, th(z, star, con), s)) return "item 3: " + where;
    const Graph sub = subdivide_edge(g, e).first;
    if (!between(s, th(z, star, sub), s + 1)) return "item 4: " + where;
  }
  return {};
}

// ---- throttling ranges ------------------------------------------------------

std::string check_remark_bounds(const Graph& g, Rng&) {
  const auto n = static_cast<std::uint64_t>(g.order());
  for (RuleKind rule : kAllRules) {
    const std::string r(to_string(rule));
    const auto y = static_cast<std::uint64_t>(parameter_number(rule, g).value);
    if (y + 1 < 2 || y >= n) return r + ": parameter out of [1, n-1]";
    const std::uint64_t sum = th(rule, ThrottlingKind::Sum, g);
    const std::uint64_t x = th(rule, ThrottlingKind::ProductInitialCost, g);
    const std::uint64_t s = th(rule, ThrottlingKind::ProductNoInitialCost, g);
    if (!within(y + 1, sum, n)) return r + ": sum throttling out of [Y+1, n]";
    if (!within(y + 1, x, n)) return r + ": product throttling out of [Y+1, n]";
    if (!within(1, s, n - 1)) return r + ": no-initial-cost throttling out of [1, n-1]";
  }
  return {};
}

std::string check_universal(const Graph& g, Rng&) {
  bool universal = false;
  for (Vertex v = 0; v < g.order(); ++v) universal = universal || g.degree(v) == g.order() - 1;
  const bool star_one = th(RuleKind::PowerDomination, ThrottlingKind::ProductNoInitialCost, g) == 1;
  const bool cross_two = th(RuleKind::PowerDomination, ThrottlingKind::ProductInitialCost, g) == 2;
  if (universal != star_one || universal != cross_two) return "universal vertex biconditional fails";
  return {};
}

std::string check_thzx(const Graph& g, Rng&) {
  const std::uint64_t x = th(RuleKind::StandardZF, ThrottlingKind::ProductInitialCost, g);
  if (x != static_cast<std::uint64_t>(g.order())) return "standard product throttling " + std::to_string(x) + " != n";
  return {};
}

std::string check_identity(const Graph& g, Rng&) {
  const int k = th_star_z_via_identity(g);
  const std::uint64_t direct = th(RuleKind::StandardZF, ThrottlingKind::ProductNoInitialCost, g);
  if (static_cast<std::uint64_t>(k) != direct)
    return "k(G,1) = " + std::to_string(k) + " but search gives " + std::to_string(direct);
  if (2 * k < g.order()) return "k(G,1) below n/2";
  return {};
}

std::string check_matched_sum(const Graph& g, Rng&) {
  const bool half = 2 * th(RuleKind::StandardZF, ThrottlingKind::ProductNoInitialCost, g) ==
                    static_cast<std::uint64_t>(g.order());
  const bool matched = is_matched_sum(g).has_value();
  if (half != matched) return std::string("th* = n/2 is ") + (half ? "true" : "false") + ", matched sum is " +
                              (matched ? "true" : "false");
  return {};
}

// ---- structural checks ------------------------------------------------------

std::string check_graph_ops(const Graph& g, Rng&) {
  const int n = g.order();
  std::vector<Edge> edges = g.edges();
  for (Vertex x = 0; x < n; ++x) {
    auto [minus, map] = delete_vertex(g, x);
    if (minus.order() != n - 1 || minus.size() != g.size() - g.degree(x)) return "vertex deletion size";
    for (const Edge& e : edges)
      if (e.u != x && e.v != x && !minus.adjacent(*map.image[e.u], *map.image[e.v])) return "vertex deletion lost an edge";
  }
  for (const Edge& e : edges) {
    const std::string where = " at " + edge_string(e);
    if (delete_edge(g, e).size() != g.size() - 1) return "edge deletion size" + where;
    auto [con, con_map] = contract_edge(g, e);
    const int common = std::popcount(g.adj(e.u) & g.adj(e.v));
    if (con.order() != n - 1 || con.size() != g.size() - 1 - common) return "contraction size" + where;
    const Vertex y = *con_map.merged_into;
    if (con.neighborhood(y).bits() != push(con_map, (g.adj(e.u) | g.adj(e.v)) & ~(bit(e.u) | bit(e.v))))
      return "contracted neighborhood" + where;
    auto [sub, sub_map] = subdivide_edge(g, e);
    const Vertex z = *sub_map.new_vertex;
    if (sub.order() != n + 1 || sub.size() != g.size() + 1 || sub.adjacent(e.u, e.v) || !sub.adjacent(e.u, z) ||
        !sub.adjacent(e.v, z))
      return "subdivision shape" + where;
    if (!are_isomorphic(contract_edge(sub, Edge(e.u, z)).first, g)) return "contraction does not undo subdivision" + where;
  }
  Mask seen = 0;
  const auto parts = components(g);
  for (const VertexSet& part : parts) {
    if (part.bits() & seen) return "components overlap";
    seen |= part.bits();
    if (!is_connected(induced_subgraph(g, part).first)) return "component not connected";
    for (Vertex v : part.members())
      if (g.adj(v) & ~part.bits()) return "edge between components";
  }
  if (seen != full_mask(n)) return "components do not cover V";
  return {};
}

const std::vector<SuiteDef>& suite_defs() {
  static const std::vector<SuiteDef> defs = {
      {{"ore", "domination number at most n/2 without isolated vertices", 8}, Domain::NoIsolated, check_ore},
      {{"lemma2.2", "edge-maximum minimum dominating sets have external private neighbors", 7},
       Domain::ConnectedEdge, check_epn_nonempty},
      {{"lemma2.3", "removing chosen private neighbors leaves no isolated vertex", 7}, Domain::ConnectedMin3,
       check_no_isolated_after_epn},
      {{"lemma3.1", "propagation time under deletion, contraction and subdivision", 6}, Domain::Connected,
       check_lemma_as_stated},
      {{"lemma3.1-z", "as lemma3.1, with item 7 adding the subdivision vertex instead of an endpoint", 6},
       Domain::Connected, check_lemma_subdivision_vertex},
      {{"prop3.2", "factor bounds for product throttling under local changes", 7}, Domain::ConnectedEdge,
       check_factor_bounds},
      {{"prop3.12", "unit bounds for standard no-initial-cost throttling", 7}, Domain::ConnectedEdge,
       check_zf_unit_steps},
      {{"remark1.1", "throttling ranges for graphs with an edge", 7}, Domain::WithEdge, check_remark_bounds},
      {{"universal", "universal vertex iff power domination products are 1 and 2", 7}, Domain::WithEdge,
       check_universal},
      {{"monotone", "propagation time never grows when the initial set grows", 6}, Domain::All, check_monotone},
      {{"psd-superset", "the PSD step contains the standard step", 6}, Domain::All, check_psd_superset},
      {{"pd-dominating", "dominating sets power dominate in one step", 6}, Domain::All, check_pd_dominating},
      {{"thm2.4", "power domination product throttling at most 6n/7, with certificate", 8}, Domain::ConnectedMin3,
       check_six_sevenths},
      {{"thm2.7", "power domination sum throttling at most n/3 + 2, with certificate", 8}, Domain::Connected,
       check_third_plus_two},
      {{"thm3.10", "standard no-initial-cost throttling equals k(G,1) >= n/2", 7}, Domain::ConnectedEdge,
       check_identity},
      {{"thm3.11", "th* = n/2 iff matched sum, connected even order", 8}, Domain::ConnectedEven, check_matched_sum},
      {{"thzx", "standard product throttling equals the order", 7}, Domain::All, check_thzx},
      {{"graph-ops", "structure of deletion, contraction, subdivision and components", 7}, Domain::All,
       check_graph_ops},
  };
  return defs;
}

Graph random_graph(int n, Rng& rng) {
  std::vector<Edge> edges;
  std::bernoulli_distribution coin(0.5);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::string pad(std::size_t i) {
  std::ostringstream out;
  out << std::setw(6) << std::setfill('0') << i;
  return out.str();
}

}  // namespace

const std::vector<PropertySuiteInfo>& property_suites() {
  static const std::vector<PropertySuiteInfo> infos = [] {
    std::vector<PropertySuiteInfo> out;
    for (const SuiteDef& d : suite_defs()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

Report run_property_suite(std::string_view name, int nmax, int sample_budget, int workers, unsigned long long seed) {
  const auto& defs = suite_defs();
  auto def = std::find_if(defs.begin(), defs.end(), [&](const SuiteDef& d) { return d.info.name == name; });
  if (def == defs.end()) throw std::invalid_argument("unknown property suite '" + std::string(name) + "'");
  if (nmax < 1 || nmax > 9) throw std::invalid_argument("nmax must be in 1..9, got " + std::to_string(nmax));
  if (sample_budget < 0) throw std::invalid_argument("sample budget must be nonnegative");
  const auto start = std::chrono::steady_clock::now();

  struct Case {
    Graph graph;
    std::string id;
    bool sampled;
  };
  std::vector<Case> cases;
  for (int n = 1; n <= nmax; ++n) {
    const std::string prefix = def->info.name + "/n" + std::to_string(n) + "/";
    if (n <= def->info.exhaustive_max) {
      std::size_t index = 0;
      for (const Graph& g : graphs_up_to_isomorphism(n))
        if (in_domain(g, def->domain)) cases.push_back({g, prefix + pad(index++), false});
    } else {
      Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<unsigned long long>(n)));
      std::size_t index = 0;
      for (long attempt = 0; index < static_cast<std::size_t>(sample_budget) && attempt < 100L * sample_budget + 100;
           ++attempt) {
        Graph g = random_graph(n, rng);
        if (in_domain(g, def->domain)) cases.push_back({std::move(g), prefix + "s" + pad(index++), true});
      }
    }
  }

  Report report;
  report.suite = "props/" + def->info.name;
  report.records.resize(cases.size());
  parallel_for(cases.size(), workers, [&](std::size_t i) {
    const Case& c = cases[i];
    CaseRecord& rec = report.records[i];
    rec.id = c.id;
    rec.graph = to_graph6(c.graph);
    rec.inputs = "n=" + std::to_string(c.graph.order()) + (c.sampled ? " sampled" : " exhaustive");
    rec.expected = "holds";
    rec.tags["order"] = std::to_string(c.graph.order());
    Rng rng(seed + i);
    try {
      std::string violation = def->check(c.graph, rng);
      rec.pass = violation.empty();
      rec.computed = rec.pass ? "holds" : "violated";
      rec.witness = violation;
    } catch (const std::exception& ex) {
      rec.pass = false;
      rec.computed = "error";
      rec.witness = ex.what();
    }
  });
  report.sort_records();
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace throttle
