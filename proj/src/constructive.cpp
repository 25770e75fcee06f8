#include "throttle/constructive.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace throttle {

std::string_view to_string(BoundTarget target) {
  return target == BoundTarget::ProductSixSevenths ? "product-6n/7" : "sum-n/3+2";
}

BoundTarget parse_bound_target(std::string_view name) {
  if (name == "product-6n/7" || name == "prodx" || name == "6n7") return BoundTarget::ProductSixSevenths;
  if (name == "sum-n/3+2" || name == "sum" || name == "n3plus2") return BoundTarget::SumThirdPlusTwo;
  throw std::invalid_argument("unknown bound target '" + std::string(name) + "'");
}

std::string_view to_string(EqualityStatus status) {
  switch (status) {
    case EqualityStatus::Vacuous: return "vacuous";
    case EqualityStatus::Holds: return "holds";
    case EqualityStatus::Violated: return "violated";
  }
  return "?";
}

Vertex least_label_choice(Vertex, const VertexSet& candidates) { return std::countr_zero(candidates.bits()); }

VertexSet select_private_neighbors(const Graph& g, const VertexSet& d, const EpnChoice& choose) {
  VertexSet a(g.order());
  for (Vertex v : d.members()) {
    VertexSet candidates = epn(g, d, v);
    if (candidates.empty())
      throw std::logic_error("vertex " + std::to_string(v) + " has no external private neighbor");
    Vertex u = choose(v, candidates);
    if (!candidates.contains(u)) throw std::logic_error("choice function returned a vertex outside epn");
    a.insert(u);
  }
  return a;
}

namespace {

void ensure(bool condition, const char* what) {
  if (!condition) throw std::logic_error(std::string("construction invariant failed: ") + what);
}

}  // namespace

BoundCertificate construct_pd_certificate(const Graph& g, BoundTarget target, const EpnChoice& choose) {
  const int n = g.order();
  const bool product = target == BoundTarget::ProductSixSevenths;
  if (n < (product ? 3 : 1))
    throw std::invalid_argument(std::string("construct_pd_certificate: order too small for ") + std::string(to_string(target)));
  if (!is_connected(g)) throw std::invalid_argument("construct_pd_certificate: graph must be connected");

  BoundCertificate cert;
  cert.target = target;
  cert.order = n;
  cert.dominating = optimal_dominating_set(g);
  const VertexSet& d = cert.dominating.set;
  const int dsize = d.size();
  cert.bound = product ? Fraction{6 * n, 7} : Fraction{n / 3 + 2, 1};

  // |D| <= 3n/7 (product) or |D| <= n/3 (sum): D itself has pt 1. Orders
  // below three always take this path.
  const bool small = product ? 7 * dsize <= 3 * n : (3 * dsize <= n || n < 3);
  cert.selected_private_neighbors = VertexSet(n);
  if (small) {
    cert.power_set = d;
  } else {
    const VertexSet a = select_private_neighbors(g, d, choose);
    ensure(a.size() == dsize, "|A| = |D|");
    ensure((a & d).empty(), "A and D disjoint");
    auto [rest, map] = induced_subgraph(g, a.complement());
    for (Vertex v = 0; v < rest.order(); ++v) ensure(rest.degree(v) > 0, "G - A has no isolated vertices");
    const VertexSet p_local = domination_number(rest).witness;
    VertexSet p(n);
    for (Vertex v = 0; v < n; ++v)
      if (map.image[v] && p_local.contains(*map.image[v])) p.insert(v);
    ensure(2 * p.size() <= n - dsize, "|P| <= |V - A| / 2");
    cert.selected_private_neighbors = a;
    cert.power_set = p;
  }

  const PropagationTime t = propagation_time(RuleKind::PowerDomination, g, cert.power_set);
  ensure(t.is_finite() && t.value() <= 2, "pt(G, P) <= 2");
  cert.pt = t.value();
  cert.value = combine(product ? ThrottlingKind::ProductInitialCost : ThrottlingKind::Sum, cert.power_set.size(), cert.pt);
  ensure(static_cast<std::int64_t>(cert.value) * cert.bound.den <= cert.bound.num, "value within bound");
  return cert;
}

EqualityReport check_six_sevenths_equality(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("check_six_sevenths_equality: graph must be connected");
  EqualityReport r;
  r.order = g.order();
  r.gamma = domination_number(g).value;
  r.product_throttling = throttle(RuleKind::PowerDomination, ThrottlingKind::ProductInitialCost, g).value;
  const bool equality = 7 * r.product_throttling == 6 * static_cast<std::uint64_t>(r.order);
  const bool gamma_matches = 7 * r.gamma == 3 * r.order;
  if (equality) r.status = gamma_matches ? EqualityStatus::Holds : EqualityStatus::Violated;
  r.converse_counterexample = gamma_matches && !equality;
  return r;
}

}  // namespace throttle
