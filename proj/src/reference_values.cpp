#include <algorithm>
#include <chrono>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "throttle/constructive.hpp"
#include "throttle/graph_io.hpp"
#include "throttle/isomorphism.hpp"
#include "throttle/suites.hpp"

namespace throttle {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) end = text.size();
    out.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

int to_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
  return value;
}

bool is_integer(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Vertex resolve_vertex(const NamedGraph& g, const std::string& token) {
  if (auto it = g.vertices.find(token); it != g.vertices.end()) return it->second;
  if (is_integer(token)) return to_int(token);
  throw std::invalid_argument("unknown vertex '" + token + "'");
}

VertexSet resolve_set(const NamedGraph& g, std::string_view spec) {
  const int n = g.graph.order();
  if (spec == "all") return VertexSet::full(n);
  VertexSet out(n, Mask{0});
  if (spec.empty() || spec == "none") return out;
  for (const std::string& token : split(spec, ',')) out.insert(resolve_vertex(g, token));
  return out;
}

Edge resolve_edge(const NamedGraph& g, const std::string& spec) {
  if (auto it = g.edges.find(spec); it != g.edges.end()) return it->second;
  auto parts = split(spec, ',');
  if (parts.size() != 2) throw std::invalid_argument("unknown edge '" + spec + "'");
  return Edge(resolve_vertex(g, parts[0]), resolve_vertex(g, parts[1]));
}

NamedGraph carry_names(const NamedGraph& source, Graph graph, const VertexMap& map) {
  NamedGraph out{std::move(graph), {}, {}, source.figure, source.description};
  for (const auto& [name, v] : source.vertices)
    if (map.image[v]) out.vertices[name] = *map.image[v];
  for (const auto& [name, e] : source.edges) {
    auto a = map.image[e.u], b = map.image[e.v];
    if (a && b && *a != *b && out.graph.adjacent(*a, *b)) out.edges[name] = Edge(*a, *b);
  }
  if (map.merged_into) out.vertices["y"] = *map.merged_into;
  if (map.new_vertex) out.vertices["z"] = *map.new_vertex;
  return out;
}

ThrottlingKind kind_arg(const std::vector<std::string>& parts, std::size_t i) {
  if (parts.size() <= i) throw std::invalid_argument("missing throttling kind");
  return parse_kind(parts[i]);
}

std::string value_string(const ThrottleValue& v) { return v ? std::to_string(*v) : "inf"; }

std::string bool_string(bool b) { return b ? "true" : "false"; }

}  // namespace

NamedGraph apply_transform(const NamedGraph& g, std::string_view transform) {
  if (transform.empty()) return g;
  const char op = transform[0];
  const std::string target(transform.substr(1));
  if (op == '-') {
    const bool vertex_target = g.vertices.count(target) || is_integer(target);
    if (vertex_target) {
      auto [graph, map] = delete_vertex(g.graph, resolve_vertex(g, target));
      return carry_names(g, std::move(graph), map);
    }
    const Edge e = resolve_edge(g, target);
    VertexMap identity;
    for (Vertex v = 0; v < g.graph.order(); ++v) identity.image.emplace_back(v);
    return carry_names(g, delete_edge(g.graph, e), identity);
  }
  if (op == '/') {
    auto [graph, map] = contract_edge(g.graph, resolve_edge(g, target));
    return carry_names(g, std::move(graph), map);
  }
  if (op == '_') {
    auto [graph, map] = subdivide_edge(g.graph, resolve_edge(g, target));
    return carry_names(g, std::move(graph), map);
  }
  throw std::invalid_argument("unknown transform '" + std::string(transform) + "'");
}

std::string evaluate_quantity(const NamedGraph& named, std::string_view quantity, RuleKind rule) {
  const Graph& g = named.graph;
  const auto parts = split(quantity, ':');
  const std::string& head = parts[0];
  auto arg = [&](std::size_t i) -> const std::string& {
    if (parts.size() <= i) throw std::invalid_argument("quantity '" + std::string(quantity) + "' is missing an argument");
    return parts[i];
  };

  if (head == "order") return std::to_string(g.order());
  if (head == "edges") return std::to_string(g.size());
  if (head == "gamma") return std::to_string(domination_number(g).value);
  if (head == "param") return std::to_string(parameter_number(rule, g).value);
  if (head == "matched_sum") return bool_string(is_matched_sum(g).has_value());
  if (head == "converse") return bool_string(check_six_sevenths_equality(g).converse_counterexample);
  if (head == "eq_status") return std::string(to_string(check_six_sevenths_equality(g).status));
  if (head == "th_star_identity") return std::to_string(th_star_z_via_identity(g));
  if (head == "identity_holds") {
    const int k = th_star_z_via_identity(g);
    const auto direct = throttle(RuleKind::StandardZF, ThrottlingKind::ProductNoInitialCost, g).value;
    return bool_string(static_cast<std::uint64_t>(k) == direct && 2 * k >= g.order());
  }
  if (head == "isolated_after_epn") {
    const VertexSet d = optimal_dominating_set(g).set;
    const VertexSet a = select_private_neighbors(g, d);
    auto [rest, map] = induced_subgraph(g, a.complement());
    int isolated = 0;
    for (Vertex v = 0; v < rest.order(); ++v) isolated += rest.degree(v) == 0;
    return std::to_string(isolated);
  }
  if (head == "th") return std::to_string(throttle(rule, kind_arg(parts, 1), g).value);
  if (head == "th_k") return value_string(throttle_k(rule, kind_arg(parts, 1), g, to_int(arg(2))).value);
  if (head == "th_set") return value_string(throttle_set(rule, kind_arg(parts, 1), g, resolve_set(named, arg(2))));
  if (head == "pt_set") return propagation_time(rule, g, resolve_set(named, arg(1))).to_string();
  if (head == "pt_k") return pt_k(rule, g, to_int(arg(1))).time.to_string();
  if (head == "min_k_pt_le") {
    const PropagationTime limit(to_int(arg(1)));
    for (int k = 1; k <= g.order(); ++k)
      if (pt_k(rule, g, k).time <= limit) return std::to_string(k);
    return "none";
  }
  if (head == "k_of_p") {
    auto r = k_of_p(g, to_int(arg(1)));
    return r.k ? std::to_string(*r.k) : "none";
  }
  if (head == "step") return step(rule, g, resolve_set(named, arg(2)), to_int(arg(1))).to_string();
  if (head == "forcing") return bool_string(is_forcing_set(rule, g, resolve_set(named, arg(1))));
  if (head == "iso") {
    // Fixture names may themselves contain ':'.
    return bool_string(are_isomorphic(g, fixture(quantity.substr(4)).graph));
  }
  if (head == "cert") return std::to_string(construct_pd_certificate(g, parse_bound_target(arg(1))).value);
  if (head == "degree") return std::to_string(g.degree(resolve_vertex(named, arg(1))));
  throw std::invalid_argument("unknown quantity '" + std::string(quantity) + "'");
}

const std::vector<ReferenceEntry>& reference_table() {
  static const std::vector<ReferenceEntry> table = [] {
    std::vector<ReferenceEntry> t = {
        // 7k-vertex family attaining the 6n/7 product bound.
        {"family.order.K2", "example=2.3", "family_6n7:K2", "", "order", "", "7"},
        {"family.order.C4", "example=2.3", "family_6n7:C4", "", "order", "", "14"},
        {"family.order.fig1", "figure=1;example=2.3", "fig1", "", "order", "", "28"},
        {"family.prodx.K2", "example=2.3;theorem=2.4", "family_6n7:K2", "", "th:prodx", "pd", "6"},
        {"family.prodx.P4", "example=2.3", "family_6n7:P4", "", "th:prodx", "pd", "12"},
        {"family.prodx.C4", "example=2.3", "family_6n7:C4", "", "th:prodx", "pd", "12"},
        {"family.prodx.C6", "example=2.3", "family_6n7:C6", "", "th:prodx", "pd", "18"},
        {"family.prodx_set.K2", "example=2.3", "family_6n7:K2", "", "th_set:prodx:v1,v2", "pd", "6"},
        {"family.pt_set.K2", "example=2.3", "family_6n7:K2", "", "pt_set:v1,v2", "pd", "2"},
        {"family.gammaP.K2", "example=2.3", "family_6n7:K2", "", "param", "pd", "2"},
        {"family.no_isolated.K2", "lemma=2.3", "family_6n7:K2", "", "isolated_after_epn", "", "0"},
        {"family.cert.K2", "theorem=2.4", "family_6n7:K2", "", "cert:prodx", "", "6"},
        {"family.pt_dominating.K2", "theorem=2.4", "family_6n7:K2", "", "pt_set:v1,v2,u1_2", "pd", "1"},
        {"family.sum_dominating.K2", "theorem=2.7", "family_6n7:K2", "", "th_set:sum:v1,v2,u1_2", "pd", "4"},
        {"family.equality.K2", "corollary=2.5", "family_6n7:K2", "", "eq_status", "", "holds"},

        // S(2,2,1,1): gamma = 3n/7 without product equality.
        {"spider2211.order", "example=2.6", "spider:2,2,1,1", "", "order", "", "7"},
        {"spider2211.degree_c", "example=2.6", "spider:2,2,1,1", "", "degree:c", "", "4"},
        {"spider2211.gamma", "example=2.6", "spider:2,2,1,1", "", "gamma", "", "3"},
        {"spider2211.prodx", "example=2.6", "spider:2,2,1,1", "", "th:prodx", "pd", "3"},
        {"spider2211.prodx_set_c", "example=2.6", "spider:2,2,1,1", "", "th_set:prodx:c", "pd", "3"},
        {"spider2211.converse", "example=2.6;corollary=2.5", "spider:2,2,1,1", "", "converse", "", "true"},

        // Sum bound floor(n/3) + 2 attained.
        {"tail.order", "theorem=2.7", "ex11_57:K2", "", "order", "", "7"},
        {"tail.sum", "theorem=2.7", "ex11_57:K2", "", "th:sum", "pd", "4"},
        {"tail.cert", "theorem=2.7", "ex11_57:K2", "", "cert:sum", "", "4"},

        // Spider with six legs of order three, plus an edge.
        {"fig2.minus_e_is_spider", "example=3.3", "fig2_spider_plus_e", "-e", "iso:spider:3,3,3,3,3,3", "", "true"},
        {"fig2.spider_order", "example=3.3", "spider:3,3,3,3,3,3", "", "order", "", "19"},
        {"fig2.prodstar.minus_e", "figure=2;example=3.3", "fig2_spider_plus_e", "-e", "th:prodstar", "pd,psd", "3"},
        {"fig2.prodx.minus_e", "figure=2;example=3.3", "fig2_spider_plus_e", "-e", "th:prodx", "pd,psd", "4"},
        {"fig2.prodstar.G", "figure=2;example=3.3", "fig2_spider_plus_e", "", "th:prodstar", "pd,psd", "6"},
        {"fig2.prodx.G", "figure=2;example=3.3", "fig2_spider_plus_e", "", "th:prodx", "pd,psd", "8"},
        {"fig2.prodstar_set_c.minus_e", "example=3.3", "fig2_spider_plus_e", "-e", "th_set:prodstar:c", "psd", "3"},
        {"fig2.psd_first_step", "example=3.3", "spider:3,3,3,3,3,3", "", "step:1:c", "psd", "{1, 4, 7, 10, 13, 16}"},
        {"fig2.pt_one_vertex", "example=3.3", "spider:3,3,3,3,3,3", "", "pt_k:1", "pd", "3"},
        {"fig2.k_for_pt2", "example=3.3", "spider:3,3,3,3,3,3", "", "min_k_pt_le:2", "pd", "6"},
        {"fig2.k_for_pt1", "example=3.3", "spider:3,3,3,3,3,3", "", "min_k_pt_le:1", "pd", "7"},

        // Edge deletion effects.
        {"fig3.H1.prodstar", "figure=3;example=3.4", "fig3_H1", "", "th:prodstar", "pd", "1"},
        {"fig3.H1.prodstar.minus_e", "figure=3;example=3.4", "fig3_H1", "-e", "th:prodstar", "pd", "2"},
        {"fig3.H2.prodx", "figure=3;example=3.4", "fig3_H2", "", "th:prodx", "pd", "3"},
        {"fig3.H2.prodx.minus_e", "figure=3;example=3.4", "fig3_H2", "-e", "th:prodx", "pd", "6"},
        {"fig3.H2.gammaP.minus_e", "example=3.4", "fig3_H2", "-e", "param", "pd", "2"},
        {"fig3.H2.pt2.minus_e", "example=3.4", "fig3_H2", "-e", "pt_k:2", "pd", "2"},
        {"fig3.H2.prodx_k2.minus_e", "example=3.4", "fig3_H2", "-e", "th_k:prodx:2", "pd", "6"},
        {"fig3.H2.prodx_k3.minus_e", "example=3.4", "fig3_H2", "-e", "th_k:prodx:3", "pd", "6"},
        {"fig3.H3.prodstar", "figure=3;example=3.4", "fig3_H3", "", "th:prodstar", "psd", "3"},
        {"fig3.H3.prodstar.minus_e", "figure=3;example=3.4", "fig3_H3", "-e", "th:prodstar", "psd", "6"},
        {"fig3.H3.prodx", "figure=3;example=3.4", "fig3_H3", "", "th:prodx", "psd", "4"},
        {"fig3.H3.prodx.minus_e", "figure=3;example=3.4", "fig3_H3", "-e", "th:prodx", "psd", "8"},

        // Independent twin of the center.
        {"fig4.prodstar.G", "figure=4;example=3.5", "fig4_twin", "", "th:prodstar", "pd,psd", "4"},
        {"fig4.prodx.G", "figure=4;example=3.5", "fig4_twin", "", "th:prodx", "pd,psd", "6"},
        {"fig4.prodstar.minus_x", "figure=4;example=3.5", "fig4_twin", "-x", "th:prodstar", "pd,psd", "2"},
        {"fig4.prodx.minus_x", "figure=4;example=3.5", "fig4_twin", "-x", "th:prodx", "pd,psd", "3"},
        {"fig4.minus_x_is_spider", "example=3.5", "fig4_twin", "-x", "iso:spider:2,2,2,2", "", "true"},

        // Contracting the central edge of K2 o 2K1.
        {"fig5.is_corona", "example=3.6", "corona:K2,2", "", "iso:fig5_K2corona", "", "true"},
        {"fig5.prodstar.G", "figure=5;example=3.6", "fig5_K2corona", "", "th:prodstar", "pd,psd", "2"},
        {"fig5.prodx.G", "figure=5;example=3.6", "fig5_K2corona", "", "th:prodx", "pd", "4"},
        {"fig5.prodstar.contract_e", "figure=5;example=3.6", "fig5_K2corona", "/e", "th:prodstar", "pd,psd", "1"},
        {"fig5.prodx.contract_e", "figure=5;example=3.6", "fig5_K2corona", "/e", "th:prodx", "pd", "2"},
        {"fig5.contract_is_star", "example=3.6", "fig5_K2corona", "/e", "iso:star:5", "", "true"},
        {"fig5.pt_one_vertex", "example=3.6", "fig5_K2corona", "", "pt_k:1", "psd", "2"},

        // Contraction doubling.
        {"fig6.prodstar.G", "figure=6;example=3.7", "fig6_legs5_plus_e", "", "th:prodstar", "pd", "2"},
        {"fig6.prodx.G", "figure=6;example=3.7", "fig6_legs5_plus_e", "", "th:prodx", "pd", "3"},
        {"fig6.prodstar.contract_e", "figure=6;example=3.7", "fig6_legs5_plus_e", "/e", "th:prodstar", "pd", "4"},
        {"fig6.prodx.contract_e", "figure=6;example=3.7", "fig6_legs5_plus_e", "/e", "th:prodx", "pd", "6"},
        {"longlegs.prodx.H", "example=3.7", "ex3_7_H", "", "th:prodx", "psd", "8"},
        {"longlegs.prodx.contract_e", "example=3.7", "ex3_7_H", "/e", "th:prodx", "psd", "4"},

        // Subdivision doubling.
        {"fig7.prodx.G", "figure=7", "fig7_subdiv", "", "th:prodx", "pd", "3"},
        {"fig7.prodx.subdivide_e", "figure=7", "fig7_subdiv", "_e", "th:prodx", "pd", "6"},

        // Universal vertex gaps.
        {"tower.order", "example=3.10", "corona_tower:K2", "", "order", "", "9"},
        {"tower.prodstar.G", "example=3.10", "corona_tower:K2", "", "th:prodstar", "pd", "1"},
        {"tower.prodx.G", "example=3.10", "corona_tower:K2", "", "th:prodx", "pd", "2"},
        {"tower.prodstar.minus_u", "example=3.10", "corona_tower:K2", "-u", "th:prodstar", "pd", "4"},
        {"tower.prodx.minus_u", "example=3.10", "corona_tower:K2", "-u", "th:prodx", "pd", "6"},
        {"star_edge.prodstar.G", "example=3.10", "star_plus_edge:6", "", "th:prodstar", "psd", "2"},
        {"star_edge.prodx.G", "example=3.10", "star_plus_edge:6", "", "th:prodx", "psd", "4"},
        {"star_edge.prodstar.minus_c", "example=3.10", "star_plus_edge:6", "-c", "th:prodstar", "psd", "4"},
        {"star_edge.prodx.minus_c", "example=3.10", "star_plus_edge:6", "-c", "th:prodx", "psd", "5"},
        {"star_edge.forcing_c1", "example=3.10", "star_plus_edge:6", "", "forcing:c,1", "psd", "true"},

        // Book graph B_3 and its spine contraction.
        {"book.order", "family=book", "book:3", "", "order", "", "8"},
        {"book.degree_u", "family=book", "book:3", "", "degree:u", "", "4"},
        {"book.degree_v", "family=book", "book:3", "", "degree:v", "", "4"},
        {"book.zplus", "family=book", "book:3", "", "param", "psd", "2"},
        {"book.pt2", "family=book", "book:3", "", "pt_k:2", "psd", "1"},
        {"book.prodstar", "family=book", "book:3", "", "th:prodstar", "psd", "2"},
        {"book.prodx", "family=book", "book:3", "", "th:prodx", "psd", "4"},
        {"book.order.contract_spine", "family=book", "book:3", "/spine", "order", "", "7"},
        {"book.zplus.contract_spine", "family=book", "book:3", "/spine", "param", "psd", "4"},
        {"book.prodstar.contract_spine", "family=book", "book:3", "/spine", "th:prodstar", "psd", "4"},
        {"book.prodx.contract_spine", "family=book", "book:3", "/spine", "th:prodx", "psd", "7"},
        {"book.prodx_k7.contract_spine", "family=book", "book:3", "/spine", "th_k:prodx:7", "psd", "7"},

        // Standard zero forcing: initial-cost product throttling is the order.
        {"zf_prodx.path6", "identity=thzx", "path:6", "", "th:prodx", "zf", "6"},
        {"zf_prodx.complete5", "identity=thzx", "complete:5", "", "th:prodx", "zf", "5"},
        {"zf_prodx.book3", "identity=thzx", "book:3", "", "th:prodx", "zf", "8"},
        {"zf_prodx.twin", "identity=thzx", "fig4_twin", "", "th:prodx", "zf", "10"},

        // No-initial-cost standard throttling via k(G, 1).
        {"kofp.path5", "theorem=3.10", "path:5", "", "k_of_p:1", "", "3"},
        {"kofp.ksum3", "theorem=3.11", "ksum:3", "", "k_of_p:1", "", "3"},

        // Matched sums.
        {"ksum3.edges", "theorem=3.11", "ksum:3", "", "edges", "", "9"},
        {"ksum3.matched_sum", "theorem=3.11", "ksum:3", "", "matched_sum", "", "true"},
        {"ksum3.prodstar", "theorem=3.11", "ksum:3", "", "th:prodstar", "zf", "3"},
        {"ksum3.identity", "theorem=3.10;theorem=3.11", "ksum:3", "", "th_star_identity", "", "3"},
        {"path8.matched_sum", "theorem=3.11", "path:8", "", "matched_sum", "", "true"},

        // Sharpness of the one-step change bounds.
        {"sharp.path7_minus_end", "proposition=3.12", "path:7", "-6", "iso:path:6", "", "true"},
        {"sharp.path7.prodstar", "proposition=3.12", "path:7", "", "th:prodstar", "zf", "4"},
        {"sharp.path7_minus_end.prodstar", "proposition=3.12", "path:7", "-6", "th:prodstar", "zf", "3"},
        {"sharp.ksum3_minus_m.prodstar", "proposition=3.12", "ksum:3", "-m", "th:prodstar", "zf", "4"},
        {"sharp.ksum3_minus_m.k_for_pt1", "proposition=3.12", "ksum:3", "-m", "min_k_pt_le:1", "zf", "4"},
        {"sharp.star6_contract", "proposition=3.12", "star:6", "/0,1", "iso:star:5", "", "true"},
        {"sharp.star6.prodstar", "proposition=3.12", "star:6", "", "th:prodstar", "zf", "5"},
        {"sharp.star6_contract.prodstar", "proposition=3.12", "star:6", "/0,1", "th:prodstar", "zf", "4"},
        {"sharp.star_is_corona", "family=corona", "corona:K1,4", "", "iso:star:5", "", "true"},
        {"sharp.tower_is_join", "example=3.10", "corona_tower:K2", "-u", "iso:corona:P4,1", "", "true"},
    };

    const std::string y = "pd,psd";
    for (int n = 1; n <= 10; ++n) {
      const std::string p = "path:" + std::to_string(n);
      const std::string sn = std::to_string(n);
      if (n >= 2)
        t.push_back({"path.prodstar.P" + sn, "example=3.8", p, "", "th:prodstar", y, std::to_string((n + 2) / 3)});
      t.push_back({"path.prodx.P" + sn, "example=3.8", p, "", "th:prodx", y, std::to_string(1 + n / 2)});
    }
    t.push_back({"path.subdivide_is_longer", "example=3.8", "path:5", "_0,1", "iso:path:6", "", "true"});
    for (int r = 1; r <= 4; ++r) {
      const std::string even = "path:" + std::to_string(2 * r), odd = "path:" + std::to_string(2 * r + 1);
      t.push_back({"identity.P" + std::to_string(2 * r), "theorem=3.10", even, "", "th_star_identity", "",
                   std::to_string(r)});
      t.push_back({"identity.P" + std::to_string(2 * r + 1), "theorem=3.10", odd, "", "th_star_identity", "",
                   std::to_string(r + 1)});
      t.push_back({"identity_bound.P" + std::to_string(2 * r), "theorem=3.10", even, "", "identity_holds", "", "true"});
      t.push_back(
          {"identity_bound.P" + std::to_string(2 * r + 1), "theorem=3.10", odd, "", "identity_holds", "", "true"});
    }
    for (int n = 5; n <= 8; ++n) {
      const std::string s = "star:" + std::to_string(n);
      const std::string sn = std::to_string(n);
      t.push_back({"star.prodstar.S" + sn, "example=3.9", s, "", "th:prodstar", y, "1"});
      t.push_back({"star.prodstar.subdivided.S" + sn, "example=3.9", s, "_0,1", "th:prodstar", y, "2"});
      t.push_back({"star.prodx.S" + sn, "example=3.9", s, "", "th:prodx", "psd", "2"});
      t.push_back({"star.prodx.subdivided.S" + sn, "example=3.9", s, "_0,1", "th:prodx", "psd", "3"});
      t.push_back({"star.pt_center.subdivided.S" + sn, "example=3.9", s, "_0,1", "pt_set:0", "pd", "2"});
    }
    return t;
  }();
  return table;
}

namespace {

std::vector<std::pair<std::string, std::string>> parse_tags(const std::string& tags) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const std::string& item : split(tags, ';')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    out.emplace_back(item.substr(0, eq), eq == std::string::npos ? "" : item.substr(eq + 1));
  }
  return out;
}

bool matches(const ReferenceEntry& e, const std::vector<std::pair<std::string, std::string>>& filters) {
  const auto tags = parse_tags(e.tags);
  for (const auto& [key, value] : filters) {
    if (key == "id") {
      if (e.id.rfind(value, 0) != 0) return false;
      continue;
    }
    if (std::find(tags.begin(), tags.end(), std::pair{key, value}) == tags.end()) return false;
  }
  return true;
}

CaseRecord evaluate_entry(const ReferenceEntry& e) {
  CaseRecord rec;
  rec.id = e.id;
  rec.expected = e.expected;
  rec.inputs = e.fixture + e.transform + " " + e.quantity + (e.rules.empty() ? "" : " [" + e.rules + "]");
  for (const auto& [k, v] : parse_tags(e.tags)) rec.tags[k] = rec.tags.count(k) ? rec.tags[k] + "," + v : v;
  try {
    const NamedGraph g = apply_transform(fixture(e.fixture), e.transform);
    rec.graph = to_graph6(g.graph);
    std::vector<RuleKind> rules;
    if (e.rules.empty()) {
      rules.push_back(RuleKind::PowerDomination);
    } else {
      for (const std::string& r : split(e.rules, ',')) rules.push_back(parse_rule(r));
    }
    std::vector<std::string> values;
    bool pass = true;
    for (RuleKind rule : rules) {
      values.push_back(evaluate_quantity(g, e.quantity, rule));
      pass = pass && values.back() == e.expected;
    }
    if (std::all_of(values.begin(), values.end(), [&](const std::string& v) { return v == values.front(); })) {
      rec.computed = values.front();
    } else {
      for (std::size_t i = 0; i < values.size(); ++i)
        rec.computed += (i ? " " : "") + std::string(to_string(rules[i])) + ":" + values[i];
    }
    rec.pass = pass;
  } catch (const std::exception& ex) {
    rec.computed = std::string("error: ") + ex.what();
    rec.pass = false;
  }
  return rec;
}

}  // namespace

Report run_reference_suite(const std::vector<std::pair<std::string, std::string>>& filters, int workers) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<const ReferenceEntry*> selected;
  for (const ReferenceEntry& e : reference_table())
    if (matches(e, filters)) selected.push_back(&e);
  Report report;
  report.suite = "paper-suite/v" + std::to_string(kReferenceTableVersion);
  report.records.resize(selected.size());
  parallel_for(selected.size(), workers, [&](std::size_t i) { report.records[i] = evaluate_entry(*selected[i]); });
  report.sort_records();
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace throttle
