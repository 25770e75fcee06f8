#include "throttle/families.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>
#include <set>
#include <stdexcept>

#include "throttle/graph_io.hpp"
#include "throttle/isomorphism.hpp"

namespace throttle {

namespace detail {
// Generated from data/fixtures at build time.
const std::vector<std::pair<std::string_view, std::string_view>>& fixture_sources();
}  // namespace detail

Vertex NamedGraph::vertex(const std::string& name) const {
  auto it = vertices.find(name);
  if (it == vertices.end()) throw std::invalid_argument("no vertex named '" + name + "'");
  return it->second;
}

Edge NamedGraph::edge(const std::string& name) const {
  auto it = edges.find(name);
  if (it == edges.end()) throw std::invalid_argument("no edge named '" + name + "'");
  return it->second;
}

namespace {
void require_positive(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": order must be at least 1");
}
}  // namespace

Graph path(int n) {
  require_positive(n, "path");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: order must be at least 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete(int n) {
  require_positive(n, "complete");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph star(int n) {
  require_positive(n, "star");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph(n, edges);
}

Graph empty(int n) {
  require_positive(n, "empty");
  return Graph(n, {});
}

NamedGraph spider(const std::vector<int>& legs) {
  if (legs.size() < 3) throw std::invalid_argument("spider: needs at least three legs");
  NamedGraph out;
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (legs[i] < 1) throw std::invalid_argument("spider: leg orders must be positive");
    Vertex prev = 0;
    for (int j = 0; j < legs[i]; ++j) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  out.graph = Graph(next, edges);
  out.vertices["c"] = 0;
  return out;
}

Graph corona(const Graph& h, int r) {
  if (r < 1) throw std::invalid_argument("corona: r must be at least 1");
  const int n = h.order();
  std::vector<Edge> edges = h.edges();
  for (Vertex v = 0; v < n; ++v)
    for (int j = 0; j < r; ++j) edges.emplace_back(v, n + r * v + j);
  return Graph(n * (1 + r), edges);
}

Graph matched_sum(const Graph& g1, const Graph& g2, const std::vector<std::pair<Vertex, Vertex>>& matching) {
  const int n = g1.order();
  if (g2.order() != n) throw std::invalid_argument("matched_sum: graphs must have equal order");
  if (static_cast<int>(matching.size()) != n) throw std::invalid_argument("matched_sum: matching must saturate both sides");
  Mask left = 0, right = 0;
  for (auto [a, b] : matching) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("matched_sum: matching label out of range");
    if ((left & bit(a)) || (right & bit(b))) throw std::invalid_argument("matched_sum: not a matching");
    left |= bit(a);
    right |= bit(b);
  }
  std::vector<Edge> edges = disjoint_union(g1, g2).edges();
  for (auto [a, b] : matching) edges.emplace_back(a, n + b);
  return Graph(2 * n, edges);
}

NamedGraph book(int k) {
  if (k < 1) throw std::invalid_argument("book: k must be at least 1");
  std::vector<Edge> edges{{0, 1}};
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(0, 2 + i);
    edges.emplace_back(1, 2 + k + i);
    edges.emplace_back(2 + i, 2 + k + i);
  }
  NamedGraph out;
  out.graph = Graph(2 * k + 2, edges);
  out.vertices = {{"u", 0}, {"v", 1}};
  out.edges["spine"] = Edge(0, 1);
  return out;
}

NamedGraph family_6n7(const Graph& h, bool force) {
  const int n = h.order();
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("family_6n7: H must have even positive order");
  if (!force && !is_connected(h)) throw std::invalid_argument("family_6n7: H must be connected");
  const int k = n / 2;
  NamedGraph out;
  std::vector<Edge> edges = h.edges();
  for (int i = 0; i < n; ++i) {
    const Vertex u1 = n + 2 * i, u2 = n + 2 * i + 1;
    edges.emplace_back(i, u1);
    edges.emplace_back(i, u2);
    const std::string idx = std::to_string(i + 1);
    out.vertices["v" + idx] = i;
    out.vertices["u" + idx + "_1"] = u1;
    out.vertices["u" + idx + "_2"] = u2;
    if (i < k) {
      const Vertex u3 = 3 * n + i;
      edges.emplace_back(u2, u3);
      out.vertices["u" + idx + "_3"] = u3;
    }
  }
  out.graph = Graph(7 * k, edges);
  return out;
}

NamedGraph ex11_57(const Graph& h) {
  if (h.order() < 2 || !is_connected(h)) throw std::invalid_argument("ex11_57: H must be connected of order at least 2");
  const int n = h.order();
  std::vector<Edge> edges = corona(h, 2).edges();
  edges.emplace_back(n, 3 * n);
  NamedGraph out;
  out.graph = Graph(3 * n + 1, edges);
  out.vertices = {{"leaf", n}, {"tail", 3 * n}};
  return out;
}

NamedGraph star_plus_edge(int n) {
  if (n < 3) throw std::invalid_argument("star_plus_edge: order must be at least 3");
  std::vector<Edge> edges = star(n).edges();
  edges.emplace_back(1, 2);
  NamedGraph out;
  out.graph = Graph(n, edges);
  out.vertices["c"] = 0;
  out.edges["extra"] = Edge(1, 2);
  return out;
}

NamedGraph corona_tower(const Graph& h) {
  NamedGraph out;
  out.graph = join_vertex(corona(corona(h, 1), 1));
  out.vertices["u"] = out.graph.order() - 1;
  return out;
}

namespace {

int parse_positive(std::string_view text, std::string_view context) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 0)
    throw std::invalid_argument("bad number '" + std::string(text) + "' in '" + std::string(context) + "'");
  return value;
}

NamedGraph load_data_fixture(std::string_view name) {
  for (const auto& [key, text] : detail::fixture_sources()) {
    if (key != name) continue;
    AnnotatedGraph parsed = parse_annotated_edge_list(text);
    NamedGraph out;
    out.graph = parsed.graph;
    for (const auto& [k, values] : parsed.meta) {
      if (k == "vertex" && values.size() == 2) {
        out.vertices[values[0]] = parse_positive(values[1], name);
      } else if (k == "edge" && values.size() == 3) {
        out.edges[values[0]] = Edge(parse_positive(values[1], name), parse_positive(values[2], name));
      } else if (k == "figure" && !values.empty()) {
        out.figure = values[0];
      } else if (k == "describe") {
        for (const auto& w : values) out.description += (out.description.empty() ? "" : " ") + w;
      }
    }
    return out;
  }
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

}  // namespace

Graph small_graph(std::string_view spec) {
  if (spec.size() < 2) throw std::invalid_argument("bad graph name '" + std::string(spec) + "'");
  const int n = parse_positive(spec.substr(1), spec);
  switch (spec[0]) {
    case 'K': return complete(n);
    case 'P': return path(n);
    case 'C': return cycle(n);
    case 'S': return star(n);
    case 'E': return empty(n);
    default: throw std::invalid_argument("bad graph name '" + std::string(spec) + "'");
  }
}

NamedGraph fixture(std::string_view name) {
  std::string_view base = name, arg;
  if (auto colon = name.find(':'); colon != std::string_view::npos) {
    base = name.substr(0, colon);
    arg = name.substr(colon + 1);
  } else if (auto paren = name.find('('); paren != std::string_view::npos && name.back() == ')') {
    base = name.substr(0, paren);
    arg = name.substr(paren + 1, name.size() - paren - 2);
  }

  if (base == "family_6n7") return family_6n7(small_graph(arg));
  if (base == "ex11_57") return ex11_57(small_graph(arg));
  if (base == "corona_tower") return corona_tower(small_graph(arg));
  if (base == "star_plus_edge") return star_plus_edge(parse_positive(arg, name));
  if (base == "book") return book(parse_positive(arg, name));
  if (base == "ksum") {
    const int r = parse_positive(arg, name);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (int i = 0; i < r; ++i) pairs.emplace_back(i, i);
    NamedGraph out{matched_sum(complete(r), complete(r), pairs), {}, {}, {}, {}};
    out.edges["m"] = Edge(0, r);
    return out;
  }
  if (base == "corona") {
    const auto comma = arg.rfind(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("corona needs '<H>,<r>'");
    return NamedGraph{corona(small_graph(arg.substr(0, comma)), parse_positive(arg.substr(comma + 1), name)), {}, {}, {}, {}};
  }
  if (base == "spider") {
    std::vector<int> legs;
    std::size_t start = 0;
    while (start <= arg.size()) {
      std::size_t end = arg.find(',', start);
      if (end == std::string_view::npos) end = arg.size();
      legs.push_back(parse_positive(arg.substr(start, end - start), name));
      start = end + 1;
    }
    return spider(legs);
  }
  if (base == "path" || base == "cycle" || base == "complete" || base == "star" || base == "empty") {
    const char code = base == "path" ? 'P' : base == "cycle" ? 'C' : base == "complete" ? 'K' : base == "star" ? 'S' : 'E';
    return NamedGraph{small_graph(std::string(1, code) + std::string(arg)), {}, {}, {}, {}};
  }
  if (base == "graph") return NamedGraph{small_graph(arg), {}, {}, {}, {}};
  if (base == "fig1") {
    NamedGraph out = family_6n7(load_data_fixture("fig1_H").graph);
    out.figure = "1";
    return out;
  }
  if (!arg.empty()) throw std::invalid_argument("fixture '" + std::string(base) + "' takes no argument");
  return load_data_fixture(base);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [key, text] : detail::fixture_sources()) out.emplace_back(key);
  for (const char* parametric : {"fig1", "family_6n7:<H>", "ex11_57:<H>", "corona_tower:<H>", "star_plus_edge:<n>",
                                 "spider:<a1,a2,...>", "book:<k>", "ksum:<r>", "corona:<H>,<r>", "path:<n>", "cycle:<n>", "complete:<n>",
                                 "star:<n>", "empty:<n>", "graph:<K|P|C|S|E><n>"})
    out.emplace_back(parametric);
  return out;
}

namespace {

void check_enumeration_order(int n) {
  if (n < 1 || n > 9) throw std::invalid_argument("graph enumeration supports 1 <= n <= 9, got " + std::to_string(n));
}

std::vector<Graph> build_isomorphism_classes(int n) {
  if (n == 1) return {Graph(1, {})};
  const auto& smaller = graphs_up_to_isomorphism(n - 1);
  std::set<std::vector<Mask>> seen;
  std::vector<std::pair<std::vector<Mask>, Graph>> reps;
  const Vertex fresh = n - 1;
  for (const Graph& base : smaller) {
    std::vector<Edge> base_edges = base.edges();
    for (Mask nbrs = 0; nbrs <= full_mask(n - 1); ++nbrs) {
      std::vector<Edge> edges = base_edges;
      for (Mask m = nbrs; m; m &= m - 1) edges.emplace_back(std::countr_zero(m), fresh);
      Graph g(n, edges);
      CanonicalForm cf = canonical_form(g);
      if (seen.insert(cf.rows).second) reps.emplace_back(cf.rows, relabel(g, cf.permutation));
    }
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.first < b.first;
  });
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (auto& r : reps) out.push_back(std::move(r.second));
  return out;
}

}  // namespace

const std::vector<Graph>& graphs_up_to_isomorphism(int n) {
  check_enumeration_order(n);
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // Built outside the lock: the recursion re-enters for n - 1.
  std::vector<Graph> built = build_isomorphism_classes(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(built)).first->second;
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only, bool up_to_isomorphism) {
  check_enumeration_order(n);
  std::vector<Graph> out;
  if (up_to_isomorphism) {
    for (const Graph& g : graphs_up_to_isomorphism(n))
      if (!connected_only || is_connected(g)) out.push_back(g);
  } else {
    for_each_labeled_graph(n, connected_only, [&](const Graph& g) { out.push_back(g); });
  }
  return out;
}

void for_each_labeled_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit) {
  check_enumeration_order(n);
  std::vector<Edge> slots;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
  const std::uint64_t count = std::uint64_t{1} << slots.size();
  std::vector<Edge> edges;
  for (std::uint64_t code = 0; code < count; ++code) {
    edges.clear();
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((code >> s) & 1) edges.push_back(slots[s]);
    Graph g(n, edges);
    if (!connected_only || is_connected(g)) visit(g);
  }
}

}  // namespace throttle
