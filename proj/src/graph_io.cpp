#include "throttle/graph_io.hpp"

#include <charconv>
#include <sstream>

namespace throttle {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

bool is_graph6_byte(unsigned char c) { return c >= 63 && c <= 126; }

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_int(std::string_view tok, std::size_t line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + std::string(tok) + "'", line);
  return value;
}

Graph parse_graph6_at(std::string_view text, std::size_t base) {
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  auto fail = [&](const std::string& msg, std::size_t at) -> ParseError {
    return ParseError("graph6 byte " + std::to_string(base + at) + ": " + msg, base + at);
  };
  auto byte_at = [&](std::size_t at) -> int {
    if (at >= text.size()) throw fail("unexpected end of input", at);
    auto c = static_cast<unsigned char>(text[at]);
    if (!is_graph6_byte(c)) throw fail("invalid byte " + std::to_string(c), at);
    return c - 63;
  };

  long n = 0;
  if (pos < text.size() && text[pos] == 126) {
    if (pos + 1 < text.size() && text[pos + 1] == 126) {
      for (int i = 0; i < 6; ++i) n = (n << 6) | byte_at(pos + 2 + i);
      pos += 8;
    } else {
      for (int i = 0; i < 3; ++i) n = (n << 6) | byte_at(pos + 1 + i);
      pos += 4;
    }
  } else {
    n = byte_at(pos);
    pos += 1;
  }
  if (n > kMaxOrder) throw fail("order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder), pos - 1);

  const long bits = n * (n - 1) / 2;
  const long bytes = (bits + 5) / 6;
  if (static_cast<long>(text.size() - pos) != bytes) {
    if (static_cast<long>(text.size() - pos) < bytes) throw fail("unexpected end of input", text.size());
    throw fail("trailing data", pos + bytes);
  }
  std::vector<Edge> edges;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  for (long b = 0; b < bytes; ++b) byte_at(pos + b);  // validates padding-only bytes too
  return Graph(static_cast<int>(n), edges);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  return parse_graph6_at(text, 0);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

namespace {

AnnotatedGraph parse_edge_list_impl(std::string_view text) {
  AnnotatedGraph result;
  std::optional<long> order;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0].starts_with('#')) {
      std::string key(toks[0].substr(1));
      std::size_t first = 1;
      if (key.empty() && toks.size() > 1) {
        key = toks[1];
        first = 2;
      }
      if (!key.empty()) {
        std::vector<std::string> values;
        for (std::size_t i = first; i < toks.size(); ++i) values.emplace_back(toks[i]);
        result.meta.emplace(key, std::move(values));
      }
      continue;
    }
    if (!order) {
      if (toks.size() != 1) throw ParseError("line " + std::to_string(line_no) + ": expected the vertex count alone", line_no);
      order = parse_int(toks[0], line_no);
      if (*order < 0 || *order > kMaxOrder)
        throw ParseError("line " + std::to_string(line_no) + ": order out of range", line_no);
      continue;
    }
    if (toks.size() != 2) throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'", line_no);
    long u = parse_int(toks[0], line_no), v = parse_int(toks[1], line_no);
    if (u < 0 || v < 0 || u >= *order || v >= *order)
      throw ParseError("line " + std::to_string(line_no) + ": endpoint out of range", line_no);
    if (u == v) throw ParseError("line " + std::to_string(line_no) + ": loop", line_no);
    Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    for (const Edge& f : edges)
      if (f == e) throw ParseError("line " + std::to_string(line_no) + ": duplicate edge", line_no);
    edges.push_back(e);
  }
  if (!order) throw ParseError("missing vertex count", line_no);
  result.graph = Graph(static_cast<int>(*order), edges);
  return result;
}

}  // namespace

Graph parse_edge_list(std::string_view text) { return parse_edge_list_impl(text).graph; }

AnnotatedGraph parse_annotated_edge_list(std::string_view text) { return parse_edge_list_impl(text); }

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

GraphFormat parse_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::Graph6;
  if (name == "edgelist" || name == "edges") return GraphFormat::EdgeList;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

std::vector<Graph> read_graphs(std::istream& in, GraphFormat format) {
  std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (format == GraphFormat::EdgeList) return {parse_edge_list(all)};
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < all.size()) {
    std::size_t end = all.find('\n', start);
    if (end == std::string::npos) end = all.size();
    std::string_view line(all.data() + start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(parse_graph6_at(line, start));
    start = end + 1;
  }
  return out;
}

}  // namespace throttle
