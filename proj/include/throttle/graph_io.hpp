#pragma once

#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "throttle/graph.hpp"

namespace throttle {

/// Malformed textual input. `position` is a byte offset for graph6 and a
/// 1-based line number for edge lists.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Decodes one graph6 string. A leading ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Edge-list text: the order on the first line, then "u v" per line.
/// Blank lines and lines starting with '#' are ignored.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

enum class GraphFormat { Graph6, EdgeList };

GraphFormat parse_format(std::string_view name);

/// All graphs in a stream: one graph6 string per line, or a single edge list.
/// Graph6 errors report the byte offset within the whole stream.
std::vector<Graph> read_graphs(std::istream& in, GraphFormat format);

/// Edge list plus "# key value..." metadata lines, as used for fixtures.
struct AnnotatedGraph {
  Graph graph;
  std::multimap<std::string, std::vector<std::string>> meta;
};
AnnotatedGraph parse_annotated_edge_list(std::string_view text);

}  // namespace throttle
