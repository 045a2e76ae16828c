#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wtd/graph.hpp"

namespace wtd {

enum class GraphFormat { edge_list, graph6 };

/// Parses "edge-list" or "graph6"; throws std::invalid_argument otherwise.
GraphFormat parse_format_name(std::string_view name);

/**
 * Edge-list text:
 *
 *     n <count>
 *     # labels: x y z t w        (optional, must precede the first edge)
 *     <u> <v>
 *     ...
 *
 * Lines starting with '#' are comments; the `# labels:` comment is the one
 * comment the parser interprets, so labelled files stay readable by tools
 * that only know the plain format.
 */
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Single graph6 record (optional ">>graph6<<" header, trailing newline ok).
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);
/// One graph per non-empty line.
std::vector<Graph> parse_graph6_lines(std::string_view text);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string write_graph(const Graph& g, GraphFormat format);

}  // namespace wtd
