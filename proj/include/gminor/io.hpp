#pragma once

#include <string>
#include <string_view>

#include "gminor/graph.hpp"

namespace gminor {

enum class GraphFormat { Graph6, EdgeList, Dimacs };

/// Parses "graph6", "edgelist" or "dimacs"; throws DomainError otherwise.
GraphFormat parse_format_name(std::string_view name);
std::string_view format_name(GraphFormat f);

/// Decodes a graph. Vertex labels follow the source order (0-based for
/// edge lists, shifted down by one for DIMACS).
///
/// Throws ParseError (with byte offset) for malformed bytes, self-loops and
/// repeated edges; FormatError when declared counts disagree with content.
Graph parse_graph(std::string_view bytes, GraphFormat format);

/// Canonical encoding: edges sorted, one per line, trailing newline.
std::string emit_graph(const Graph& g, GraphFormat format);

}  // namespace gminor
