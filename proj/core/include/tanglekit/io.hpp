#pragma once

#include <string>
#include <string_view>

#include "tanglekit/graph.hpp"

namespace tk {

/// Edge-list text: one `u v` pair per line (0-based ids), `#` comments, and an
/// optional `vertices: n` header declaring vertices 0..n-1 (isolated ones
/// included). Without the header the vertex set is the set of endpoints.
/// Edge ids are assigned densely in line order.
MultiGraph parse_edge_list(std::string_view text);
std::string write_edge_list(const MultiGraph& g);

/// graph6 (simple graphs only).
MultiGraph parse_graph6(std::string_view text);
std::string write_graph6(const MultiGraph& g);

/// Reads a file, choosing graph6 for `.g6` files or `>>graph6<<` headers and
/// the edge-list format otherwise.
MultiGraph read_graph_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace tk
