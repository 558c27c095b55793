#ifndef VISIKIT_EDGE_LIST_HPP_
#define VISIKIT_EDGE_LIST_HPP_

#include <iosfwd>
#include <string>

#include "visikit/graph.hpp"

namespace visikit {

// Text format: a header line "n m", then m lines "u v" with 0-based ids.
// Blank lines and lines starting with '#' are skipped.
//
// Errors carry the 1-based line number: malformed lines, ids out of range,
// self-loops, duplicate edges, a wrong edge count. A disconnected graph is
// rejected unless allow_disconnected is set.
Graph read_edge_list(std::istream& in, bool allow_disconnected = false);
Graph parse_edge_list(const std::string& text, bool allow_disconnected = false);
Graph load_graph(const std::string& path, bool allow_disconnected = false);

// Writes the header and the edges with u < v in sorted order.
void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);
void save_graph(const std::string& path, const Graph& g);

}  // namespace visikit

#endif  // VISIKIT_EDGE_LIST_HPP_
