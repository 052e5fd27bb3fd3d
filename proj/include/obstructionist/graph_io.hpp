#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "obstructionist/graph.hpp"

namespace obstructionist::io {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// sparse6 line (leading ':' included, no newline). Loops and parallel
/// edges are encoded; the byte stream matches nauty's writer.
std::string to_sparse6(const MultiGraph& g);
/// Accepts an optional ">>sparse6<<" header and trailing whitespace.
MultiGraph from_sparse6(std::string_view text);

/// One "LABEL1 LABEL2" pair per line; '#' starts a comment; a line with a
/// single token declares an isolated vertex. Vertex ids follow first
/// appearance.
MultiGraph parse_edge_list(std::string_view text);
std::string to_edge_list(const MultiGraph& g);

/// Undirected DOT. When `faces` is non-empty each edge is annotated with the
/// indices of the faces on its two sides.
std::string to_dot(const MultiGraph& g, const std::vector<std::vector<DartId>>& faces = {},
                   std::string_view name = "G");

/// Reads a graph file, sniffing sparse6 (leading ':' or header) versus edge list.
MultiGraph read_graph_file(const std::string& path);
std::vector<MultiGraph> read_sparse6_stream(std::istream& in);

}  // namespace obstructionist::io
