#pragma once

// Text formats.
//
// Graph file: one edge per line "u v label"; vertex names are arbitrary tokens.
// A bigraph file additionally lists "L u" / "R v" side declarations before its
// edges. Blank lines and lines starting with '#' are ignored. An optional
// "V u" line declares an (isolated) vertex.
//
// Path shorthand: "P:<labels>" for a path whose i-th edge carries the i-th
// label, "P:+<labels>" / "P:-<labels>" for the bipartition that starts at a
// right / left vertex. Labels are single digits, or comma separated when the
// path has ten or more edges ("P:1,2,10,...").

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eog/graph.hpp"

namespace eog {

using AnyGraph = std::variant<Graph, Bigraph>;

/// Path with the given labels along it (labels must be distinct).
Graph make_path(const std::vector<long long>& labels);
Bigraph make_signed_path(const std::vector<long long>& labels, bool starts_right);

AnyGraph parse_path_spec(std::string_view spec);
Graph parse_path(std::string_view spec);      // throws on signed specs
Bigraph parse_bipath(std::string_view spec);  // throws on unsigned specs

AnyGraph parse_graph_text(std::string_view text);
AnyGraph read_graph_file(const std::string& path);

/// A "P:" spec or the path of a graph file.
AnyGraph load_graph(const std::string& spec_or_path);

/// Serialization with labels normalized to ranks 1..m, edges in rank order.
std::string to_text(const Graph& g);
std::string to_text(const Bigraph& b);
std::string to_text(const AnyGraph& g);

/// "P:<ranks>" for a path graph read from its lower-index endpoint.
std::string path_spec(const Graph& g);

const Graph& underlying(const AnyGraph& g);

}  // namespace eog
