#pragma once

#include <string>
#include <string_view>

#include "pathalg/leavitt.hpp"
#include "pathalg/pathspace.hpp"

namespace pathalg::cli {

/// Graph files: one directive per line, `#` starts a comment.
///
///   vertex <name>
///   edge <name> <source> <range>
///   singular <vertex>
///
/// Vertices must be declared before an edge uses them. Throws `ParseError`.
Graph parse_graph(std::string_view text);

/// Inverse of `parse_graph` up to comments and blank lines.
std::string render_graph(const Graph& g);

/// `int`, `rat` or `mod:<n>`.
Ring parse_ring(std::string_view text);

/// `2 e f* - v`, `1/2 (e + f)*`. A bare coefficient stands for that multiple
/// of the unit (the sum of all vertices).
LeavittElement parse_leavitt(GraphPtr graph, Ring ring, std::string_view text);

/// `2*Z(e,e|e\{f}) - Z(v|v)`. The result is not normalized.
SteinbergElement parse_steinberg(GraphPtr graph, Ring ring, std::string_view text);

/// Comma-separated edges, or a single vertex name.
Path parse_path(const Graph& g, std::string_view text);

/// `e1,e2;(f1,f2)`, `;(e,f)`, `e1,e2` or a vertex name.
BoundaryPath parse_boundary_path(const Graph& g, std::string_view text);

}  // namespace pathalg::cli
