#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "bipramsey/bipartite_graph.hpp"
#include "bipramsey/edge_coloring.hpp"

namespace bipramsey {

// bsr v1 text codec.
//
//   bsr 1
//   n <p> <q>
//   k <K>            K = 0: graph, K >= 1: coloring
//   e <x> <y>        graph edge
//   e <x> <y> <c>    coloring edge, all p*q must appear
//
// Lines starting with '#' and blank lines are ignored on input.

using BsrObject = std::variant<BipartiteGraph, EdgeColoring>;

/// Throws ParseError naming the offending line.
BsrObject parse_bsr(std::string_view text);
BsrObject read_bsr(std::istream& in);

BipartiteGraph parse_bsr_graph(std::string_view text);
EdgeColoring parse_bsr_coloring(std::string_view text);

/// Canonical form: edges in lexicographic (x, y) order.
std::string emit_bsr(const BipartiteGraph& graph);
std::string emit_bsr(const EdgeColoring& coloring);
std::string emit_bsr(const BsrObject& object);

}  // namespace bipramsey
