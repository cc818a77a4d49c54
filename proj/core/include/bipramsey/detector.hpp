#pragma once

#include <optional>
#include <vector>

#include "bipramsey/bipartite_graph.hpp"
#include "bipramsey/double_star.hpp"
#include "bipramsey/edge_coloring.hpp"

namespace bipramsey {

// H contains S(n,m) iff some edge xy has d(x) >= n+1 and d(y) >= m+1, or
// the same with n and m swapped. The two leaf sets sit on opposite sides, so
// they can never collide.

/// Least witness by (center_x, center_y, orientation, leaves). Orientation
/// "n leaves at center_x" is tried first.
std::optional<Witness> find_double_star(const BipartiteGraph& h, const DoubleStarSpec& spec);

bool contains_double_star(const BipartiteGraph& h, const DoubleStarSpec& spec);

/// Scans colors 1..k in order and returns the first color's least witness.
/// `specs` holds one spec per color, or a single spec applied to all of them.
/// Throws ArityError for any other length.
std::optional<Witness> find_monochromatic_double_star(const EdgeColoring& coloring,
                                                      const std::vector<DoubleStarSpec>& specs);

std::optional<Witness> find_monochromatic_double_star(const EdgeColoring& coloring,
                                                      const DoubleStarSpec& spec);

/// Expands a broadcast spec list to length k. Throws ArityError.
std::vector<DoubleStarSpec> expand_specs(const std::vector<DoubleStarSpec>& specs, std::size_t k);

/// Brute-force embedding search: every ordered center pair and every choice of
/// leaf subsets, without the degree shortcut. Meant for p, q <= 8.
bool oracle_contains(const BipartiteGraph& h, const DoubleStarSpec& spec);

}  // namespace bipramsey
