#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bipramsey/bipartite_graph.hpp"
#include "bipramsey/edge_coloring.hpp"

namespace bipramsey {

/// The double star S(n, m): stars K_{1,n} and K_{1,m} with their centers joined.
struct DoubleStarSpec {
  std::size_t n = 1;
  std::size_t m = 1;

  DoubleStarSpec() = default;
  /// Throws DomainError unless n, m >= 1.
  DoubleStarSpec(std::size_t n_leaves, std::size_t m_leaves);

  /// Same graph with n >= m.
  DoubleStarSpec normalized() const;

  friend bool operator==(const DoubleStarSpec&, const DoubleStarSpec&) = default;
};

/// Parses "n:m".
DoubleStarSpec parse_spec(const std::string& text);
/// Parses "n1:m1,n2:m2,...".
std::vector<DoubleStarSpec> parse_spec_list(const std::string& text);
std::string to_string(const DoubleStarSpec& spec);

/// An explicit embedding of a double star. leaves_y hang off center_x and
/// leaves_x hang off center_y; both lists are ascending.
struct Witness {
  std::optional<Color> color;
  Vertex center_x = 0;
  Vertex center_y = 0;
  std::vector<Vertex> leaves_y;
  std::vector<Vertex> leaves_x;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// True if every edge the witness cites is present in H, the leaf sets avoid
/// the centers and the leaf counts are {n, m} in some orientation.
bool validate_witness(const BipartiteGraph& h, const DoubleStarSpec& spec, const Witness& w);
/// As above, against the class of w.color (which must be set).
bool validate_witness(const EdgeColoring& coloring, const std::vector<DoubleStarSpec>& specs,
                      const Witness& w);

}  // namespace bipramsey
