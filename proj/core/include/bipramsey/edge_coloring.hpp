#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bipramsey/bipartite_graph.hpp"

namespace bipramsey {

using Color = std::uint32_t;

/// Total k-edge-coloring of K_{N1,N2}; colors are 1..k.
class EdgeColoring {
 public:
  /// Every edge starts in color `fill`.
  EdgeColoring(std::size_t n1, std::size_t n2, Color k, Color fill = 1);

  std::size_t n1() const noexcept { return n1_; }
  std::size_t n2() const noexcept { return n2_; }
  Color k() const noexcept { return k_; }

  Color color(Vertex x, Vertex y) const;
  void set_color(Vertex x, Vertex y, Color c);

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  void check_vertex(Vertex x, Vertex y) const;
  void check_color(Color c) const;

  std::size_t n1_;
  std::size_t n2_;
  Color k_;
  std::vector<std::uint16_t> colors_;
};

/// Spanning subgraph of K_{N1,N2} formed by the edges of color c.
BipartiteGraph color_class(const EdgeColoring& coloring, Color c);

}  // namespace bipramsey
