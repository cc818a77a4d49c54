#include "bipramsey/edge_coloring.hpp"

#include <string>

#include "bipramsey/errors.hpp"

namespace bipramsey {

EdgeColoring::EdgeColoring(std::size_t n1, std::size_t n2, Color k, Color fill)
    : n1_(n1), n2_(n2), k_(k) {
  if (n1 == 0 || n2 == 0) throw DomainError("coloring sides must be non-empty");
  if (k == 0) throw DomainError("coloring needs at least one color");
  if (k > 0xFFFF) throw DomainError("too many colors");
  check_color(fill);
  colors_.assign(n1 * n2, static_cast<std::uint16_t>(fill));
}

void EdgeColoring::check_vertex(Vertex x, Vertex y) const {
  if (x >= n1_ || y >= n2_)
    throw RangeError("edge (" + std::to_string(x) + ", " + std::to_string(y) + ") outside K_{" +
                     std::to_string(n1_) + "," + std::to_string(n2_) + "}");
}

void EdgeColoring::check_color(Color c) const {
  if (c < 1 || c > k_)
    throw RangeError("color " + std::to_string(c) + " outside 1.." + std::to_string(k_));
}

Color EdgeColoring::color(Vertex x, Vertex y) const {
  check_vertex(x, y);
  return colors_[x * n2_ + y];
}

void EdgeColoring::set_color(Vertex x, Vertex y, Color c) {
  check_vertex(x, y);
  check_color(c);
  colors_[x * n2_ + y] = static_cast<std::uint16_t>(c);
}

BipartiteGraph color_class(const EdgeColoring& coloring, Color c) {
  if (c < 1 || c > coloring.k())
    throw RangeError("color " + std::to_string(c) + " outside 1.." + std::to_string(coloring.k()));
  BipartiteGraph g(coloring.n1(), coloring.n2());
  for (Vertex x = 0; x < coloring.n1(); ++x)
    for (Vertex y = 0; y < coloring.n2(); ++y)
      if (coloring.color(x, y) == c) g.add_edge(x, y);
  return g;
}

}  // namespace bipramsey
