#include "bipramsey/constructions.hpp"

#include <string>

#include "bipramsey/errors.hpp"
#include "bipramsey/turan.hpp"

namespace bipramsey {

EdgeColoring proper_coloring_latin(std::size_t n) {
  if (n == 0) throw DomainError("Latin coloring needs N >= 1");
  EdgeColoring col(n, n, static_cast<Color>(n));
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) col.set_color(x, y, static_cast<Color>((x + y) % n + 1));
  return col;
}

EdgeColoring matching_lower_construction(std::size_t k, std::size_t n) {
  if (k == 0 || n == 0) throw DomainError("matching construction needs k >= 1 and n >= 1");
  const std::size_t size = k * n;
  const auto latin = proper_coloring_latin(size);
  EdgeColoring col(size, size, static_cast<Color>(k));
  // Matching M_j (Latin color j, 1-based) goes to color (j - 1) / n + 1.
  for (Vertex x = 0; x < size; ++x)
    for (Vertex y = 0; y < size; ++y)
      col.set_color(x, y, static_cast<Color>((latin.color(x, y) - 1) / n + 1));
  return col;
}

EdgeColoring blow_up(const EdgeColoring& base, std::size_t t) {
  if (t == 0) throw DomainError("blow-up factor must be >= 1");
  EdgeColoring col(base.n1() * t, base.n2() * t, base.k());
  for (Vertex x = 0; x < col.n1(); ++x)
    for (Vertex y = 0; y < col.n2(); ++y) col.set_color(x, y, base.color(x / t, y / t));
  return col;
}

BipartiteGraph turan_extremal(std::size_t p, std::size_t n, std::size_t m) {
  require_turan_hypothesis(p, n, m);
  BipartiteGraph g(p, p);
  if (n * p >= 2 * m * (p - m)) {
    for (Vertex x = 0; x < p; ++x)
      for (std::size_t j = 0; j < n; ++j) g.add_edge(x, (x + j) % p);
    return g;
  }
  // X1 = Y1 = {0..m-1}; X1 sees Y \ Y1, Y1 sees X \ X1.
  for (Vertex a = 0; a < m; ++a) {
    for (Vertex b = m; b < p; ++b) {
      g.add_edge(a, b);
      g.add_edge(b, a);
    }
  }
  return g;
}

}  // namespace bipramsey
