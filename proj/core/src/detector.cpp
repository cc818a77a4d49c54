#include "bipramsey/detector.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "bipramsey/errors.hpp"

namespace bipramsey {

namespace {

std::vector<Vertex> first_except(const std::vector<Vertex>& nbrs, Vertex skip, std::size_t count) {
  std::vector<Vertex> out;
  out.reserve(count);
  for (Vertex v : nbrs) {
    if (out.size() == count) break;
    if (v != skip) out.push_back(v);
  }
  return out;
}

}  // namespace

std::optional<Witness> find_double_star(const BipartiteGraph& h, const DoubleStarSpec& spec) {
  const std::size_t n = spec.n, m = spec.m;
  const std::size_t lo = std::min(n, m);
  for (Vertex x = 0; x < h.p(); ++x) {
    const std::size_t dx = h.degree_x(x);
    if (dx < lo + 1) continue;
    for (Vertex y : h.neighbors_x(x)) {
      const std::size_t dy = h.degree_y(y);
      std::size_t at_x = 0, at_y = 0;
      if (dx >= n + 1 && dy >= m + 1) {
        at_x = n, at_y = m;
      } else if (dx >= m + 1 && dy >= n + 1) {
        at_x = m, at_y = n;
      } else {
        continue;
      }
      Witness w;
      w.center_x = x;
      w.center_y = y;
      w.leaves_y = first_except(h.neighbors_x(x), y, at_x);
      w.leaves_x = first_except(h.neighbors_y(y), x, at_y);
      return w;
    }
  }
  return std::nullopt;
}

bool contains_double_star(const BipartiteGraph& h, const DoubleStarSpec& spec) {
  const std::size_t n = spec.n, m = spec.m;
  for (Vertex x = 0; x < h.p(); ++x) {
    const std::size_t dx = h.degree_x(x);
    if (dx < std::min(n, m) + 1) continue;
    for (Vertex y : h.neighbors_x(x)) {
      const std::size_t dy = h.degree_y(y);
      if ((dx >= n + 1 && dy >= m + 1) || (dx >= m + 1 && dy >= n + 1)) return true;
    }
  }
  return false;
}

std::vector<DoubleStarSpec> expand_specs(const std::vector<DoubleStarSpec>& specs, std::size_t k) {
  if (specs.size() == k) return specs;
  if (specs.size() == 1) return std::vector<DoubleStarSpec>(k, specs.front());
  throw ArityError("expected 1 or " + std::to_string(k) + " double star specs, got " +
                   std::to_string(specs.size()));
}

std::optional<Witness> find_monochromatic_double_star(const EdgeColoring& coloring,
                                                      const std::vector<DoubleStarSpec>& specs) {
  auto per_color = expand_specs(specs, coloring.k());
  for (Color c = 1; c <= coloring.k(); ++c) {
    if (auto w = find_double_star(color_class(coloring, c), per_color[c - 1])) {
      w->color = c;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<Witness> find_monochromatic_double_star(const EdgeColoring& coloring,
                                                      const DoubleStarSpec& spec) {
  return find_monochromatic_double_star(coloring, std::vector<DoubleStarSpec>{spec});
}

namespace {

// Any subset of `side` vertices of the given size, avoiding `skip`, all joined
// to `center` according to `adjacent`.
template <typename Adjacent>
bool some_leaf_set(std::size_t side, Vertex skip, std::size_t size, Adjacent adjacent) {
  if (side > 20) return false;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << side); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
    if ((mask >> skip) & 1U) continue;
    bool ok = true;
    for (Vertex v = 0; v < side && ok; ++v)
      if ((mask >> v) & 1U) ok = adjacent(v);
    if (ok) return true;
  }
  return false;
}

}  // namespace

bool oracle_contains(const BipartiteGraph& h, const DoubleStarSpec& spec) {
  // The K_{1,n} center may sit on either side.
  const std::pair<std::size_t, std::size_t> orientations[] = {{spec.n, spec.m}, {spec.m, spec.n}};
  for (Vertex x = 0; x < h.p(); ++x) {
    for (Vertex y = 0; y < h.q(); ++y) {
      if (!h.has_edge(x, y)) continue;
      for (auto [at_x, at_y] : orientations) {
        bool ys = some_leaf_set(h.q(), y, at_x, [&](Vertex v) { return h.has_edge(x, v); });
        bool xs = some_leaf_set(h.p(), x, at_y, [&](Vertex v) { return h.has_edge(v, y); });
        if (ys && xs) return true;
      }
    }
  }
  return false;
}

}  // namespace bipramsey
