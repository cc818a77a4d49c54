#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace bipramsey {

using Vertex = std::size_t;

/// Spanning subgraph of the complete bipartite graph K_{p,q}.
///
/// Sides X (size p) and Y (size q) are indexed independently from 0. The
/// incidence matrix is stored as one bit row per X vertex, 64 columns per
/// word, with degrees of both sides kept in sync on every edit.
class BipartiteGraph {
 public:
  /// Empty graph on p + q vertices. Throws DomainError if a side is empty.
  BipartiteGraph(std::size_t p, std::size_t q);

  static BipartiteGraph complete(std::size_t p, std::size_t q);

  std::size_t p() const noexcept { return p_; }
  std::size_t q() const noexcept { return q_; }
  bool square() const noexcept { return p_ == q_; }

  bool has_edge(Vertex x, Vertex y) const;
  void add_edge(Vertex x, Vertex y);
  void remove_edge(Vertex x, Vertex y);

  std::size_t edge_count() const noexcept { return edges_; }
  std::size_t degree_x(Vertex x) const { return deg_x_.at(x); }
  std::size_t degree_y(Vertex y) const { return deg_y_.at(y); }
  std::span<const std::size_t> degrees_x() const noexcept { return deg_x_; }
  std::span<const std::size_t> degrees_y() const noexcept { return deg_y_; }

  /// Neighbours of x in Y, ascending.
  std::vector<Vertex> neighbors_x(Vertex x) const;
  /// Neighbours of y in X, ascending.
  std::vector<Vertex> neighbors_y(Vertex y) const;

  /// Raw bit row of x; word w holds columns [64w, 64w + 64).
  std::span<const std::uint64_t> row(Vertex x) const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  void check(Vertex x, Vertex y) const;

  std::size_t p_;
  std::size_t q_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::size_t> deg_x_;
  std::vector<std::size_t> deg_y_;
  std::size_t edges_ = 0;
};

}  // namespace bipramsey
