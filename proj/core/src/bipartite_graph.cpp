#include "bipramsey/bipartite_graph.hpp"

#include <bit>
#include <string>

#include "bipramsey/errors.hpp"

namespace bipramsey {

BipartiteGraph::BipartiteGraph(std::size_t p, std::size_t q)
    : p_(p), q_(q), words_((q + 63) / 64), bits_(p * ((q + 63) / 64), 0), deg_x_(p, 0), deg_y_(q, 0) {
  if (p == 0 || q == 0) throw DomainError("bipartite graph sides must be non-empty");
}

BipartiteGraph BipartiteGraph::complete(std::size_t p, std::size_t q) {
  BipartiteGraph g(p, q);
  for (Vertex x = 0; x < p; ++x)
    for (Vertex y = 0; y < q; ++y) g.add_edge(x, y);
  return g;
}

void BipartiteGraph::check(Vertex x, Vertex y) const {
  if (x >= p_ || y >= q_)
    throw RangeError("edge (" + std::to_string(x) + ", " + std::to_string(y) + ") outside K_{" +
                     std::to_string(p_) + "," + std::to_string(q_) + "}");
}

bool BipartiteGraph::has_edge(Vertex x, Vertex y) const {
  check(x, y);
  return (bits_[x * words_ + y / 64] >> (y % 64)) & 1U;
}

void BipartiteGraph::add_edge(Vertex x, Vertex y) {
  if (has_edge(x, y)) return;
  bits_[x * words_ + y / 64] |= std::uint64_t{1} << (y % 64);
  ++deg_x_[x];
  ++deg_y_[y];
  ++edges_;
}

void BipartiteGraph::remove_edge(Vertex x, Vertex y) {
  if (!has_edge(x, y)) return;
  bits_[x * words_ + y / 64] &= ~(std::uint64_t{1} << (y % 64));
  --deg_x_[x];
  --deg_y_[y];
  --edges_;
}

std::vector<Vertex> BipartiteGraph::neighbors_x(Vertex x) const {
  std::vector<Vertex> out;
  out.reserve(degree_x(x));
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = bits_[x * words_ + w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<Vertex>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::vector<Vertex> BipartiteGraph::neighbors_y(Vertex y) const {
  std::vector<Vertex> out;
  out.reserve(degree_y(y));
  for (Vertex x = 0; x < p_; ++x)
    if (has_edge(x, y)) out.push_back(x);
  return out;
}

std::span<const std::uint64_t> BipartiteGraph::row(Vertex x) const {
  if (x >= p_) throw RangeError("row index out of range");
  return {bits_.data() + x * words_, words_};
}

}  // namespace bipramsey
