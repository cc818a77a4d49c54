#pragma once

#include <cstddef>

#include "bipramsey/bipartite_graph.hpp"
#include "bipramsey/edge_coloring.hpp"

namespace bipramsey {

/// N-coloring of K_{N,N} with color(x, y) = ((x + y) mod N) + 1. Each class is
/// a perfect matching.
EdgeColoring proper_coloring_latin(std::size_t n);

/// k-coloring of K_{kn,kn}: color l+1 takes Latin matchings ln .. ln+n-1, so
/// every class is n-regular and free of every S(n, m).
EdgeColoring matching_lower_construction(std::size_t k, std::size_t n);

/// Replaces each vertex u by t clones u*t .. u*t+t-1; clone edges inherit the
/// color of the original edge.
EdgeColoring blow_up(const EdgeColoring& base, std::size_t t);

/// S(n,m)-free spanning subgraph of K_{p,p} with max{np, 2m(p-m)} edges.
/// Requires p >= 3n+1 and n >= m >= 1, otherwise throws DomainError.
BipartiteGraph turan_extremal(std::size_t p, std::size_t n, std::size_t m);

}  // namespace bipramsey
