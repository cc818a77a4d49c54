#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bipramsey/bipartite_graph.hpp"

namespace bipramsey {

/// max{n*p, 2m(p-m)}, the largest edge count of an S(n,m)-free spanning
/// subgraph of K_{p,p}. Defined for p >= 3n+1 and n >= m >= 1 only; anything
/// else throws DomainError.
std::size_t turan_bound(std::size_t p, std::size_t n, std::size_t m);

/// Throws DomainError if (p, n, m) lies outside the bound's hypothesis.
void require_turan_hypothesis(std::size_t p, std::size_t n, std::size_t m);

/// Split of each side of H by degree relative to the threshold n:
///   X1, Y1  vertices of degree >= n+1
///   X2 = N(Y1), Y2 = N(X1)
///   X3, Y3  the rest
/// All sets ascending.
struct DegreePartition {
  std::vector<Vertex> x1, x2, x3;
  std::vector<Vertex> y1, y2, y3;

  friend bool operator==(const DegreePartition&, const DegreePartition&) = default;
};

/// Throws DomainError if H is not square, or "input not S(n,m)-free" if X1
/// meets X2 (an X1-Y1 edge is itself a double star center edge).
DegreePartition degree_partition(const BipartiteGraph& h, std::size_t n);

/// Checks the certificate properties that hold whenever H is S(n,m)-free:
/// disjoint covers, X1 anti-complete to Y1, degree <= m on X2 and Y2, degree
/// <= n on X3 and Y3. Returns one message per violated property.
std::vector<std::string> partition_violations(const BipartiteGraph& h, const DegreePartition& part,
                                              std::size_t n, std::size_t m);

/// One exchange step: take the least y in Y1, drop its edges to its
/// d(y) - n least neighbours x_i, and reconnect each x_i to the least
/// y_i in Y1 \ {y} it is not yet adjacent to. Edge count and freeness are
/// preserved; d(y) becomes n.
///
/// Throws DomainError("exchange hypothesis not met") when |Y1| <= m, and
/// DomainError when H contains S(n,m).
BipartiteGraph rewire_reduce(const BipartiteGraph& h, std::size_t n, std::size_t m);

/// Number of vertices (both sides) with degree >= n+1.
std::size_t high_degree_count(const BipartiteGraph& h, std::size_t n);

struct TuranOracleResult {
  std::size_t max_edges = 0;
  BipartiteGraph extremal{1, 1};
  std::uint64_t subgraphs = 0;
};

struct TuranOracleOptions {
  bool allow_long = false;  // permits p = 5 (2^25 subgraphs)
  unsigned threads = 1;
};

/// Exact maximum edge count over all S(n,m)-free spanning subgraphs of K_{p,p}
/// by full enumeration. p <= 4, or p = 5 with allow_long; otherwise SizeError.
TuranOracleResult exhaustive_turan_max(std::size_t p, std::size_t n, std::size_t m,
                                       TuranOracleOptions options = {});

struct TuranReport {
  bool free = false;
  std::size_t edges = 0;
  std::size_t bound = 0;
  bool meets_bound = false;

  /// Free graph above the bound.
  bool violation() const noexcept { return free && !meets_bound; }
};

/// Detector verdict and edge count against turan_bound. Throws DomainError
/// outside the hypothesis or for a non-square H.
TuranReport verify_free_and_count(const BipartiteGraph& h, std::size_t n, std::size_t m);

}  // namespace bipramsey
