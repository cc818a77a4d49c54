#include "bipramsey/turan.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>

#include "bipramsey/detector.hpp"
#include "bipramsey/errors.hpp"

namespace bipramsey {

void require_turan_hypothesis(std::size_t p, std::size_t n, std::size_t m) {
  if (m < 1 || n < m || p < 3 * n + 1)
    throw DomainError("Turan bound hypothesis p >= 3n+1, n >= m >= 1 not met (p=" + std::to_string(p) +
                      ", n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
}

std::size_t turan_bound(std::size_t p, std::size_t n, std::size_t m) {
  require_turan_hypothesis(p, n, m);
  return std::max(n * p, 2 * m * (p - m));
}

DegreePartition degree_partition(const BipartiteGraph& h, std::size_t n) {
  if (!h.square()) throw DomainError("degree partition needs a square host K_{p,p}");
  const std::size_t p = h.p();
  DegreePartition part;
  std::vector<char> in_x1(p, 0), in_y1(p, 0), in_x2(p, 0), in_y2(p, 0);
  for (Vertex v = 0; v < p; ++v) {
    if (h.degree_x(v) >= n + 1) in_x1[v] = 1;
    if (h.degree_y(v) >= n + 1) in_y1[v] = 1;
  }
  for (Vertex x = 0; x < p; ++x) {
    if (!in_x1[x]) continue;
    for (Vertex y : h.neighbors_x(x)) in_y2[y] = 1;
  }
  for (Vertex y = 0; y < p; ++y) {
    if (!in_y1[y]) continue;
    for (Vertex x : h.neighbors_y(y)) in_x2[x] = 1;
  }
  for (Vertex v = 0; v < p; ++v) {
    if ((in_x1[v] && in_x2[v]) || (in_y1[v] && in_y2[v])) throw DomainError("input not S(n,m)-free");
    (in_x1[v] ? part.x1 : in_x2[v] ? part.x2 : part.x3).push_back(v);
    (in_y1[v] ? part.y1 : in_y2[v] ? part.y2 : part.y3).push_back(v);
  }
  return part;
}

std::vector<std::string> partition_violations(const BipartiteGraph& h, const DegreePartition& part,
                                              std::size_t n, std::size_t m) {
  std::vector<std::string> out;
  auto covers = [&](const std::vector<Vertex>& a, const std::vector<Vertex>& b,
                    const std::vector<Vertex>& c, const char* side) {
    std::vector<int> hits(h.p(), 0);
    for (const auto* s : {&a, &b, &c})
      for (Vertex v : *s) {
        if (v >= h.p()) {
          out.push_back(std::string(side) + " set holds out-of-range vertex");
          return;
        }
        ++hits[v];
      }
    if (std::any_of(hits.begin(), hits.end(), [](int k) { return k != 1; }))
      out.push_back(std::string(side) + "1, " + side + "2, " + side + "3 do not partition " + side);
  };
  covers(part.x1, part.x2, part.x3, "X");
  covers(part.y1, part.y2, part.y3, "Y");
  if (!out.empty()) return out;

  for (Vertex x : part.x1)
    for (Vertex y : part.y1)
      if (h.has_edge(x, y)) out.push_back("X1 not anti-complete to Y1");
  for (Vertex v : part.x2)
    if (h.degree_x(v) > m) out.push_back("X2 vertex " + std::to_string(v) + " has degree > m");
  for (Vertex v : part.y2)
    if (h.degree_y(v) > m) out.push_back("Y2 vertex " + std::to_string(v) + " has degree > m");
  for (Vertex v : part.x3)
    if (h.degree_x(v) > n) out.push_back("X3 vertex " + std::to_string(v) + " has degree > n");
  for (Vertex v : part.y3)
    if (h.degree_y(v) > n) out.push_back("Y3 vertex " + std::to_string(v) + " has degree > n");
  return out;
}

std::size_t high_degree_count(const BipartiteGraph& h, std::size_t n) {
  auto high = [n](std::size_t d) { return d >= n + 1; };
  return static_cast<std::size_t>(std::count_if(h.degrees_x().begin(), h.degrees_x().end(), high) +
                                  std::count_if(h.degrees_y().begin(), h.degrees_y().end(), high));
}

BipartiteGraph rewire_reduce(const BipartiteGraph& h, std::size_t n, std::size_t m) {
  if (contains_double_star(h, DoubleStarSpec{n, m})) throw DomainError("input not S(n,m)-free");
  std::vector<Vertex> y1;
  for (Vertex y = 0; y < h.q(); ++y)
    if (h.degree_y(y) >= n + 1) y1.push_back(y);
  if (y1.size() <= m) throw DomainError("exchange hypothesis not met (|Y1| <= m)");

  const Vertex y = y1.front();
  const std::size_t excess = h.degree_y(y) - n;
  auto nbrs = h.neighbors_y(y);
  nbrs.resize(excess);

  BipartiteGraph out = h;
  for (Vertex x : nbrs) out.remove_edge(x, y);
  for (Vertex x : nbrs) {
    auto target = std::find_if(y1.begin() + 1, y1.end(), [&](Vertex t) { return !h.has_edge(x, t); });
    if (target == y1.end()) throw DomainError("input not S(n,m)-free");
    out.add_edge(x, *target);
  }
  return out;
}

TuranOracleResult exhaustive_turan_max(std::size_t p, std::size_t n, std::size_t m,
                                       TuranOracleOptions options) {
  if (p == 0) throw DomainError("p must be >= 1");
  if (p > 5 || (p == 5 && !options.allow_long))
    throw SizeError("exhaustive Turan oracle refuses p=" + std::to_string(p) +
                    " (limit 4, or 5 with the long-running flag)");
  const DoubleStarSpec spec{n, m};
  const std::size_t bits = p * p;
  const std::uint64_t total = std::uint64_t{1} << bits;

  auto build = [&](std::uint64_t mask) {
    BipartiteGraph g(p, p);
    for (std::size_t b = 0; b < bits; ++b)
      if ((mask >> b) & 1U) g.add_edge(b / p, b % p);
    return g;
  };

  constexpr std::uint64_t kNone = ~std::uint64_t{0};
  struct Best {
    std::size_t edges = 0;
    std::uint64_t mask = kNone;
  };
  const unsigned workers = std::max(1U, options.threads);
  std::vector<Best> best(workers);
  auto scan = [&](unsigned w) {
    const std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
    Best b;
    bool have = false;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      const auto edges = static_cast<std::size_t>(std::popcount(mask));
      if (have && edges <= b.edges) continue;
      if (contains_double_star(build(mask), spec)) continue;
      b = {edges, mask};
      have = true;
    }
    best[w] = have ? b : Best{};
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }

  // Ties go to the lower range, so the extremal example is the least mask.
  Best overall;
  for (const Best& b : best)
    if (b.mask != kNone && (overall.mask == kNone || b.edges > overall.edges)) overall = b;
  return {overall.edges, build(overall.mask), total};
}

TuranReport verify_free_and_count(const BipartiteGraph& h, std::size_t n, std::size_t m) {
  if (!h.square()) throw DomainError("Turan check needs a square host K_{p,p}");
  TuranReport r;
  r.bound = turan_bound(h.p(), n, m);
  r.free = !contains_double_star(h, DoubleStarSpec{n, m});
  r.edges = h.edge_count();
  r.meets_bound = r.edges <= r.bound;
  return r;
}

}  // namespace bipramsey
