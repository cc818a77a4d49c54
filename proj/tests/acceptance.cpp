// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bipramsey/bounds.hpp"
#include "bipramsey/constructions.hpp"
#include "bipramsey/detector.hpp"
#include "bipramsey/searcher.hpp"
#include "bipramsey/turan.hpp"
#include "cli.hpp"
#include "support/brute_force.hpp"
#include "support/generators.hpp"

using namespace bipramsey;

namespace {

const std::vector<DoubleStarSpec> kP4{DoubleStarSpec{1, 1}};

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << " [failed: " << what << "]";
    }
  }
};

// Critical colorings collected from criteria 1-3, reused by criterion 12.
std::vector<EdgeColoring> g_search_certificates;

bool certified_critical(const ArrowsResult& r, const std::vector<DoubleStarSpec>& specs) {
  return r.verdict == Verdict::NotArrows && r.certificate &&
         !find_monochromatic_double_star(*r.certificate, specs).has_value();
}

void keep_certificates(const RamseyResult& r) {
  for (const auto& run : r.runs)
    if (run.certificate) g_search_certificates.push_back(*run.certificate);
}

void criterion_1(Check& c) {
  std::istringstream in;
  std::ostringstream out, err;
  int status = cli::run({"search", "ramsey", "--k", "2", "--specs", "1:1", "--max-N", "4"}, in, out, err);
  c.expect(status == cli::kOk && out.str().rfind("value 3\n", 0) == 0, "CLI reports 3");

  auto r = ramsey_bip(2, kP4, 4);
  c.expect(r.value == 3U, "ramsey_bip = 3");
  c.expect(r.runs.size() == 3, "stopped at N=3");
  if (r.runs.size() == 3) {
    c.expect(certified_critical(r.runs[1], kP4), "N=2 certificate verified");
    c.expect(r.runs[2].verdict == Verdict::Arrows, "N=3 arrows");
  }
  auto brute = testing::brute_force_arrows(3, 2, kP4, testing::has_mono_star_by_oracle);
  c.expect(brute.total == 512 && brute.arrows, "all 2^9 colorings of K_{3,3} contain P4");
  keep_certificates(r);
}

void criterion_2(Check& c) {
  const std::vector<DoubleStarSpec> spec{DoubleStarSpec{2, 1}};
  auto r4 = arrows(4, 2, spec);
  c.expect(certified_critical(r4, spec), "N=4 critical certificate");
  c.expect(!find_monochromatic_double_star(matching_lower_construction(2, 2), spec),
           "matching construction critical");
  auto r5 = arrows(5, 2, spec);
  c.expect(r5.verdict == Verdict::Arrows, "N=5 arrows (got " + to_string(r5.verdict) + ")");
  auto ramsey = ramsey_bip(2, spec, 5);
  c.expect(ramsey.value == 5U, "ramsey_bip = 5");
  keep_certificates(ramsey);
}

void criterion_3(Check& c) {
  auto r3 = arrows(3, 3, kP4);
  c.expect(certified_critical(r3, kP4), "N=3 critical certificate");
  auto r4 = arrows(4, 3, kP4);
  c.expect(r4.verdict == Verdict::Arrows, "N=4 arrows (got " + to_string(r4.verdict) + ")");
  auto ramsey = ramsey_bip(3, kP4, 4);
  c.expect(ramsey.value == 4U, "ramsey_bip = 4");
  keep_certificates(ramsey);
}

void criterion_4(Check& c) {
  const std::vector<DoubleStarSpec> specs{DoubleStarSpec{2, 1}, DoubleStarSpec{1, 1}};
  c.expect(certified_critical(arrows(3, 2, specs), specs), "N=3 critical certificate");
  c.expect(arrows(4, 2, specs).verdict == Verdict::Arrows, "N=4 arrows");
  auto brute = testing::brute_force_arrows(4, 2, specs, testing::has_mono_star_by_degrees);
  c.expect(brute.total == 65536 && brute.arrows, "all 2^16 colorings contain a witness");
  c.expect(multicolor_bounds(specs).exact == 4U, "formula gives 4");
}

void criterion_5(Check& c) {
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t n = 1; n <= 4; ++n) {
      auto col = matching_lower_construction(k, n);
      for (Color color = 1; color <= k; ++color) {
        auto cls = color_class(col, color);
        for (Vertex v = 0; v < k * n; ++v)
          c.expect(cls.degree_x(v) == n && cls.degree_y(v) == n, "n-regular class");
      }
      for (std::size_t m = 1; m <= n; ++m)
        c.expect(!find_monochromatic_double_star(col, DoubleStarSpec{n, m}), "no monochromatic S(n,m)");
    }
}

void criterion_6(Check& c) {
  auto r = exhaustive_turan_max(4, 1, 1);
  c.expect(r.subgraphs == 65536, "65536 subgraphs enumerated");
  c.expect(r.max_edges == 6, "oracle maximum 6");
  c.expect(turan_bound(4, 1, 1) == 6, "bound 6");
}

void criterion_7(Check& c) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t m = 1; m <= n; ++m)
      for (std::size_t p = 3 * n + 1; p <= 3 * n + 4; ++p) {
        auto g = turan_extremal(p, n, m);
        auto report = verify_free_and_count(g, n, m);
        c.expect(report.free, "extremal graph free");
        c.expect(report.edges == report.bound, "extremal graph meets bound");
      }
}

void criterion_8(Check& c) {
  struct Case {
    std::size_t k, n, m;
  };
  std::mt19937_64 rng(20261019);
  for (const auto& t : {Case{2, 2, 1}, Case{3, 2, 1}, Case{3, 4, 2}}) {
    const std::size_t size = t.k * t.n + 1;
    int misses = 0;
    for (int i = 0; i < 1000; ++i) {
      auto col = testing::random_coloring(rng, size, size, static_cast<Color>(t.k));
      auto w = find_monochromatic_double_star(col, DoubleStarSpec{t.n, t.m});
      if (!w || !validate_witness(col, {DoubleStarSpec{t.n, t.m}}, *w)) ++misses;
    }
    c.expect(misses == 0, "random coloring without witness for k=" + std::to_string(t.k));
  }
}

void criterion_9(Check& c) {
  int disagreements = 0;
  for (const DoubleStarSpec spec : {DoubleStarSpec{1, 1}, DoubleStarSpec{2, 1}})
    for (std::uint64_t mask = 0; mask < 512; ++mask) {
      auto g = testing::graph_from_mask(3, 3, mask);
      disagreements += find_double_star(g, spec).has_value() != oracle_contains(g, spec);
    }
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    auto g = testing::random_graph(rng, 5, 5, 0.15 + 0.7 * (i % 8) / 7.0);
    for (std::size_t n = 1; n <= 2; ++n)
      for (std::size_t m = 1; m <= 2; ++m)
        disagreements += find_double_star(g, {n, m}).has_value() != oracle_contains(g, {n, m});
  }
  c.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
}

void criterion_10(Check& c) {
  std::mt19937_64 rng(10);
  const DoubleStarSpec spec{2, 1};
  int tested = 0, violations = 0;
  for (int attempt = 0; attempt < 50000 && tested < 200; ++attempt) {
    auto g = testing::planted_free_graph(rng, 7, spec, 0.1);
    auto part = degree_partition(g, 2);
    if (part.y1.size() < 2) continue;
    ++tested;
    auto h = rewire_reduce(g, 2, 1);
    const bool ok = h.edge_count() == g.edge_count() && !contains_double_star(h, spec) &&
                    h.degree_y(part.y1.front()) == 2 && high_degree_count(h, 2) < high_degree_count(g, 2);
    violations += !ok;
  }
  c.expect(tested >= 200, "generated " + std::to_string(tested) + " graphs");
  c.expect(violations == 0, std::to_string(violations) + " violations");
}

void criterion_11(Check& c) {
  auto b311 = bounds(3, 1, 1);
  c.expect(b311.lower == 4 && b311.upper == 5U, "bounds(3,1,1) = [4, 5]");
  c.expect(bounds(3, 3, 2).exact == 10U, "bounds(3,3,2) exact 10");
  for (std::size_t n = 1; n <= 20; ++n) c.expect(bounds(5, n, n).lower == 6 * n + 1, "bounds(5,n,n) lower 6n+1");
  c.expect(multicolor_bounds(std::vector<DoubleStarSpec>(3, DoubleStarSpec{2, 1})).exact == 7U,
           "multicolor exact 7");
  for (std::uint64_t k = 3; k <= 100; ++k)
    for (std::uint64_t n = 1; n <= 100; ++n) {
      const std::uint64_t u = sqrt_bound_floor(k, n), kn = k * n, t = k * (k - 2) * n * n;
      if (!(u >= kn && (u - kn) * (u - kn) <= t && t < (u + 1 - kn) * (u + 1 - kn))) {
        c.expect(false, "floor inequality at k=" + std::to_string(k) + ", n=" + std::to_string(n));
        return;
      }
    }
}

void criterion_12(Check& c) {
  int bases = 0, violations = 0;
  for (const auto& base : g_search_certificates) {
    if (find_monochromatic_double_star(base, kP4)) continue;  // not P4-critical
    ++bases;
    for (std::size_t t : {2, 3})
      violations += find_monochromatic_double_star(blow_up(base, t), DoubleStarSpec{t, t}).has_value();
  }
  c.expect(bases >= 2, "P4-critical bases available (" + std::to_string(bases) + ")");
  c.expect(violations == 0, std::to_string(violations) + " violations");
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "r_bip(S(1,1);2) = 3", 1.0, criterion_1},
      {2, "r_bip(S(2,1);2) = 5", 300.0, criterion_2},
      {3, "r_bip(P4;3) = 4", 300.0, criterion_3},
      {4, "r_bip(S(2,1),S(1,1)) = 4", 1.0, criterion_4},
      {5, "matching construction grid", 1.0, criterion_5},
      {6, "Turan oracle equality at p=4", 10.0, criterion_6},
      {7, "Turan tightness sweep", 1.0, criterion_7},
      {8, "random colorings of K_{kn+1,kn+1}", 30.0, criterion_8},
      {9, "detector / oracle equivalence", 0.0, criterion_9},
      {10, "rewiring exchange", 0.0, criterion_10},
      {11, "bound calculators", 0.0, criterion_11},
      {12, "blow-up of P4-critical bases", 0.0, criterion_12},
  };

  int failures = 0;
  for (const auto& crit : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (crit.limit_seconds > 0 && seconds > crit.limit_seconds)
      check.expect(false, "runtime over " + std::to_string(crit.limit_seconds) + " s");
    failures += !check.ok;
    std::cout << (check.ok ? "PASS" : "FAIL") << "  criterion " << crit.id << ": " << crit.title << " ("
              << seconds << " s)" << check.notes.str() << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
