// Plain enumeration of every coloring for the two largest searched instances,
// cross-checking the pruned search's Arrows verdicts, plus the p = 5 Turan
// oracle and the four-color P4 search. Slow (about a minute).

#include <chrono>
#include <iostream>

#include "bipramsey/searcher.hpp"
#include "bipramsey/turan.hpp"
#include "support/brute_force.hpp"

using namespace bipramsey;

namespace {

bool confirm(std::size_t n, std::size_t k, const std::vector<DoubleStarSpec>& specs, const char* label) {
  const auto start = std::chrono::steady_clock::now();
  auto brute = testing::brute_force_arrows(n, k, specs, testing::has_mono_star_by_degrees, true);
  auto searched = arrows(n, k, specs);
  const bool ok = brute.arrows && searched.verdict == Verdict::Arrows;
  std::cout << (ok ? "PASS  " : "FAIL  ") << label << ": " << brute.total << " colorings enumerated, search "
            << to_string(searched.verdict) << " ("
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s)\n";
  return ok;
}

}  // namespace

int main() {
  bool ok = confirm(5, 2, {DoubleStarSpec{2, 1}}, "K_{5,5} -> (S(2,1); 2)");
  ok = confirm(4, 3, {DoubleStarSpec{1, 1}}, "K_{4,4} -> (P4; 3)") && ok;

  const auto start = std::chrono::steady_clock::now();
  auto turan = exhaustive_turan_max(5, 1, 1, {.allow_long = true, .threads = 2});
  const bool tight = turan.max_edges == turan_bound(5, 1, 1);
  std::cout << (tight ? "PASS  " : "FAIL  ") << "Turan maximum on K_{5,5} for P4: " << turan.max_edges
            << " vs bound " << turan_bound(5, 1, 1) << " ("
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s)\n";

  // Four colors: K_{5,5} has a P4-free coloring, K_{6,6} does not.
  const auto p4_start = std::chrono::steady_clock::now();
  auto five = arrows(5, 4, {DoubleStarSpec{1, 1}});
  auto six = arrows(6, 4, {DoubleStarSpec{1, 1}});
  const bool four = five.verdict == Verdict::NotArrows && six.verdict == Verdict::Arrows;
  std::cout << (four ? "PASS  " : "FAIL  ") << "r_bip(P4; 4) = 6: N=5 " << to_string(five.verdict) << ", N=6 "
            << to_string(six.verdict) << " after " << six.stats.nodes << " nodes ("
            << std::chrono::duration<double>(std::chrono::steady_clock::now() - p4_start).count() << " s)\n";
  return ok && tight && four ? 0 : 1;
}
