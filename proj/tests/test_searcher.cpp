#include <doctest.h>

#include "bipramsey/constructions.hpp"
#include "bipramsey/detector.hpp"
#include "bipramsey/errors.hpp"
#include "bipramsey/searcher.hpp"
#include "support/brute_force.hpp"

using namespace bipramsey;

namespace {

const std::vector<DoubleStarSpec> kP4{DoubleStarSpec{1, 1}};

void check_certificate(const ArrowsResult& r, const std::vector<DoubleStarSpec>& specs) {
  REQUIRE(r.verdict == Verdict::NotArrows);
  REQUIRE(r.certificate);
  CHECK_FALSE(find_monochromatic_double_star(*r.certificate, specs));
}

}  // namespace

TEST_CASE("arrows examples") {
  auto r3 = arrows(3, 2, kP4);
  CHECK(r3.verdict == Verdict::Arrows);
  CHECK_FALSE(r3.certificate);

  auto r2 = arrows(2, 2, kP4);
  check_certificate(r2, kP4);
  // Each class of a critical 2-coloring of K_{2,2} has two edges.
  CHECK(color_class(*r2.certificate, 1).edge_count() == 2);

  CHECK(arrows(4, 2, {DoubleStarSpec{2, 1}, DoubleStarSpec{1, 1}}).verdict == Verdict::Arrows);
}

TEST_CASE("asymmetric critical certificate on K_{3,3}") {
  const std::vector<DoubleStarSpec> specs{DoubleStarSpec{2, 1}, DoubleStarSpec{1, 1}};
  auto r = arrows(3, 2, specs);
  check_certificate(r, specs);
  CHECK_FALSE(find_monochromatic_double_star(*r.certificate, specs));
}

TEST_CASE("first edge takes color 1 when all specs agree") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto r = arrows(n, 3, kP4);
    REQUIRE(r.certificate);
    CHECK(r.certificate->color(0, 0) == 1);
  }
}

TEST_CASE("pruned search agrees with plain enumeration") {
  SearchOptions plain;
  plain.plain = true;
  for (std::size_t k = 1; k <= 2; ++k)
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& specs : std::vector<std::vector<DoubleStarSpec>>{
               {DoubleStarSpec{1, 1}}, {DoubleStarSpec{2, 1}}, {DoubleStarSpec{2, 2}}}) {
        auto fast = arrows(n, k, specs);
        auto slow = arrows(n, k, specs, plain);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(fast.verdict == slow.verdict);
        if (slow.certificate) CHECK_FALSE(find_monochromatic_double_star(*slow.certificate, specs));
      }
}

TEST_CASE("search verdicts match brute-force enumeration") {
  struct Case {
    std::size_t n, k;
    std::vector<DoubleStarSpec> specs;
  };
  const std::vector<Case> cases = {
      {2, 2, {DoubleStarSpec{1, 1}}},
      {3, 2, {DoubleStarSpec{1, 1}}},
      {3, 3, {DoubleStarSpec{1, 1}}},
      {3, 2, {DoubleStarSpec{2, 1}, DoubleStarSpec{1, 1}}},
      {3, 2, {DoubleStarSpec{1, 1}, DoubleStarSpec{2, 1}}},
      {4, 2, {DoubleStarSpec{2, 1}, DoubleStarSpec{1, 1}}},
      {4, 2, {DoubleStarSpec{2, 1}}},
      {4, 2, {DoubleStarSpec{2, 2}}},
      {3, 3, {DoubleStarSpec{2, 1}, DoubleStarSpec{1, 1}, DoubleStarSpec{1, 1}}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.n);
    CAPTURE(c.k);
    auto brute = testing::brute_force_arrows(c.n, c.k, c.specs, testing::has_mono_star_by_degrees);
    CHECK(arrows(c.n, c.k, c.specs).verdict == (brute.arrows ? Verdict::Arrows : Verdict::NotArrows));
  }
}

TEST_CASE("degree scan and embedding oracle agree on small brute force") {
  const std::vector<DoubleStarSpec> specs{DoubleStarSpec{2, 1}, DoubleStarSpec{1, 1}};
  auto by_degrees = testing::brute_force_arrows(3, 2, specs, testing::has_mono_star_by_degrees);
  auto by_oracle = testing::brute_force_arrows(3, 2, specs, testing::has_mono_star_by_oracle);
  CHECK(by_degrees.critical == by_oracle.critical);
  CHECK(by_degrees.total == 512);
}

TEST_CASE("threaded search returns the sequential certificate") {
  SearchOptions threaded;
  threaded.threads = 4;
  for (std::size_t n = 2; n <= 4; ++n) {
    const std::vector<DoubleStarSpec> specs{DoubleStarSpec{2, 1}};
    auto seq = arrows(n, 2, specs);
    auto par = arrows(n, 2, specs, threaded);
    CHECK(seq.verdict == par.verdict);
    CHECK(seq.certificate == par.certificate);
  }
  auto seq = arrows(3, 3, kP4);
  auto par = arrows(3, 3, kP4, threaded);
  CHECK(seq.certificate == par.certificate);
  CHECK(arrows(4, 3, kP4, threaded).verdict == Verdict::Arrows);
}

TEST_CASE("budget exhaustion is indeterminate") {
  SearchOptions tight;
  tight.budget.max_nodes = 10;
  auto r = arrows(4, 3, kP4, tight);
  CHECK(r.verdict == Verdict::Indeterminate);
  CHECK_FALSE(r.certificate);

  SearchOptions timed;
  timed.budget.max_seconds = 1e-9;
  timed.budget.max_nodes = 0;
  CHECK(arrows(5, 3, kP4, timed).verdict != Verdict::Arrows);
}

TEST_CASE("arrows argument errors") {
  CHECK_THROWS_AS(arrows(0, 2, kP4), DomainError);
  CHECK_THROWS_AS(arrows(2, 0, kP4), DomainError);
  CHECK_THROWS_AS(arrows(2, 3, {DoubleStarSpec{1, 1}, DoubleStarSpec{1, 1}}), ArityError);
  CHECK_THROWS_AS(arrows(65, 2, kP4), SizeError);
}

TEST_CASE("arrowing is monotone in N") {
  for (std::size_t k = 1; k <= 3; ++k) {
    bool seen = false;
    for (std::size_t n = 1; n <= 4; ++n) {
      auto v = arrows(n, k, kP4).verdict;
      if (seen) CHECK(v == Verdict::Arrows);
      seen = seen || v == Verdict::Arrows;
    }
  }
}

TEST_CASE("ramsey_bip examples") {
  auto a = ramsey_bip(2, kP4, 4);
  REQUIRE(a.value);
  CHECK(*a.value == 3);
  CHECK(a.runs.size() == 3);

  auto b = ramsey_bip(2, {DoubleStarSpec{2, 1}}, 5);
  REQUIRE(b.value);
  CHECK(*b.value == 5);

  auto c = ramsey_bip(3, kP4, 4);
  REQUIRE(c.value);
  CHECK(*c.value == 4);

  auto capped = ramsey_bip(3, kP4, 3);
  CHECK_FALSE(capped.value);
  CHECK(capped.lower == 4);
  CHECK_FALSE(capped.explanation.empty());

  SearchOptions tight;
  tight.budget.max_nodes = 50;
  auto cut = ramsey_bip(3, kP4, 4, tight);
  CHECK_FALSE(cut.value);
  CHECK(cut.runs.back().verdict == Verdict::Indeterminate);
  CHECK(cut.explanation.find("budget") != std::string::npos);
}

TEST_CASE("theorem values at desk scale") {
  // kn + 1 for k = 2 with n >= m, and k = 3 with n >= 2m.
  struct Case {
    std::size_t k, n, m;
  };
  for (const auto& c : {Case{1, 1, 1}, Case{1, 2, 1}, Case{1, 3, 2}, Case{2, 1, 1}, Case{2, 2, 1},
                        Case{2, 2, 2}, Case{3, 2, 1}}) {
    CAPTURE(c.k);
    CAPTURE(c.n);
    CAPTURE(c.m);
    auto r = ramsey_bip(c.k, {DoubleStarSpec{c.n, c.m}}, c.k * c.n + 1);
    REQUIRE(r.value);
    CHECK(*r.value == c.k * c.n + 1);
    for (const auto& run : r.runs)
      if (run.certificate) CHECK_FALSE(find_monochromatic_double_star(*run.certificate, DoubleStarSpec{c.n, c.m}));
  }
}
