#include "bipramsey/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bipramsey/errors.hpp"

namespace bipramsey {

std::uint64_t isqrt(std::uint64_t v) {
  constexpr std::uint64_t kMaxRoot = 0xFFFFFFFFULL;  // floor(sqrt(2^64 - 1))
  auto r = std::min(kMaxRoot, static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(v))));
  while (r * r > v) --r;
  while (r < kMaxRoot && (r + 1) * (r + 1) <= v) ++r;
  return r;
}

std::uint64_t sqrt_bound_floor(std::uint64_t k, std::uint64_t n) {
  if (k < 2) throw DomainError("sqrt bound needs k >= 2");
  // (1 + sqrt(1 - 2/k)) k n = k n + sqrt(k (k - 2) n^2)
  return k * n + isqrt(k * (k - 2) * n * n);
}

std::uint64_t p4_blowup_lower(std::uint64_t k, std::uint64_t n) {
  if (k < 3) throw DomainError("P4 blow-up bound stated for k >= 3");
  if (k == 3) return 3 * n + 1;
  if (k == 4) return 5 * n + 1;
  return (2 * k - 4) * n + 1;
}

namespace {

void settle(BoundsReport& r) {
  if (!r.exact && r.upper && *r.upper == r.lower) {
    r.exact = r.lower;
    r.exact_source = "lower and upper bounds coincide";
  }
}

}  // namespace

BoundsReport bounds(std::size_t k, std::size_t n, std::size_t m) {
  if (k == 0) throw DomainError("bounds need k >= 1");
  const DoubleStarSpec spec = DoubleStarSpec{n, m}.normalized();
  n = spec.n;
  m = spec.m;

  BoundsReport r;
  r.k = k;
  r.specs = {spec};
  r.lower = k * n + 1;
  r.lower_source = "matching construction: kn + 1";

  if (k == 1) {
    r.exact = n + 1;
    r.exact_source = "single color: K_{n+1,n+1} contains S(n,m), K_{n,n} has max degree n";
  } else if (k == 2 || n >= 2 * m) {
    r.exact = k * n + 1;
    r.exact_source = k == 2 ? "exact for k = 2, n >= m: kn + 1" : "exact for k >= 3, n >= 2m: kn + 1";
  } else if (n == m) {
    const auto blowup = p4_blowup_lower(k, n);
    if (blowup > r.lower) {
      r.lower = blowup;
      r.lower_source = "P4 blow-up construction for S(n,n)";
    }
    r.upper = sqrt_bound_floor(k, n) + 1;
    r.upper_source = "S(n,n) counting bound: floor((1 + sqrt(1 - 2/k)) k n) + 1";
  } else {
    r.upper = std::max<std::uint64_t>(k * n + 1, sqrt_bound_floor(k, m) + 1);
    r.upper_source = "m <= n < 2m counting bound: max{kn + 1, floor((1 + sqrt(1 - 2/k)) k m) + 1}";
  }
  settle(r);
  return r;
}

BoundsReport multicolor_bounds(const std::vector<DoubleStarSpec>& specs) {
  if (specs.empty()) throw ArityError("multicolor bounds need at least one spec");
  BoundsReport r;
  r.k = specs.size();
  for (const auto& s : specs) r.specs.push_back(s.normalized());
  const std::uint64_t sum = std::accumulate(r.specs.begin(), r.specs.end(), std::uint64_t{0},
                                            [](std::uint64_t acc, const DoubleStarSpec& s) { return acc + s.n; });
  r.lower = sum + 1;
  r.lower_source = "matching construction: n_1 + ... + n_k + 1";

  if (r.k <= 2) {
    r.exact = sum + 1;
    r.exact_source = r.k == 1 ? "single color: n_1 + 1" : "exact for two colors: n_1 + n_2 + 1";
    return r;
  }
  const bool all_long = std::all_of(r.specs.begin(), r.specs.end(),
                                    [](const DoubleStarSpec& s) { return s.n >= 2 * s.m; });
  const bool balanced = std::all_of(r.specs.begin(), r.specs.end(),
                                    [sum](const DoubleStarSpec& s) { return sum >= 3 * s.n; });
  if (all_long && balanced) {
    r.exact = sum + 1;
    r.exact_source = "exact for k >= 3, n_i >= 2m_i, sum n_j >= 3n_i: n_1 + ... + n_k + 1";
  }
  return r;
}

}  // namespace bipramsey
