#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bipramsey/double_star.hpp"

namespace bipramsey {

struct BoundsReport {
  std::size_t k = 0;
  std::vector<DoubleStarSpec> specs;  // normalized, n >= m
  std::uint64_t lower = 0;
  std::optional<std::uint64_t> upper;
  std::optional<std::uint64_t> exact;
  std::string lower_source;
  std::string upper_source;
  std::string exact_source;
};

/// floor(sqrt(v)), exact.
std::uint64_t isqrt(std::uint64_t v);

/// floor((1 + sqrt(1 - 2/k)) * k * n) computed in integers as
/// k*n + isqrt(k(k-2)n^2). Requires k >= 2.
std::uint64_t sqrt_bound_floor(std::uint64_t k, std::uint64_t n);

/// Lower bound for r_bip(S(n,n); k) from the P4 blow-up construction:
/// 3n+1 (k=3), 5n+1 (k=4), (2k-4)n+1 (k>=5). Requires k >= 3.
std::uint64_t p4_blowup_lower(std::uint64_t k, std::uint64_t n);

/// Known bounds on r_bip(S(n,m); k). Specs with n < m are swapped first.
BoundsReport bounds(std::size_t k, std::size_t n, std::size_t m);

/// Known bounds on r_bip(S(n_1,m_1), ..., S(n_k,m_k)). Throws ArityError on an
/// empty list.
BoundsReport multicolor_bounds(const std::vector<DoubleStarSpec>& specs);

}  // namespace bipramsey
