#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bipramsey/double_star.hpp"
#include "bipramsey/edge_coloring.hpp"

namespace bipramsey {

enum class Verdict {
  Arrows,         // every coloring has a monochromatic witness
  NotArrows,      // a critical coloring exists (see certificate)
  Indeterminate,  // budget ran out first
};

std::string to_string(Verdict v);

struct SearchBudget {
  std::uint64_t max_nodes = 0;  // 0: unlimited
  double max_seconds = 0.0;     // 0: unlimited
};

struct SearchOptions {
  SearchBudget budget;
  unsigned threads = 1;
  // Plain enumeration: no early pruning, no color-symmetry reduction. Only
  // sensible for tiny instances; used to cross-check the pruned search.
  bool plain = false;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

struct ArrowsResult {
  Verdict verdict = Verdict::Indeterminate;
  std::optional<EdgeColoring> certificate;
  SearchStats stats;
};

/// Decides K_{N,N} -> (S(n_1,m_1), ..., S(n_k,m_k)) by depth-first search
/// over the edges in row-major order.
///
/// A branch is cut as soon as some color class contains its forbidden double
/// star. Colors with equal specs are interchangeable, so within each group of
/// equal specs a color may only appear once the previous color of the group
/// has been used. `specs` may be a single spec broadcast to all k colors.
///
/// The certificate, when present, is the first critical coloring in search
/// order, regardless of thread count.
ArrowsResult arrows(std::size_t n, std::size_t k, const std::vector<DoubleStarSpec>& specs,
                    const SearchOptions& options = {});

struct RamseyResult {
  /// Least N with Arrows, when found within the cap.
  std::optional<std::size_t> value;
  /// Known lower bound: one more than the largest N shown NotArrows.
  std::size_t lower = 1;
  /// Filled when value is absent.
  std::string explanation;
  /// Outcome per N tried, starting at N = 1.
  std::vector<ArrowsResult> runs;
};

/// Runs arrows for N = 1, 2, ... up to cap and stops at the first Arrows.
RamseyResult ramsey_bip(std::size_t k, const std::vector<DoubleStarSpec>& specs, std::size_t cap,
                        const SearchOptions& options = {});

}  // namespace bipramsey
