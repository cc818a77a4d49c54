#include "bipramsey/searcher.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>

#include "bipramsey/detector.hpp"
#include "bipramsey/errors.hpp"

namespace bipramsey {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Arrows: return "arrows";
    case Verdict::NotArrows: return "not-arrows";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;
using Mask = std::uint64_t;

constexpr std::size_t kMaxSide = 64;
constexpr std::size_t kNoPrefix = ~std::size_t{0};

// Per-color incremental degree bookkeeping. Adding edge xy in color c can only
// create a double star whose center edge touches x or y, so checking the
// color-c edges at x and y against the high-degree masks is enough.
class ColorState {
 public:
  ColorState(std::size_t n, std::size_t k, const std::vector<DoubleStarSpec>& specs) {
    per_color_.resize(k);
    for (std::size_t c = 0; c < k; ++c) {
      auto& pc = per_color_[c];
      pc.a = specs[c].n + 1;
      pc.b = specs[c].m + 1;
      pc.deg_x.assign(n, 0);
      pc.deg_y.assign(n, 0);
      pc.nbr_x.assign(n, 0);
      pc.nbr_y.assign(n, 0);
    }
    used_.assign(k, 0);
  }

  // Returns true if color c (0-based) now contains its forbidden double star.
  bool add(std::size_t x, std::size_t y, std::size_t c) {
    auto& pc = per_color_[c];
    pc.nbr_x[x] |= Mask{1} << y;
    pc.nbr_y[y] |= Mask{1} << x;
    const std::size_t dx = ++pc.deg_x[x];
    const std::size_t dy = ++pc.deg_y[y];
    if (dx == pc.a) pc.xa |= Mask{1} << x;
    if (dx == pc.b) pc.xb |= Mask{1} << x;
    if (dy == pc.a) pc.ya |= Mask{1} << y;
    if (dy == pc.b) pc.yb |= Mask{1} << y;
    ++used_[c];
    return (dx >= pc.a && (pc.nbr_x[x] & pc.yb)) || (dx >= pc.b && (pc.nbr_x[x] & pc.ya)) ||
           (dy >= pc.a && (pc.nbr_y[y] & pc.xb)) || (dy >= pc.b && (pc.nbr_y[y] & pc.xa));
  }

  void remove(std::size_t x, std::size_t y, std::size_t c) {
    auto& pc = per_color_[c];
    pc.nbr_x[x] &= ~(Mask{1} << y);
    pc.nbr_y[y] &= ~(Mask{1} << x);
    const std::size_t dx = pc.deg_x[x]--;
    const std::size_t dy = pc.deg_y[y]--;
    if (dx == pc.a) pc.xa &= ~(Mask{1} << x);
    if (dx == pc.b) pc.xb &= ~(Mask{1} << x);
    if (dy == pc.a) pc.ya &= ~(Mask{1} << y);
    if (dy == pc.b) pc.yb &= ~(Mask{1} << y);
    --used_[c];
  }

  bool used(std::size_t c) const { return used_[c] > 0; }

 private:
  struct PerColor {
    std::size_t a = 0, b = 0;  // n+1, m+1
    std::vector<std::size_t> deg_x, deg_y;
    std::vector<Mask> nbr_x, nbr_y;
    Mask xa = 0, xb = 0, ya = 0, yb = 0;
  };

  std::vector<PerColor> per_color_;
  std::vector<std::size_t> used_;
};

struct Shared {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  std::atomic<std::size_t> best_prefix{kNoPrefix};
  std::mutex result_mutex;
  std::vector<std::uint8_t> certificate;
  Clock::time_point start = Clock::now();
};

class Search {
 public:
  Search(std::size_t n, std::size_t k, std::vector<DoubleStarSpec> specs, const SearchOptions& options,
         Shared& shared)
      : n_(n), k_(k), edges_(n * n), specs_(std::move(specs)), options_(options), shared_(shared) {
    group_prev_.assign(k, -1);
    for (std::size_t c = 1; c < k; ++c)
      for (std::size_t d = c; d-- > 0;)
        if (specs_[d].normalized() == specs_[c].normalized()) {
          group_prev_[c] = static_cast<int>(d);
          break;
        }
  }

  // Prefixes of the given depth that survive pruning, in search order.
  std::vector<std::vector<std::uint8_t>> prefixes(std::size_t depth) {
    std::vector<std::vector<std::uint8_t>> out;
    ColorState state(n_, k_, specs_);
    std::vector<std::uint8_t> colors(edges_, 0);
    collect(state, colors, 0, depth, out);
    return out;
  }

  // Explores the subtree under `prefix`. Returns true if a critical coloring
  // was completed (stored in shared state).
  bool run(const std::vector<std::uint8_t>& prefix, std::size_t index) {
    index_ = index;
    ColorState state(n_, k_, specs_);
    std::vector<std::uint8_t> colors(edges_, 0);
    for (std::size_t e = 0; e < prefix.size(); ++e) {
      colors[e] = prefix[e];
      state.add(e / n_, e % n_, prefix[e]);
    }
    return dfs(state, colors, prefix.size());
  }

 private:
  bool allowed(const ColorState& state, std::size_t c) const {
    if (options_.plain) return true;
    const int prev = group_prev_[c];
    return prev < 0 || state.used(static_cast<std::size_t>(prev));
  }

  void collect(ColorState& state, std::vector<std::uint8_t>& colors, std::size_t e, std::size_t depth,
               std::vector<std::vector<std::uint8_t>>& out) {
    if (e == depth) {
      out.emplace_back(colors.begin(), colors.begin() + static_cast<std::ptrdiff_t>(depth));
      return;
    }
    for (std::size_t c = 0; c < k_; ++c) {
      if (!allowed(state, c)) continue;
      const bool bad = state.add(e / n_, e % n_, c);
      colors[e] = static_cast<std::uint8_t>(c);
      if (!bad || options_.plain) collect(state, colors, e + 1, depth, out);
      state.remove(e / n_, e % n_, c);
    }
  }

  bool budget_exhausted() {
    const std::uint64_t nodes = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (shared_.out_of_budget.load(std::memory_order_relaxed)) return true;
    if (options_.budget.max_nodes != 0 && nodes > options_.budget.max_nodes) {
      shared_.out_of_budget = true;
      return true;
    }
    if (options_.budget.max_seconds > 0 && (nodes & 0x3FF) == 0) {
      const std::chrono::duration<double> elapsed = Clock::now() - shared_.start;
      if (elapsed.count() > options_.budget.max_seconds) {
        shared_.out_of_budget = true;
        return true;
      }
    }
    return false;
  }

  bool abandon() const {
    return shared_.out_of_budget.load(std::memory_order_relaxed) ||
           shared_.best_prefix.load(std::memory_order_relaxed) < index_;
  }

  bool dfs(ColorState& state, std::vector<std::uint8_t>& colors, std::size_t e) {
    if (e == edges_) {
      if (options_.plain && !critical(colors)) return false;
      record(colors);
      return true;
    }
    const std::size_t x = e / n_, y = e % n_;
    for (std::size_t c = 0; c < k_; ++c) {
      if (!allowed(state, c)) continue;
      if (budget_exhausted() || abandon()) return false;
      const bool bad = state.add(x, y, c);
      colors[e] = static_cast<std::uint8_t>(c);
      const bool found = (!bad || options_.plain) && dfs(state, colors, e + 1);
      state.remove(x, y, c);
      if (found) return true;
    }
    return false;
  }

  bool critical(const std::vector<std::uint8_t>& colors) const {
    return !find_monochromatic_double_star(to_coloring(colors), specs_).has_value();
  }

  void record(const std::vector<std::uint8_t>& colors) {
    std::lock_guard lock(shared_.result_mutex);
    if (index_ < shared_.best_prefix.load()) {
      shared_.best_prefix = index_;
      shared_.certificate = colors;
    }
  }

 public:
  EdgeColoring to_coloring(const std::vector<std::uint8_t>& colors) const {
    EdgeColoring col(n_, n_, static_cast<Color>(k_));
    for (std::size_t e = 0; e < edges_; ++e) col.set_color(e / n_, e % n_, colors[e] + 1U);
    return col;
  }

 private:
  std::size_t n_;
  std::size_t k_;
  std::size_t edges_;
  std::vector<DoubleStarSpec> specs_;
  const SearchOptions& options_;
  Shared& shared_;
  std::vector<int> group_prev_;
  std::size_t index_ = 0;
};

}  // namespace

ArrowsResult arrows(std::size_t n, std::size_t k, const std::vector<DoubleStarSpec>& specs,
                    const SearchOptions& options) {
  if (n == 0) throw DomainError("arrows needs N >= 1");
  if (k == 0) throw DomainError("arrows needs k >= 1");
  if (n > kMaxSide) throw SizeError("arrows supports N <= 64");
  if (k > 255) throw SizeError("arrows supports k <= 255");
  auto per_color = expand_specs(specs, k);

  Shared shared;
  Search search(n, k, per_color, options, shared);

  const unsigned threads = std::max(1U, options.threads);
  std::vector<std::vector<std::uint8_t>> work;
  if (threads == 1) {
    work.emplace_back();
  } else {
    // Split deep enough to give every worker several subtrees.
    std::size_t depth = 0;
    do {
      ++depth;
      work = search.prefixes(depth);
    } while (work.size() < 8 * threads && depth < n * n);
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Search local(n, k, per_color, options, shared);
    for (std::size_t i = next++; i < work.size(); i = next++) {
      if (shared.out_of_budget || shared.best_prefix.load() < i) break;
      local.run(work[i], i);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ArrowsResult result;
  result.stats.nodes = shared.nodes.load();
  result.stats.seconds = std::chrono::duration<double>(Clock::now() - shared.start).count();
  if (shared.best_prefix.load() != kNoPrefix) {
    result.verdict = Verdict::NotArrows;
    result.certificate = search.to_coloring(shared.certificate);
  } else if (shared.out_of_budget) {
    result.verdict = Verdict::Indeterminate;
  } else {
    result.verdict = Verdict::Arrows;
  }
  return result;
}

RamseyResult ramsey_bip(std::size_t k, const std::vector<DoubleStarSpec>& specs, std::size_t cap,
                        const SearchOptions& options) {
  if (cap == 0) throw DomainError("ramsey search cap must be >= 1");
  expand_specs(specs, k);
  RamseyResult out;
  for (std::size_t n = 1; n <= cap; ++n) {
    out.runs.push_back(arrows(n, k, specs, options));
    switch (out.runs.back().verdict) {
      case Verdict::Arrows:
        out.value = n;
        out.lower = n;
        return out;
      case Verdict::NotArrows:
        out.lower = n + 1;
        break;
      case Verdict::Indeterminate:
        out.explanation = "search budget exhausted at N=" + std::to_string(n) + "; value >= " +
                          std::to_string(out.lower);
        return out;
    }
  }
  out.explanation = "no arrowing N up to cap " + std::to_string(cap) + "; value > " + std::to_string(cap);
  return out;
}

}  // namespace bipramsey
