#include "bipramsey/double_star.hpp"

#include <algorithm>
#include <charconv>

#include "bipramsey/errors.hpp"

namespace bipramsey {

DoubleStarSpec::DoubleStarSpec(std::size_t n_leaves, std::size_t m_leaves) : n(n_leaves), m(m_leaves) {
  if (n == 0 || m == 0) throw DomainError("double star leaf counts must be >= 1");
}

DoubleStarSpec DoubleStarSpec::normalized() const {
  return n >= m ? *this : DoubleStarSpec{m, n};
}

namespace {

std::size_t parse_count(std::string_view s, const std::string& whole) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("bad double star spec '" + whole + "', expected n:m");
  return v;
}

}  // namespace

DoubleStarSpec parse_spec(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad double star spec '" + text + "', expected n:m");
  std::string_view sv(text);
  return DoubleStarSpec{parse_count(sv.substr(0, colon), text), parse_count(sv.substr(colon + 1), text)};
}

std::vector<DoubleStarSpec> parse_spec_list(const std::string& text) {
  std::vector<DoubleStarSpec> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(parse_spec(text.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::string to_string(const DoubleStarSpec& spec) {
  return std::to_string(spec.n) + ":" + std::to_string(spec.m);
}

bool validate_witness(const BipartiteGraph& h, const DoubleStarSpec& spec, const Witness& w) {
  if (w.center_x >= h.p() || w.center_y >= h.q()) return false;
  bool counts_ok = (w.leaves_y.size() == spec.n && w.leaves_x.size() == spec.m) ||
                   (w.leaves_y.size() == spec.m && w.leaves_x.size() == spec.n);
  if (!counts_ok) return false;
  if (!std::is_sorted(w.leaves_y.begin(), w.leaves_y.end()) ||
      !std::is_sorted(w.leaves_x.begin(), w.leaves_x.end()))
    return false;
  if (std::adjacent_find(w.leaves_y.begin(), w.leaves_y.end()) != w.leaves_y.end() ||
      std::adjacent_find(w.leaves_x.begin(), w.leaves_x.end()) != w.leaves_x.end())
    return false;
  if (!h.has_edge(w.center_x, w.center_y)) return false;
  for (Vertex y : w.leaves_y)
    if (y >= h.q() || y == w.center_y || !h.has_edge(w.center_x, y)) return false;
  for (Vertex x : w.leaves_x)
    if (x >= h.p() || x == w.center_x || !h.has_edge(x, w.center_y)) return false;
  return true;
}

bool validate_witness(const EdgeColoring& coloring, const std::vector<DoubleStarSpec>& specs,
                      const Witness& w) {
  if (!w.color || *w.color < 1 || *w.color > coloring.k()) return false;
  const auto& spec = specs.size() == 1 ? specs.front() : specs.at(*w.color - 1);
  return validate_witness(color_class(coloring, *w.color), spec, w);
}

}  // namespace bipramsey
