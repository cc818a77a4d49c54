#include "bipramsey/bsr.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>
#include <vector>

#include "bipramsey/errors.hpp"

namespace bipramsey {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
  }
  return lines;
}

std::size_t to_index(const Line& line, std::string_view tok, const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line.number, std::string("bad ") + what + " '" + std::string(tok) + "'");
  return v;
}

void expect_arity(const Line& line, std::size_t n, const char* what) {
  if (line.tokens.size() != n)
    throw ParseError(line.number, std::string("malformed ") + what + " line");
}

}  // namespace

BsrObject parse_bsr(std::string_view text) {
  auto lines = tokenize(text);
  std::size_t last_line = lines.empty() ? 1 : lines.back().number;

  if (lines.size() < 1 || lines[0].tokens[0] != "bsr")
    throw ParseError(lines.empty() ? 1 : lines[0].number, "missing 'bsr 1' header");
  expect_arity(lines[0], 2, "header");
  if (lines[0].tokens[1] != "1")
    throw ParseError(lines[0].number, "unsupported bsr version '" + std::string(lines[0].tokens[1]) + "'");

  if (lines.size() < 2 || lines[1].tokens[0] != "n")
    throw ParseError(lines.size() < 2 ? last_line : lines[1].number, "missing 'n <p> <q>' line");
  expect_arity(lines[1], 3, "size");
  std::size_t p = to_index(lines[1], lines[1].tokens[1], "side size");
  std::size_t q = to_index(lines[1], lines[1].tokens[2], "side size");
  if (p == 0 || q == 0) throw ParseError(lines[1].number, "side sizes must be >= 1");

  if (lines.size() < 3 || lines[2].tokens[0] != "k")
    throw ParseError(lines.size() < 3 ? last_line : lines[2].number, "missing 'k <K>' line");
  expect_arity(lines[2], 2, "color count");
  std::size_t k = to_index(lines[2], lines[2].tokens[1], "color count");
  if (k > 0xFFFF) throw ParseError(lines[2].number, "color count too large");

  const bool is_coloring = k > 0;
  std::vector<std::uint16_t> seen(p * q, 0);
  std::size_t assigned = 0;

  for (std::size_t i = 3; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "e") throw ParseError(line.number, "expected edge record 'e ...'");
    expect_arity(line, is_coloring ? 4 : 3, "edge");
    std::size_t x = to_index(line, line.tokens[1], "vertex index");
    std::size_t y = to_index(line, line.tokens[2], "vertex index");
    if (x >= p || y >= q) throw ParseError(line.number, "vertex index out of range");
    std::size_t c = 1;
    if (is_coloring) {
      c = to_index(line, line.tokens[3], "color");
      if (c < 1 || c > k) throw ParseError(line.number, "color out of range 1.." + std::to_string(k));
    }
    auto& slot = seen[x * q + y];
    if (slot != 0) throw ParseError(line.number, "duplicate edge");
    slot = static_cast<std::uint16_t>(c);
    ++assigned;
  }

  if (!is_coloring) {
    BipartiteGraph g(p, q);
    for (std::size_t x = 0; x < p; ++x)
      for (std::size_t y = 0; y < q; ++y)
        if (seen[x * q + y] != 0) g.add_edge(x, y);
    return g;
  }
  if (assigned != p * q) throw ParseError(last_line, "coloring not total");
  EdgeColoring col(p, q, static_cast<Color>(k));
  for (std::size_t x = 0; x < p; ++x)
    for (std::size_t y = 0; y < q; ++y) col.set_color(x, y, seen[x * q + y]);
  return col;
}

BsrObject read_bsr(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_bsr(text);
}

BipartiteGraph parse_bsr_graph(std::string_view text) {
  auto obj = parse_bsr(text);
  if (auto* g = std::get_if<BipartiteGraph>(&obj)) return std::move(*g);
  throw ParseError(3, "expected a graph (k 0), got a coloring");
}

EdgeColoring parse_bsr_coloring(std::string_view text) {
  auto obj = parse_bsr(text);
  if (auto* c = std::get_if<EdgeColoring>(&obj)) return std::move(*c);
  throw ParseError(3, "expected a coloring (k >= 1), got a graph");
}

std::string emit_bsr(const BipartiteGraph& graph) {
  std::ostringstream out;
  out << "bsr 1\nn " << graph.p() << ' ' << graph.q() << "\nk 0\n";
  for (Vertex x = 0; x < graph.p(); ++x)
    for (Vertex y : graph.neighbors_x(x)) out << "e " << x << ' ' << y << '\n';
  return out.str();
}

std::string emit_bsr(const EdgeColoring& coloring) {
  std::ostringstream out;
  out << "bsr 1\nn " << coloring.n1() << ' ' << coloring.n2() << "\nk " << coloring.k() << '\n';
  for (Vertex x = 0; x < coloring.n1(); ++x)
    for (Vertex y = 0; y < coloring.n2(); ++y)
      out << "e " << x << ' ' << y << ' ' << coloring.color(x, y) << '\n';
  return out.str();
}

std::string emit_bsr(const BsrObject& object) {
  return std::visit([](const auto& o) { return emit_bsr(o); }, object);
}

}  // namespace bipramsey
