#include "bipramsey/report.hpp"

#include <sstream>

#include <json.hpp>

namespace bipramsey {

namespace {

using nlohmann::json;

void write_list(std::ostream& out, const char* key, const std::vector<Vertex>& vs) {
  out << key;
  for (Vertex v : vs) out << ' ' << v;
  out << '\n';
}

std::string specs_text(const std::vector<DoubleStarSpec>& specs) {
  std::string s;
  for (const auto& spec : specs) s += (s.empty() ? "" : ",") + to_string(spec);
  return s;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

json arrows_json(const ArrowsResult& r) {
  return {{"verdict", to_string(r.verdict)},
          {"nodes", r.stats.nodes},
          {"seconds", r.stats.seconds},
          {"certificate", r.certificate.has_value()}};
}

}  // namespace

std::string format_witness(const std::optional<Witness>& w) {
  if (!w) return "none\n";
  std::ostringstream out;
  if (w->color) out << "color " << *w->color << '\n';
  out << "center_x " << w->center_x << '\n' << "center_y " << w->center_y << '\n';
  write_list(out, "leaves_y", w->leaves_y);
  write_list(out, "leaves_x", w->leaves_x);
  return out.str();
}

std::string format_witness_json(const std::optional<Witness>& w) {
  if (!w) return "none\n";
  json j = {{"center_x", w->center_x}, {"center_y", w->center_y}, {"leaves_y", w->leaves_y},
            {"leaves_x", w->leaves_x}};
  j["color"] = w->color ? json(*w->color) : json(nullptr);
  return j.dump() + "\n";
}

std::string format_turan_report(const TuranReport& r) {
  std::ostringstream out;
  out << "free " << yes_no(r.free) << '\n'
      << "edges " << r.edges << '\n'
      << "bound " << r.bound << '\n'
      << "meets_bound " << yes_no(r.meets_bound) << '\n'
      << "violation " << yes_no(r.violation()) << '\n';
  return out.str();
}

std::string format_turan_report_json(const TuranReport& r) {
  json j = {{"free", r.free},
            {"edges", r.edges},
            {"bound", r.bound},
            {"meets_bound", r.meets_bound},
            {"violation", r.violation()}};
  return j.dump() + "\n";
}

std::string format_bounds(const BoundsReport& r) {
  std::ostringstream out;
  out << "k " << r.k << '\n' << "specs " << specs_text(r.specs) << '\n';
  out << "lower " << r.lower << '\n' << "lower_source " << r.lower_source << '\n';
  if (r.upper) out << "upper " << *r.upper << '\n' << "upper_source " << r.upper_source << '\n';
  else out << "upper none\n";
  if (r.exact) out << "exact " << *r.exact << '\n' << "exact_source " << r.exact_source << '\n';
  else out << "exact none\n";
  return out.str();
}

std::string format_bounds_json(const BoundsReport& r) {
  json j = {{"k", r.k}, {"specs", specs_text(r.specs)}, {"lower", r.lower}, {"lower_source", r.lower_source}};
  j["upper"] = r.upper ? json(*r.upper) : json(nullptr);
  j["exact"] = r.exact ? json(*r.exact) : json(nullptr);
  if (r.upper) j["upper_source"] = r.upper_source;
  if (r.exact) j["exact_source"] = r.exact_source;
  return j.dump() + "\n";
}

std::string format_arrows(const ArrowsResult& r) {
  std::ostringstream out;
  out << "verdict " << to_string(r.verdict) << '\n'
      << "nodes " << r.stats.nodes << '\n'
      << "seconds " << r.stats.seconds << '\n'
      << "certificate " << yes_no(r.certificate.has_value()) << '\n';
  return out.str();
}

std::string format_arrows_json(const ArrowsResult& r) { return arrows_json(r).dump() + "\n"; }

std::string format_ramsey(const RamseyResult& r) {
  std::ostringstream out;
  if (r.value) out << "value " << *r.value << '\n';
  else out << "value none\n";
  out << "lower " << r.lower << '\n';
  if (!r.explanation.empty()) out << "explanation " << r.explanation << '\n';
  for (std::size_t i = 0; i < r.runs.size(); ++i)
    out << "run N=" << i + 1 << ' ' << to_string(r.runs[i].verdict) << " nodes=" << r.runs[i].stats.nodes
        << '\n';
  return out.str();
}

std::string format_ramsey_json(const RamseyResult& r) {
  json j = {{"lower", r.lower}, {"explanation", r.explanation}};
  j["value"] = r.value ? json(*r.value) : json(nullptr);
  j["runs"] = json::array();
  for (const auto& run : r.runs) j["runs"].push_back(arrows_json(run));
  return j.dump() + "\n";
}

}  // namespace bipramsey
