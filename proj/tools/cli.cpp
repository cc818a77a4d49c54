#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bipramsey/bounds.hpp"
#include "bipramsey/bsr.hpp"
#include "bipramsey/constructions.hpp"
#include "bipramsey/detector.hpp"
#include "bipramsey/errors.hpp"
#include "bipramsey/report.hpp"
#include "bipramsey/searcher.hpp"
#include "bipramsey/turan.hpp"

namespace bipramsey::cli {

namespace {

struct Options {
  std::size_t k = 0, n = 0, m = 0, p = 0, big_n = 0, t = 0, max_n = 0;
  std::string specs;
  std::uint64_t budget_nodes = 0;
  double budget_secs = 0;
  unsigned threads = 1;
  std::string output;
  std::string input;
  bool json = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<DoubleStarSpec> spec_list(const Options& o, CLI::App* cmd) {
  if (!o.specs.empty()) return parse_spec_list(o.specs);
  if (cmd->count("--n") == 0 || cmd->count("--m") == 0)
    throw UsageError("either --specs or both --n and --m are required");
  return {DoubleStarSpec{o.n, o.m}};
}

BsrObject read_input(const Options& o, std::istream& in) {
  if (o.input.empty() || o.input == "-") return read_bsr(in);
  std::ifstream file(o.input);
  if (!file) throw std::runtime_error("cannot open " + o.input);
  return read_bsr(file);
}

void write_bsr(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.output);
  if (!file) throw std::runtime_error("cannot write " + o.output);
  file << text;
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  s.budget.max_nodes = o.budget_nodes;
  s.budget.max_seconds = o.budget_secs;
  s.threads = o.threads;
  return s;
}

int verdict_status(Verdict v) {
  switch (v) {
    case Verdict::Arrows: return kOk;
    case Verdict::NotArrows: return kNegative;
    case Verdict::Indeterminate: return kIndeterminate;
  }
  return kError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bipartite Ramsey numbers of double stars: constructions, detection, search, bounds",
               "bipramsey"};
  app.require_subcommand(1);

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", o.json, "Structured JSON report"); };
  auto add_input = [&](CLI::App* cmd) { cmd->add_option("FILE", o.input, "bsr input (default: stdin)"); };

  auto* construct = app.add_subcommand("construct", "Emit a construction as bsr");
  construct->require_subcommand(1);
  auto* c_matching = construct->add_subcommand("matching-lower", "k-coloring of K_{kn,kn} free of S(n,m)");
  c_matching->add_option("--k", o.k)->required();
  c_matching->add_option("--n", o.n)->required();
  auto* c_latin = construct->add_subcommand("latin", "Proper N-coloring of K_{N,N}");
  c_latin->add_option("--N", o.big_n)->required();
  auto* c_blowup = construct->add_subcommand("blowup", "Blow up a coloring by factor t");
  c_blowup->add_option("--t", o.t)->required();
  add_input(c_blowup);
  auto* c_turan = construct->add_subcommand("turan-extremal", "Extremal S(n,m)-free subgraph of K_{p,p}");
  c_turan->add_option("--p", o.p)->required();
  c_turan->add_option("--n", o.n)->required();
  c_turan->add_option("--m", o.m)->required();
  for (auto* cmd : {c_matching, c_latin, c_blowup, c_turan}) cmd->add_option("-o", o.output, "Output file");

  auto* detect = app.add_subcommand("detect", "Find a (monochromatic) double star");
  detect->add_option("--n", o.n);
  detect->add_option("--m", o.m);
  detect->add_option("--specs", o.specs, "Per-color list n1:m1,n2:m2,...");
  add_input(detect);
  add_json(detect);

  auto* verify = app.add_subcommand("verify", "Check a graph against the Turan bound");
  verify->require_subcommand(1);
  auto* v_turan = verify->add_subcommand("turan", "Freeness, edge count and bound");
  v_turan->add_option("--n", o.n)->required();
  v_turan->add_option("--m", o.m)->required();
  add_input(v_turan);
  add_json(v_turan);

  auto* search = app.add_subcommand("search", "Exhaustive arrows search");
  search->require_subcommand(1);
  auto* s_arrows = search->add_subcommand("arrows", "Decide K_{N,N} -> (S(n,m); k)");
  s_arrows->add_option("--N", o.big_n)->required();
  auto* s_ramsey = search->add_subcommand("ramsey", "Least N with K_{N,N} -> (S(n,m); k)");
  s_ramsey->add_option("--max-N", o.max_n)->required();
  for (auto* cmd : {s_arrows, s_ramsey}) {
    cmd->add_option("--k", o.k)->required();
    cmd->add_option("--n", o.n);
    cmd->add_option("--m", o.m);
    cmd->add_option("--specs", o.specs, "Per-color list n1:m1,n2:m2,...");
    cmd->add_option("--budget-nodes", o.budget_nodes, "Node limit (0: none)");
    cmd->add_option("--budget-secs", o.budget_secs, "Wall-clock limit in seconds (0: none)");
    cmd->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
    add_json(cmd);
  }
  s_arrows->add_option("-o", o.output, "Write the certificate here");

  auto* bound = app.add_subcommand("bound", "Known bounds on r_bip(S(n,m); k)");
  bound->add_option("--k", o.k)->required();
  bound->add_option("--n", o.n)->required();
  bound->add_option("--m", o.m)->required();
  add_json(bound);

  auto* bound_multi = app.add_subcommand("bound-multi", "Known bounds for per-color double stars");
  bound_multi->add_option("--specs", o.specs)->required();
  add_json(bound_multi);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kOk : kUsage;
  }

  try {
    if (c_matching->parsed()) {
      write_bsr(o, emit_bsr(matching_lower_construction(o.k, o.n)), out);
    } else if (c_latin->parsed()) {
      write_bsr(o, emit_bsr(proper_coloring_latin(o.big_n)), out);
    } else if (c_blowup->parsed()) {
      auto obj = read_input(o, in);
      auto* base = std::get_if<EdgeColoring>(&obj);
      if (base == nullptr) throw std::runtime_error("blowup needs a coloring input");
      write_bsr(o, emit_bsr(blow_up(*base, o.t)), out);
    } else if (c_turan->parsed()) {
      write_bsr(o, emit_bsr(turan_extremal(o.p, o.n, o.m)), out);
    } else if (detect->parsed()) {
      auto specs = spec_list(o, detect);
      auto obj = read_input(o, in);
      std::optional<Witness> w;
      if (auto* g = std::get_if<BipartiteGraph>(&obj)) {
        if (specs.size() != 1) throw ArityError("a plain graph takes a single spec");
        w = find_double_star(*g, specs.front());
      } else {
        w = find_monochromatic_double_star(std::get<EdgeColoring>(obj), specs);
      }
      out << (o.json ? format_witness_json(w) : format_witness(w));
      return w ? kOk : kNegative;
    } else if (v_turan->parsed()) {
      auto obj = read_input(o, in);
      auto* g = std::get_if<BipartiteGraph>(&obj);
      if (g == nullptr) throw std::runtime_error("verify turan needs a graph input (k 0)");
      auto report = verify_free_and_count(*g, o.n, o.m);
      out << (o.json ? format_turan_report_json(report) : format_turan_report(report));
      if (report.violation()) {
        err << "THEOREM VIOLATION: S(n,m)-free graph with " << report.edges << " edges exceeds bound "
            << report.bound << '\n';
        return kError;
      }
      return report.free ? kOk : kNegative;
    } else if (s_arrows->parsed()) {
      auto specs = spec_list(o, s_arrows);
      auto result = arrows(o.big_n, o.k, specs, search_options(o));
      out << (o.json ? format_arrows_json(result) : format_arrows(result));
      if (result.certificate) write_bsr(o, emit_bsr(*result.certificate), out);
      return verdict_status(result.verdict);
    } else if (s_ramsey->parsed()) {
      auto specs = spec_list(o, s_ramsey);
      auto result = ramsey_bip(o.k, specs, o.max_n, search_options(o));
      out << (o.json ? format_ramsey_json(result) : format_ramsey(result));
      if (result.value) return kOk;
      return !result.runs.empty() && result.runs.back().verdict == Verdict::Indeterminate ? kIndeterminate
                                                                                          : kNegative;
    } else if (bound->parsed()) {
      auto report = bounds(o.k, o.n, o.m);
      out << (o.json ? format_bounds_json(report) : format_bounds(report));
    } else if (bound_multi->parsed()) {
      auto report = multicolor_bounds(parse_spec_list(o.specs));
      out << (o.json ? format_bounds_json(report) : format_bounds(report));
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kOk;
}

}  // namespace bipramsey::cli
