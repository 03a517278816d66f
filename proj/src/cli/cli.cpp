#include "stringtop/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <sstream>

#include "stringtop/acceptance.hpp"
#include "stringtop/dialgebra/axioms.hpp"
#include "stringtop/dialgebra/format.hpp"
#include "stringtop/error.hpp"
#include "stringtop/graph/format.hpp"
#include "stringtop/graph/open_strings.hpp"
#include "stringtop/surface/bialgebra_suite.hpp"
#include "stringtop/surface/goldman.hpp"
#include "stringtop/surface/surface_symbol.hpp"
#include "stringtop/tqft/decomposition.hpp"
#include "stringtop/tqft/format.hpp"

namespace stringtop::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// A FormalSum printed on one line, for tables.
std::string inline_sum(const linear::FormalSum& v) {
  std::string s = v.to_string();
  if (!s.empty() && s.back() == '\n') s.pop_back();
  std::string out;
  for (const auto& line : split(s, '\n')) out += (out.empty() ? "" : " + ") + line;
  return out;
}

struct SurfaceOptions {
  std::string preset;
  std::string symbol;

  void add_to(CLI::App* app) {
    auto* p = app->add_option("--surface", preset, "surface preset: torus-1 or pants");
    auto* s = app->add_option("--symbol", symbol, "cyclic letter order, e.g. a,b,A,B");
    p->excludes(s);
  }

  surface::SurfaceSymbol resolve() const {
    if (!symbol.empty()) return surface::SurfaceSymbol::parse(symbol);
    return surface::SurfaceSymbol::preset(preset.empty() ? "torus-1" : preset);
  }
};

std::optional<surface::CyclicWord> parse_word(const surface::SurfaceSymbol& symbol, const std::string& text) {
  const auto letters = surface::parse_letters(text);
  symbol.require_letters(letters);
  return surface::CyclicWord::reduce(letters);
}

Execution execution(bool serial) { return serial ? Execution::serial : Execution::parallel; }

linear::FormalSum parse_input(const dialgebra::Dialgebra& d, const std::string& text) {
  linear::Tensor t;
  for (const auto& name : split(text, ',')) t.push_back(d.space().index(name));
  if (t.empty()) throw Error("empty --input tuple");
  return linear::FormalSum::basis_element(d.basis, t);
}

tqft::Sector parse_sector(const std::string& s) {
  if (s == "closed") return tqft::Sector::closed;
  if (s == "open") return tqft::Sector::open;
  throw Error("unknown sector '" + s + "' (expected closed or open)");
}

void print_report(std::ostream& out, const dialgebra::AxiomReport& r) {
  out << dialgebra::axiom_name(r.axiom) << " " << (r.holds ? "PASS" : "FAIL");
  if (r.witness) {
    std::string inputs;
    for (const auto& s : r.witness->inputs) inputs += (inputs.empty() ? "" : ",") + s;
    out << " witness (" << inputs << ")\n";
    for (const auto& side : r.witness->sides) out << "  " << side.label << " = " << inline_sum(side.value) << "\n";
  } else {
    out << "\n";
  }
}

const graph::ObjectLabel& find_label(const graph::AmbientGraph& g, const std::string& name,
                                     std::optional<graph::ObjectLabel>& all) {
  if (name == "all") {
    if (!all) all = g.all_vertices();
    return *all;
  }
  return g.label(name);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact open/closed string-topology operations"};
  app.require_subcommand(1);
  int status = ExitCode::ok;

  // bracket / cobracket
  SurfaceOptions bracket_surface;
  std::vector<std::string> bracket_words;
  auto* bracket = app.add_subcommand("bracket", "Goldman bracket of two cyclic words");
  bracket_surface.add_to(bracket);
  bracket->add_option("words", bracket_words, "two words")->required()->expected(2);
  bracket->callback([&] {
    const auto s = bracket_surface.resolve();
    const auto a = parse_word(s, bracket_words[0]);
    const auto b = parse_word(s, bracket_words[1]);
    surface::ClosedStateSum v;
    if (a && b) v = surface::bracket(s, *a, *b);
    out << surface::format_sum(v);
  });

  SurfaceOptions cobracket_surface;
  std::string cobracket_word;
  auto* cobracket = app.add_subcommand("cobracket", "Turaev cobracket of a cyclic word");
  cobracket_surface.add_to(cobracket);
  cobracket->add_option("word", cobracket_word, "word")->required();
  cobracket->callback([&] {
    const auto s = cobracket_surface.resolve();
    const auto w = parse_word(s, cobracket_word);
    surface::ClosedTensor v;
    if (w) v = surface::cobracket(s, *w);
    out << surface::format_tensor(v);
  });

  // bialgebra-suite
  SurfaceOptions suite_surface;
  surface::BialgebraSuiteConfig suite_config;
  bool suite_serial = false;
  auto* suite = app.add_subcommand("bialgebra-suite", "Lie bialgebra identities on a surface");
  suite_surface.add_to(suite);
  suite->add_option("--max-len", suite_config.exhaustive_max_length, "exhaustive word length bound");
  suite->add_option("--random-max-len", suite_config.random_max_length, "random word length bound");
  suite->add_option("--samples", suite_config.samples, "random samples per identity");
  suite->add_option("--seed", suite_config.seed, "random seed");
  suite->add_flag("--serial", suite_serial, "run on one thread");
  suite->callback([&] {
    const auto report = surface::run_bialgebra_suite(suite_surface.resolve(), suite_config, execution(suite_serial));
    for (const auto& p : report.properties) out << format_property(p) << "\n";
    if (!report.passed()) status = ExitCode::check_failed;
  });

  // dialgebra-check / classify
  std::string check_file;
  std::string check_axioms = "all";
  bool check_koszul = false;
  auto* check = app.add_subcommand("dialgebra-check", "Check dialgebra axioms exhaustively");
  check->add_option("file", check_file, "dialgebra file")->required();
  check->add_option("--axioms", check_axioms, "comma-separated axiom names, or all");
  check->add_flag("--koszul", check_koszul, "graded derivation rule");
  check->callback([&] {
    const auto d = dialgebra::load_dialgebra(check_file);
    std::vector<dialgebra::Axiom> axioms;
    if (check_axioms == "all") {
      const auto all = dialgebra::all_axioms();
      axioms.assign(all.begin(), all.end());
    } else {
      for (const auto& name : split(check_axioms, ',')) axioms.push_back(dialgebra::parse_axiom(name));
    }
    dialgebra::CheckOptions options;
    options.koszul_derivation = check_koszul;
    for (const auto& r : dialgebra::check_all(d, axioms, Execution::serial, options)) {
      print_report(out, r);
      if (!r.holds) status = ExitCode::check_failed;
    }
  });

  std::string classify_file;
  auto* classify = app.add_subcommand("classify", "Place a dialgebra in the structure/compatibility table");
  classify->add_option("file", classify_file, "dialgebra file")->required();
  classify->callback([&] {
    const auto d = dialgebra::load_dialgebra(classify_file);
    const auto c = dialgebra::classify(d);
    for (const auto& cell : dialgebra::all_cells()) {
      out << dialgebra::cell_name(cell) << " " << (c.cells.count(cell) ? "yes" : "no") << "\n";
    }
    out << "hopf " << (c.hopf ? "yes" : "no") << "\n";
    for (const auto& r : c.reports) {
      if (!r.holds) print_report(out, r);
    }
  });

  // tqft-eval / tqft-invariance
  std::string eval_dlg;
  std::string eval_bdg;
  std::string eval_input;
  std::vector<int> eval_type;
  std::string eval_sector = "closed";
  auto* eval = app.add_subcommand("tqft-eval", "Evaluate a bordism on a basis tensor");
  eval->add_option("dialgebra", eval_dlg, "dialgebra file")->required();
  auto* eval_bdg_opt = eval->add_option("bordism", eval_bdg, "bordism file");
  auto* eval_type_opt = eval->add_option("--type", eval_type, "g,m,n: evaluate the normal form instead")->delimiter(',')->expected(3);
  eval_bdg_opt->excludes(eval_type_opt);
  eval->add_option("--input", eval_input, "basis tuple, e.g. e,x")->required();
  eval->add_option("--sector", eval_sector, "closed or open (gate used with --type)");
  eval->callback([&] {
    const auto d = dialgebra::load_dialgebra(eval_dlg);
    const auto v = parse_input(d, eval_input);
    if (!eval_type.empty()) {
      if (eval_type[0] < 0 || eval_type[1] < 1 || eval_type[2] < 1) throw Error("--type needs g >= 0 and m, n >= 1");
      const tqft::TopologicalType t{eval_type[0], static_cast<std::size_t>(eval_type[1]),
                                    static_cast<std::size_t>(eval_type[2])};
      const auto r = tqft::canonical_eval(d, t, v, parse_sector(eval_sector));
      if (r.warning) err << "warning: " << *r.warning << "\n";
      out << r.value.to_string();
      return;
    }
    if (eval_bdg.empty()) throw Error("tqft-eval needs a bordism file or --type");
    out << tqft::evaluate(d, tqft::load_bordism(eval_bdg), v).to_string();
  });

  std::string inv_dlg;
  tqft::InvarianceConfig inv_config;
  std::string inv_sector = "closed";
  bool inv_serial = false;
  auto* inv = app.add_subcommand("tqft-invariance", "Compare random pants decompositions with the normal form");
  inv->add_option("dialgebra", inv_dlg, "dialgebra file")->required();
  inv->add_option("--genus-max", inv_config.genus_max, "largest genus");
  inv->add_option("--ports-max", inv_config.ports_max, "largest input/output count");
  inv->add_option("--samples", inv_config.samples, "decompositions per type");
  inv->add_option("--seed", inv_config.seed, "random seed");
  inv->add_option("--sector", inv_sector, "closed or open");
  inv->add_flag("--serial", inv_serial, "run on one thread");
  inv->callback([&] {
    const auto d = dialgebra::load_dialgebra(inv_dlg);
    inv_config.sector = parse_sector(inv_sector);
    const auto report = tqft::run_invariance(d, inv_config, execution(inv_serial));
    for (const auto& g : report.gate) print_report(out, g);
    for (const auto& t : report.types) {
      out << tqft::type_name(t.type) << " decompositions=" << t.decompositions << " mismatches=" << t.mismatches << "\n";
    }
    const auto x = report.first_discrepancy();
    if (x) out << "discrepancy " << tqft::format_discrepancy(*x) << "\n";
    out << (report.invariant() ? "invariant" : "not invariant") << "\n";
    if (!report.gate_passed() || !report.invariant()) status = ExitCode::check_failed;
  });

  // graph
  std::string graph_file;
  std::string graph_op;
  std::vector<std::string> graph_operands;
  std::string graph_label = "all";
  std::optional<std::size_t> graph_index;
  std::string graph_boundary;
  std::string graph_start;
  std::string graph_end;
  auto* graph_cmd = app.add_subcommand("graph", "Open-string operations on a graph");
  graph_cmd->add_option("file", graph_file, "graph file")->required();
  graph_cmd->add_option("op", graph_op, "compose, cut or restrict")->required()->check(CLI::IsMember({"compose", "cut", "restrict"}));
  graph_cmd->add_option("operands", graph_operands, "path sums, e.g. a.b+2*@v");
  graph_cmd->add_option("--label", graph_label, "cutting label (or all)");
  graph_cmd->add_option("--index", graph_index, "cut at this index only");
  graph_cmd->add_option("--boundary", graph_boundary, "cut at the start or end point")->check(CLI::IsMember({"start", "end"}));
  graph_cmd->add_option("--start", graph_start, "keep terms starting in this label");
  graph_cmd->add_option("--end", graph_end, "keep terms ending in this label");
  graph_cmd->callback([&] {
    const auto g = graph::load_graph(graph_file);
    std::optional<graph::ObjectLabel> all;
    auto need = [&](std::size_t n) {
      if (graph_operands.size() != n) {
        throw Error("graph " + graph_op + " expects " + std::to_string(n) + " path sum(s)");
      }
    };
    if (graph_op == "compose") {
      need(2);
      out << graph::format_path_sum(g, graph::compose(g, graph::parse_path_sum(g, graph_operands[0]),
                                                      graph::parse_path_sum(g, graph_operands[1])));
    } else if (graph_op == "cut") {
      need(1);
      const auto x = graph::parse_path_sum(g, graph_operands[0]);
      const auto& label = find_label(g, graph_label, all);
      if (graph_index && !graph_boundary.empty()) throw Error("--index and --boundary are exclusive");
      graph::PathTensor t;
      if (graph_index) {
        t = graph::cut_at_index(g, x, *graph_index, label);
      } else if (!graph_boundary.empty()) {
        t = graph::cut_boundary(g, x, graph_boundary == "start" ? graph::PathEnd::start : graph::PathEnd::end, label);
      } else {
        t = graph::cut_interior(g, x, label);
      }
      out << graph::format_path_tensor(g, t);
    } else {
      need(1);
      if (graph_start.empty() == graph_end.empty()) throw Error("restrict needs exactly one of --start or --end");
      const graph::ObjectLabel everything = g.all_vertices();
      const graph::PathChain x(g, everything, everything, graph::parse_path_sum(g, graph_operands[0]));
      const auto r = graph_start.empty() ? graph::restrict_end(g, x, find_label(g, graph_end, all))
                                         : graph::restrict_start(g, x, find_label(g, graph_start, all));
      out << graph::format_path_sum(g, r.terms());
    }
  });

  // selftest
  bool self_serial = false;
  bool self_verbose = false;
  auto* self = app.add_subcommand("selftest", "Run every acceptance criterion");
  self->add_flag("--serial", self_serial, "run on one thread");
  self->add_flag("--verbose", self_verbose, "print every check");
  self->callback([&] {
    for (const auto& r : acceptance::run_all(execution(self_serial))) {
      out << acceptance::summary_line(r) << "\n";
      if (self_verbose || !r.passed) {
        for (const auto& line : r.details) out << "    " << line << "\n";
      }
      if (!r.passed) status = ExitCode::check_failed;
    }
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::input_error;
  }
  return status;
}

}  // namespace stringtop::cli
