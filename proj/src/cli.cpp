#include "sharklab/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sharklab/constructions.hpp"
#include "sharklab/errors.hpp"
#include "sharklab/map_io.hpp"
#include "sharklab/order.hpp"
#include "sharklab/patterns.hpp"
#include "sharklab/periodic.hpp"
#include "sharklab/plot.hpp"
#include "sharklab/report_io.hpp"

namespace sharklab::cli {

namespace {

struct Options {
  std::string map_path;
  std::string pattern;
  unsigned bound = 12;
  std::string op = "G";
  std::string a = "1/3";
  std::string alpha = "01";
  std::optional<unsigned> depth;
  std::string out_path;
  std::string format;
  std::string strategy = "stefan-doubling";
  std::string loop;
  std::string cycle;
  unsigned samples = 101;
  std::optional<unsigned> loops_length;
  std::vector<std::string> positional;
};

std::size_t piece_budget_from_env() {
  const char* env = std::getenv("SHARKLAB_PIECE_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultPieceBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0 || env[0] == '-') {
    throw ParameterError(std::string("SHARKLAB_PIECE_BUDGET: '") + env + "' is not a positive integer");
  }
  return static_cast<std::size_t>(v);
}

PLMap load_map(const std::string& path) {
  if (path.empty()) throw ParameterError("--map: a map file is required");
  if (!std::filesystem::exists(path) && (path == "tent" || path == "g" || path == "h")) {
    return make_named(parse_named_map(path));
  }
  return read_map_file(path).map;
}

DoublingSpec doubling_from(const Options& o) {
  DoublingSpec spec{parse_doubling_kind(o.op), Rational()};
  try {
    spec.a = parse_rational(o.a);
  } catch (const DomainError& e) {
    throw ParameterError(std::string("--a: ") + e.what());
  }
  validate(spec);
  return spec;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw ParameterError("--out: cannot write '" + o.out_path + "'");
  file << text;
}

const std::string& positional(const Options& o, std::size_t i, const char* what) {
  if (o.positional.size() <= i) throw ParameterError(std::string("missing argument: ") + what);
  return o.positional[i];
}

unsigned parse_count(const std::string& text, const char* what) {
  unsigned long v = 0;
  std::size_t used = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty() || text[0] == '-' || v > 1'000'000) {
    throw ParameterError(std::string(what) + ": '" + text + "' is not a non-negative integer");
  }
  return static_cast<unsigned>(v);
}

OrbitPattern pattern_from(const Options& o) {
  const std::string& text = o.pattern.empty() ? positional(o, 0, "pattern") : o.pattern;
  return parse_pattern(text);
}

std::vector<unsigned> parse_walk(const std::string& text) {
  std::vector<unsigned> walk;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    if (!tok.empty() && (tok[0] == 'J' || tok[0] == 'j')) tok.erase(0, 1);
    walk.push_back(parse_count(tok, "--loop"));
  }
  if (walk.empty()) throw ParameterError("--loop: empty walk");
  return walk;
}

// "lo,hi lo,hi ..."
IntervalCycle parse_cycle(const std::string& text) {
  IntervalCycle cycle;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    const auto comma = tok.find(',');
    if (comma == std::string::npos) throw ParameterError("--cycle: '" + tok + "' is not lo,hi");
    Interval iv{parse_rational(tok.substr(0, comma)), parse_rational(tok.substr(comma + 1))};
    if (iv.lo > iv.hi) throw ParameterError("--cycle: '" + tok + "' has lo > hi");
    cycle.intervals.push_back(std::move(iv));
  }
  if (cycle.intervals.empty()) throw ParameterError("--cycle: empty cycle");
  return cycle;
}

const char* order_symbol(std::strong_ordering c) {
  if (c == std::strong_ordering::less) return "≺";
  if (c == std::strong_ordering::greater) return "≻";
  return "=";
}

int cmd_order_cmp(const Options& o, std::ostream& out) {
  const SharkClass a = parse_shark_class(positional(o, 0, "first class"));
  const SharkClass b = parse_shark_class(positional(o, 1, "second class"));
  out << to_string(a) << " " << order_symbol(shark_cmp(a, b)) << " " << to_string(b) << "\n";
  return kOk;
}

int cmd_order_tail(const Options& o, std::ostream& out) {
  const SharkClass c = parse_shark_class(positional(o, 0, "class"));
  if (o.bound == 0) throw ParameterError("--bound must be positive");
  std::string line;
  for (const auto m : shark_tail(c, o.bound)) line += (line.empty() ? "" : " ") + std::to_string(m);
  out << line << "\n";
  return kOk;
}

int cmd_map_eval(const Options& o, std::ostream& out) {
  const Rational x = parse_rational(positional(o, 0, "x"));
  const PLMap f = load_map(o.map_path);
  out << to_string(f(x)) << "\n";
  return kOk;
}

int cmd_map_iterate(const Options& o, std::ostream& out, std::size_t budget) {
  const unsigned n = parse_count(positional(o, 0, "n"), "n");
  const PLMap f = load_map(o.map_path);
  emit(o, format_map_document(iterate(f, n, budget)), out);
  return kOk;
}

int cmd_periods(const Options& o, std::ostream& out, std::size_t budget, bool verify) {
  if (o.bound == 0) throw ParameterError("--bound must be positive");
  if (!o.format.empty() && o.format != "json" && o.format != "text") {
    throw ParameterError("--format: expected text or json");
  }
  const PLMap f = load_map(o.map_path);
  const PeriodReport report = verify ? verify_sharkovsky(f, o.bound, budget) : period_set(f, o.bound, budget);
  std::string text;
  if (o.format == "json") {
    text = format_period_report_json(report);
  } else {
    text = format_period_report_text(report);
    if (verify) {
      text += format_abc_text(check_abc(report));
      text += std::string("verify: ") + (report.is_tail() ? "pass" : "FAIL") + "\n";
    }
  }
  emit(o, text, out);
  return verify && !report.is_tail() ? kVerificationFailed : kOk;
}

int cmd_digraph(const Options& o, std::ostream& out) {
  if (!o.format.empty() && o.format != "dot" && o.format != "json") {
    throw ParameterError("--format: expected dot or json");
  }
  const OrbitPattern p = pattern_from(o);
  const CoverDigraph g = cover_digraph(p);
  std::string text;
  if (o.loops_length) {
    for (const auto& w : loops(g, *o.loops_length)) {
      std::string line;
      for (const unsigned j : w) line += (line.empty() ? "J" : " J") + std::to_string(j);
      text += line + "\n";
    }
  } else if (o.format == "json") {
    nlohmann::ordered_json doc;
    doc["nodes"] = g.nodes;
    doc["edges"] = g.edges;
    text = doc.dump(2) + "\n";
  } else {
    text = digraph_to_dot(g);
  }
  emit(o, text, out);
  return kOk;
}

int cmd_stefan(const Options& o, std::ostream& out) {
  out << "stefan: " << (is_stefan(pattern_from(o)) ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_realize(const Options& o, std::ostream& out, std::size_t budget) {
  PLMap f = PLMap::identity({0, 1});
  IntervalCycle cycle;
  if (!o.pattern.empty()) {
    const OrbitPattern p = parse_pattern(o.pattern);
    cycle.intervals = walk_intervals(p, parse_walk(o.loop));
    f = connect_the_dots(p);
  } else {
    cycle = parse_cycle(o.cycle);
    f = load_map(o.map_path);
  }
  const LoopCertificate cert = realize_loop(f, cycle, budget);
  const CertificateCheck check = validate_certificate(f, cert);
  emit(o, format_certificate_json(cert), out);
  return check.ok ? kOk : kVerificationFailed;
}

int cmd_witness(const Options& o, std::ostream& out, std::size_t budget) {
  const SharkClass c = parse_shark_class(positional(o, 0, "class"));
  WitnessOptions wo;
  wo.strategy = parse_witness_strategy(o.strategy);
  wo.doubling = doubling_from(o);
  wo.alpha = parse_alpha(o.alpha);
  wo.depth = o.depth;
  wo.piece_budget = budget;
  if (c.is_two_inf() && !wo.depth) wo.depth = 6;
  WitnessMap w = witness(c, wo);
  emit(o, format_map_document(w.map, w.recipe), out);
  return kOk;
}

int cmd_double(const Options& o, std::ostream& out) {
  const DoublingSpec spec = doubling_from(o);
  const PLMap f = load_map(o.map_path);
  const std::string recipe = std::string("double op=") + to_char(spec.kind) + " a=" + to_string(spec.a);
  emit(o, format_map_document(double_map(f, spec), recipe), out);
  return kOk;
}

int cmd_phi(const Options& o, std::ostream& out) {
  const AlphaSequence alpha = parse_alpha(o.alpha);
  const DoublingSpec spec = doubling_from(o);
  const unsigned depth = o.depth.value_or(6);
  if (depth == 0) throw ParameterError("--depth must be positive");
  const PLMap seed = o.map_path.empty() ? make_named(NamedMap::zero) : load_map(o.map_path);
  const PhiTruncation phi = phi_truncation(PhiSpec{alpha, {spec.a}, {spec.a}, depth}, seed);
  const std::string recipe = "phi alpha=" + to_string(alpha) + " a=" + to_string(spec.a) + " b=" +
                             to_string(spec.a) + " depth=" + std::to_string(depth) +
                             " threshold=" + to_string(phi.threshold) +
                             " tail_bound=" + to_string(phi.tail_bound) +
                             " value_at_0=" + to_string(phi.map(0));
  emit(o, format_map_document(phi.map, recipe), out);
  return kOk;
}

int cmd_plot(const Options& o, std::ostream& out) {
  PlotFormat fmt = PlotFormat::csv;
  if (o.format == "svg") {
    fmt = PlotFormat::svg;
  } else if (!o.format.empty() && o.format != "csv") {
    throw ParameterError("--format: expected csv or svg");
  }
  const PLMap f = load_map(o.map_path);
  emit(o, plot(f, fmt, o.samples), out);
  return kOk;
}

int cmd_named(const Options& o, std::ostream& out) {
  const std::string& name = positional(o, 0, "name");
  PLMap f = PLMap::identity({0, 1});
  if (name.size() > 1 && name[0] == 'f' && name[1] == '_') {
    f = make_fn(parse_count(name.substr(2), "name"));
  } else {
    f = make_named(parse_named_map(name));
  }
  emit(o, format_map_document(f), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"sharklab: exact periodic-orbit analysis of piecewise-linear interval maps"};
  app.require_subcommand(1);
  Options o;

  auto add_map = [&](CLI::App* c) { c->add_option("--map", o.map_path, "map file (or tent, g, h)"); };
  auto add_bound = [&](CLI::App* c) { c->add_option("--bound", o.bound, "largest period examined"); };
  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out_path, "write output to FILE"); };
  auto add_format = [&](CLI::App* c) { c->add_option("--format", o.format, "output format"); };
  auto add_pos = [&](CLI::App* c) { c->add_option("args", o.positional, "positional arguments"); };
  auto add_doubling = [&](CLI::App* c) {
    c->add_option("--op", o.op, "doubling operator G|H|D|E");
    c->add_option("--a", o.a, "operator parameter in (0, 1/2)");
  };

  auto* order_cmp = app.add_subcommand("order-cmp", "compare two Sharkovsky classes");
  add_pos(order_cmp);
  auto* order_tail = app.add_subcommand("order-tail", "list the tail of a class up to --bound");
  add_pos(order_tail);
  add_bound(order_tail);
  auto* map_eval = app.add_subcommand("map-eval", "evaluate a map at an exact rational");
  add_map(map_eval);
  add_pos(map_eval);
  auto* map_iterate = app.add_subcommand("map-iterate", "write the n-th iterate of a map");
  add_map(map_iterate);
  add_pos(map_iterate);
  add_out(map_iterate);
  auto* periods = app.add_subcommand("periods", "least periods up to --bound with witnesses");
  auto* verify = app.add_subcommand("verify", "check that the period set is a Sharkovsky tail");
  for (auto* c : {periods, verify}) {
    add_map(c);
    add_bound(c);
    add_out(c);
    add_format(c);
  }
  auto* digraph = app.add_subcommand("digraph", "covering digraph of an orbit pattern");
  digraph->add_option("--pattern", o.pattern, "image list, e.g. \"3 5 4 2 1\"");
  digraph->add_option("--loops", o.loops_length, "list closed walks of this length instead");
  add_pos(digraph);
  add_out(digraph);
  add_format(digraph);
  auto* stefan = app.add_subcommand("stefan", "is the pattern a Stefan cycle");
  stefan->add_option("--pattern", o.pattern, "image list");
  add_pos(stefan);
  auto* realize = app.add_subcommand("realize", "realise an interval loop as a periodic point");
  realize->add_option("--pattern", o.pattern, "orbit pattern (with --loop)");
  realize->add_option("--loop", o.loop, "walk of gap indices, e.g. \"1 3 2 4\"");
  realize->add_option("--cycle", o.cycle, "intervals \"lo,hi lo,hi ...\" (with --map)");
  add_map(realize);
  add_out(realize);
  auto* witness_cmd = app.add_subcommand("witness", "map whose period set is the tail of a class");
  add_pos(witness_cmd);
  witness_cmd->add_option("--strategy", o.strategy, "stefan-doubling | truncated-tent");
  witness_cmd->add_option("--depth", o.depth, "truncation depth for 2^inf");
  witness_cmd->add_option("--alpha", o.alpha, "operator bits for 2^inf");
  add_doubling(witness_cmd);
  add_out(witness_cmd);
  auto* double_cmd = app.add_subcommand("double", "apply a doubling operator");
  add_map(double_cmd);
  add_doubling(double_cmd);
  add_out(double_cmd);
  auto* phi = app.add_subcommand("phi", "finite truncation of the infinite doubling composition");
  phi->add_option("--alpha", o.alpha, "bits, e.g. 01 or 1(01)");
  phi->add_option("--depth", o.depth, "number of operators");
  phi->add_option("--a", o.a, "operator parameter for every level");
  add_map(phi);
  add_out(phi);
  auto* plot_cmd = app.add_subcommand("plot", "CSV samples or SVG polyline of a map");
  add_map(plot_cmd);
  add_format(plot_cmd);
  plot_cmd->add_option("--samples", o.samples, "grid points for CSV");
  add_out(plot_cmd);
  auto* named = app.add_subcommand("named", "write a built-in map (tent, g, h, f_N)");
  add_pos(named);
  add_out(named);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    const std::size_t budget = piece_budget_from_env();
    if (order_cmp->parsed()) return cmd_order_cmp(o, out);
    if (order_tail->parsed()) return cmd_order_tail(o, out);
    if (map_eval->parsed()) return cmd_map_eval(o, out);
    if (map_iterate->parsed()) return cmd_map_iterate(o, out, budget);
    if (periods->parsed()) return cmd_periods(o, out, budget, false);
    if (verify->parsed()) return cmd_periods(o, out, budget, true);
    if (digraph->parsed()) return cmd_digraph(o, out);
    if (stefan->parsed()) return cmd_stefan(o, out);
    if (realize->parsed()) return cmd_realize(o, out, budget);
    if (witness_cmd->parsed()) return cmd_witness(o, out, budget);
    if (double_cmd->parsed()) return cmd_double(o, out);
    if (phi->parsed()) return cmd_phi(o, out);
    if (plot_cmd->parsed()) return cmd_plot(o, out);
    if (named->parsed()) return cmd_named(o, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceExceeded;
  } catch (const std::logic_error& e) {
    // DomainError, PreconditionError and ParameterError all land here.
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace sharklab::cli
