#include "kpg/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <tuple>

#include "kpg/ensemble.hpp"
#include "kpg/error.hpp"
#include "kpg/hopf.hpp"
#include "kpg/invariant.hpp"
#include "kpg/schur.hpp"
#include "kpg/series_json.hpp"

namespace kpg::cli {

namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string which = "W";
  int order = kDefaultOrder;
  int max_n = 0;
  std::string graph6;
  std::string input;
  std::string format = "text";
  int jobs = 1;
  std::string isa = "auto";
  bool allow_order_8 = false;
  std::string kind = "connected";
  bool rescaled = false;
  bool show_plan = false;
  std::string series = "S";
  std::string op;
};

CensusOptions census_options(const Options& o) {
  CensusOptions c;
  c.jobs = o.jobs;
  if (o.isa == "scalar") c.isa = kernels::Isa::scalar;
  if (o.isa == "avx2") c.isa = kernels::Isa::avx2;
  return c;
}

/// Validates a truncation order or vertex bound against the [1, 8] range.
/// Order 8 needs the opt-in flag; `heavy` marks commands that stream K_8.
void check_order(int n, const Options& o, bool heavy, std::ostream& err) {
  if (n < 1) throw UsageError("order must be at least 1");
  if (n > kMaxEnsembleOrder) {
    throw SizeError("order " + std::to_string(n) + " exceeds the cap of " +
                    std::to_string(kMaxEnsembleOrder));
  }
  if (n == kMaxEnsembleOrder) {
    if (!o.allow_order_8) throw SizeError("order 8 requires --allow-order-8");
    if (heavy) err << "warning: order 8 streams all 2^28 edge subsets of K_8\n";
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<Graph> load_graphs(const Options& o) {
  if (!o.graph6.empty()) return {parse_graph6(o.graph6)};
  if (!o.input.empty()) return parse_graph6_lines(read_file(o.input));
  throw UsageError("give a graph with --graph6 or --input");
}

void print_series(std::ostream& out, const TruncSeries& s, const std::string& format) {
  if (format == "json") {
    out << to_json(s) << '\n';
    return;
  }
  if (s.is_zero()) {
    out << "0\n";
    return;
  }
  for (int w = 0; w <= s.order(); ++w) {
    const TruncSeries part = s.homogeneous_part(w);
    if (!part.is_zero()) out << "wt " << w << ": " << to_string(part) << '\n';
  }
}

void require_text(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  throw UsageError("format '" + o.format + "' is not available for this subcommand");
}

// ---------------------------------------------------------------------------

int cmd_invariant(const Options& o, std::ostream& out, std::ostream& err) {
  require_text(o, {"text", "json"});
  check_order(o.order, o, false, err);
  const Invariant which = parse_invariant(o.which);
  const auto graphs = load_graphs(o);
  auto eval = [&](const Graph& g) {
    return which == Invariant::W ? weighted_chromatic_subset(g, o.order, census_options(o))
                                 : abel(g, o.order);
  };
  if (!o.graph6.empty()) {
    const TruncSeries s = eval(graphs.front());
    if (o.format == "json") {
      out << to_json(s) << '\n';
    } else {
      out << to_string(s) << '\n';
    }
    return kOk;
  }
  if (o.format == "json") {
    json rows = json::array();
    for (const Graph& g : graphs) {
      rows.push_back({{"graph6", emit_graph6(g)}, {"series", json::parse(to_json(eval(g)))}});
    }
    out << rows.dump(2) << '\n';
  } else {
    for (const Graph& g : graphs) out << emit_graph6(g) << ": " << to_string(eval(g)) << '\n';
  }
  return kOk;
}

TruncSeries assembled(const Options& o, Invariant which, bool connected, bool rescaled) {
  const CensusOptions opts = census_options(o);
  const TruncSeries full = full_series(which, o.order, opts);
  TruncSeries s = connected ? connected_part(full) : full;
  if (rescaled) s = substitute(s, make_plan(constants_from_series(which, full, o.order)));
  return s;
}

bool connected_kind(const Options& o) {
  if (o.kind == "connected") return true;
  if (o.kind == "full") return false;
  throw UsageError("--kind must be 'full' or 'connected'");
}

int cmd_series(const Options& o, std::ostream& out, std::ostream& err) {
  require_text(o, {"text", "json"});
  check_order(o.order, o, true, err);
  print_series(out, assembled(o, parse_invariant(o.which), connected_kind(o), o.rescaled),
               o.format);
  return kOk;
}

int cmd_constants(const Options& o, std::ostream& out, std::ostream& err) {
  require_text(o, {"text", "csv", "json"});
  const int max_n = o.max_n == 0 ? 5 : o.max_n;
  check_order(max_n, o, true, err);
  const ConstantsTable table = rescale_constants(parse_invariant(o.which), max_n, census_options(o));
  const RescalePlan plan = make_plan(table);
  if (o.format == "json") {
    json rows = json::array();
    for (int n = 1; n <= max_n; ++n) {
      rows.push_back({{"n", n}, {"i_n", to_string(table.at(n))},
                      {"lambda_n", to_string(plan.factors.at(n))}});
    }
    out << rows.dump(2) << '\n';
    return kOk;
  }
  out << "n,i_n,lambda_n\n";
  for (int n = 1; n <= max_n; ++n) {
    out << n << ',' << to_string(table.at(n)) << ',' << to_string(plan.factors.at(n)) << '\n';
  }
  return kOk;
}

int cmd_rescale(const Options& o, std::ostream& out, std::ostream& err) {
  require_text(o, {"text", "json"});
  const Invariant which = parse_invariant(o.which);
  if (o.show_plan) {
    check_order(o.order, o, true, err);
    const RescalePlan plan = make_plan(rescale_constants(which, o.order, census_options(o)));
    for (const auto& [n, factor] : plan.factors) {
      out << 'q' << n << " = " << to_string(factor) << " p" << n << '\n';
    }
    return kOk;
  }
  if (o.input.empty()) {
    check_order(o.order, o, true, err);
    print_series(out, assembled(o, which, connected_kind(o), true), o.format);
    return kOk;
  }
  const TruncSeries source = series_from_json(read_file(o.input), o.order, Variable::q);
  if (source.variable() != Variable::q) throw DomainError("rescale expects a series in q-variables");
  check_order(source.order(), o, true, err);
  const RescalePlan plan = make_plan(rescale_constants(which, source.order(), census_options(o)));
  print_series(out, substitute(source, plan), o.format);
  return kOk;
}

int cmd_kp_check(const Options& o, std::ostream& out, std::ostream& err) {
  require_text(o, {"text", "json"});
  TruncSeries f;
  std::string label;
  if (!o.input.empty()) {
    const TruncSeries tau = series_from_json(read_file(o.input), o.order, Variable::p);
    check_order(tau.order(), o, false, err);
    const Rational c0 = tau.constant_term();
    if (c0 == 1) {
      f = log(tau);
    } else if (c0 == 0) {
      f = tau;
    } else {
      throw DomainError("input must be a tau candidate (constant term 1) or a log (constant term 0)");
    }
    label = o.input;
  } else if (o.series == "S") {
    check_order(o.order, o, false, err);
    f = log(target_series(o.order));
    label = "S";
  } else {
    check_order(o.order, o, true, err);
    f = rescaled_connected_series(parse_invariant(o.series), o.order, census_options(o));
    label = o.series;
  }
  const KpResidual kp1 = kp1_residual(f);
  const KpResidual kp2 = kp2_residual(f);
  if (o.format == "json") {
    auto entry = [](const KpResidual& r) {
      return json{{"reliable_weight", r.reliable_weight},
                  {"vanishes", r.vanishes()},
                  {"residual", json::parse(to_json(r.residual))}};
    };
    out << json{{"series", label}, {"order", f.order()}, {"kp1", entry(kp1)}, {"kp2", entry(kp2)}}
               .dump(2)
        << '\n';
  } else {
    out << "series " << label << ", order " << f.order() << '\n';
    for (auto [name, r] : {std::pair{"KP1", &kp1}, std::pair{"KP2", &kp2}}) {
      out << name << ": ";
      if (r->vanishes()) {
        out << "0 through weight " << r->reliable_weight << '\n';
      } else {
        out << "nonzero through weight " << r->reliable_weight << ": " << to_string(r->residual)
            << '\n';
      }
    }
  }
  return kp1.vanishes() && kp2.vanishes() ? kOk : kResidualNonzero;
}

int cmd_tables(const Options& o, std::ostream& out, std::ostream&) {
  require_text(o, {"text", "csv", "json"});
  const int max_n = o.max_n == 0 ? 4 : o.max_n;
  if (max_n < 1) throw UsageError("--max-n must be at least 1");
  if (max_n > kMaxIsoClassOrder) {
    throw SizeError("tables are limited to " + std::to_string(kMaxIsoClassOrder) + " vertices");
  }
  const Invariant which = parse_invariant(o.which);
  struct Row {
    int n;
    int edges;
    std::uint64_t aut;
    std::string g6;
    TruncSeries poly;
  };
  std::vector<Row> rows;
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& g : canonical_graphs(n)) {
      if (!is_connected(g)) continue;
      rows.push_back({n, g.edge_count(), aut_order(g), emit_graph6(g),
                      evaluate_invariant(which, g, max_n)});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.n, a.edges, a.aut, a.g6) < std::tie(b.n, b.edges, b.aut, b.g6);
  });
  if (o.format == "json") {
    json arr = json::array();
    for (const Row& r : rows) {
      arr.push_back({{"graph6", r.g6},
                     {"vertices", r.n},
                     {"edges", r.edges},
                     {"aut", r.aut},
                     {"polynomial", to_string(r.poly)}});
    }
    out << arr.dump(2) << '\n';
    return kOk;
  }
  const char sep = o.format == "csv" ? ',' : '\t';
  out << "graph6" << sep << "vertices" << sep << "edges" << sep << "aut" << sep << o.which << '\n';
  for (const Row& r : rows) {
    out << r.g6 << sep << r.n << sep << r.edges << sep << r.aut << sep << to_string(r.poly) << '\n';
  }
  return kOk;
}

int cmd_hopf(const Options& o, std::ostream& out, std::ostream&) {
  require_text(o, {"text"});
  if (o.graph6.empty()) throw UsageError("hopf needs --graph6");
  const Graph g = parse_graph6(o.graph6);
  if (o.op == "coproduct") {
    out << to_string(coproduct(g)) << '\n';
  } else if (o.op == "primitive") {
    out << to_string(primitive_projection(g)) << '\n';
  } else if (o.op == "expand") {
    out << to_string(expand_in_primitives(g)) << '\n';
  } else {
    throw UsageError("--op must be coproduct, primitive or expand");
  }
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Graph invariants, their generating functions and KP checks", "kpgraph"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text, json or csv");
  };
  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--order", o.order, "truncation order (1..8, default 7)");
    sub->add_flag("--allow-order-8", o.allow_order_8, "permit order 8");
  };
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", o.jobs, "worker threads for edge-subset sums")
        ->check(CLI::PositiveNumber);
    sub->add_option("--isa", o.isa, "census kernel: auto, scalar or avx2")
        ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
  };
  auto add_which = [&](CLI::App* sub) {
    sub->add_option("--which", o.which, "invariant: W or A")->check(CLI::IsMember({"W", "A"}));
  };

  CLI::App* invariant = app.add_subcommand("invariant", "W or A of one graph or a graph6 file");
  add_which(invariant);
  add_order(invariant);
  add_format(invariant);
  add_jobs(invariant);
  invariant->add_option("--graph6", o.graph6, "graph in graph6");
  invariant->add_option("--input", o.input, "file with one graph6 per line");

  CLI::App* series = app.add_subcommand("series", "generating function over all graphs");
  add_which(series);
  add_order(series);
  add_format(series);
  add_jobs(series);
  series->add_option("--kind", o.kind, "full or connected (default)");
  series->add_flag("--rescaled", o.rescaled, "apply the rescaling plan");

  CLI::App* constants = app.add_subcommand("constants", "rescaling constants as CSV");
  add_which(constants);
  add_format(constants);
  add_jobs(constants);
  constants->add_option("--max-n", o.max_n, "largest n (default 5)");
  constants->add_flag("--allow-order-8", o.allow_order_8, "permit n = 8");

  CLI::App* rescale = app.add_subcommand("rescale", "substitute q_n -> lambda_n p_n");
  add_which(rescale);
  add_order(rescale);
  add_format(rescale);
  add_jobs(rescale);
  rescale->add_option("--kind", o.kind, "full or connected (default)");
  rescale->add_option("--input", o.input, "series JSON in q-variables");
  rescale->add_flag("--show-plan", o.show_plan, "print the substitution only");

  CLI::App* kp = app.add_subcommand("kp-check", "KP1/KP2 residuals");
  add_order(kp);
  add_format(kp);
  add_jobs(kp);
  kp->add_option("--series", o.series, "built-in series: W, A or S")
      ->check(CLI::IsMember({"W", "A", "S"}));
  kp->add_option("--input", o.input, "series JSON in p-variables");

  CLI::App* tables = app.add_subcommand("tables", "connected graphs with |Aut| and W or A");
  add_which(tables);
  add_format(tables);
  tables->add_option("--max-n", o.max_n, "largest vertex count (default 4, at most 5)");

  CLI::App* hopf = app.add_subcommand("hopf", "coproduct, primitive projection, expansion");
  add_format(hopf);
  hopf->add_option("--op", o.op, "coproduct, primitive or expand")->required();
  hopf->add_option("--graph6", o.graph6, "graph in graph6")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (invariant->parsed()) return cmd_invariant(o, out, err);
    if (series->parsed()) return cmd_series(o, out, err);
    if (constants->parsed()) return cmd_constants(o, out, err);
    if (rescale->parsed()) return cmd_rescale(o, out, err);
    if (kp->parsed()) return cmd_kp_check(o, out, err);
    if (tables->parsed()) return cmd_tables(o, out, err);
    if (hopf->parsed()) return cmd_hopf(o, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeError& e) {
    err << "size limit: " << e.what() << '\n';
    return kSizeCap;
  } catch (const OutOfTruncationError& e) {
    err << "size limit: " << e.what() << '\n';
    return kSizeCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace kpg::cli
