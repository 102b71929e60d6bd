#include "hlgap/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hlgap/table2.hpp"

namespace hlgap {

namespace {

struct Options {
  std::string graph;
  std::string a;
  std::string b;
  std::string h;
  std::string bridge_set;
  int max_degree = -1;
  bool allow_empty = false;
  bool json = false;
  std::string dot;
  double tol = 1e-9;
  std::string audit;
  unsigned threads = 0;
};

std::vector<Index> parse_vertex_list(const std::string& text) {
  std::vector<Index> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || value < 1)
      throw Error(ErrorCode::ParseError,
                  "--bridge-set expects 1-based integers like 1,2");
    out.push_back(static_cast<Index>(value - 1));
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "--bridge-set is empty");
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  f << content;
}

Json vector_json(const Vectord& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

BridgeMatrix load_bridge(const Options& o, const WeightedGraph& ga,
                         const WeightedGraph& gb) {
  const auto file = load_bridge_file(o.h);
  const auto va = recover_voltage(ga, o.tol);
  const auto vb = recover_voltage(gb, o.tol);
  return BridgeMatrix::from_voltage(bridge_pattern(file, ga.size(), gb.size()),
                                    va.d, vb.d, file.bridge_set);
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.graph);
  const auto values = spectrum(g);
  const auto hl = homo_lumo(g);
  if (!o.dot.empty()) write_text_file(o.dot, to_dot(g));
  if (o.json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "spectrum";
    j["n"] = g.size();
    j["spectrum"] = vector_json(values);
    j["lambda_homo"] = hl.lambda_homo;
    j["lambda_lumo"] = hl.lambda_lumo;
    j["closed_shell"] = hl.closed_shell;
    out << j.dump(2) << "\n";
  } else {
    for (Index k = 0; k < values.size(); ++k) out << fixed6(values(k)) << "\n";
  }
  return kExitOk;
}

int cmd_gap(const Options& o, std::ostream& out) {
  const auto g = load_graph(o.graph);
  const auto edges = gap_edges(g);
  if (o.json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "gap";
    j["gap"] = edges.gap();
    j["gap_text"] = fixed6(edges.gap());
    j["lambda_plus"] = edges.lambda_plus;
    j["lambda_minus"] = edges.lambda_minus;
    j["certificate"] = certificate_to_json(gap_analytic(g.adjacency()));
    out << j.dump(2) << "\n";
  } else {
    out << fixed6(edges.gap()) << "\n";
  }
  return kExitOk;
}

int cmd_bridge(const Options& o, std::ostream& out) {
  const auto ga = load_graph(o.a);
  const auto gb = load_graph(o.b);
  const auto bm = load_bridge(o, ga, gb);
  const auto bridged = build_bridged(ga, gb, bm);
  const double gap = spectral_gap(bridged.graph);
  if (!o.dot.empty()) write_text_file(o.dot, to_dot(bridged.graph));
  if (o.json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "bridge";
    j["gap"] = gap;
    j["gap_text"] = fixed6(gap);
    j["bridging"] = describe_bridge(bm);
    j["graph"] = graph_to_json(bridged.graph);
    out << j.dump(2) << "\n";
  } else {
    out << "vertices " << bridged.graph.size() << "\n"
        << "gap " << fixed6(gap) << "\n"
        << "bridging " << describe_bridge(bm) << "\n";
  }
  return kExitOk;
}

int cmd_optimize(const Options& o, std::ostream& out) {
  auto spec = make_search_spec(
      load_graph(o.a), load_graph(o.b), parse_vertex_list(o.bridge_set),
      o.max_degree >= 0 ? std::optional<int>(o.max_degree) : std::nullopt,
      !o.allow_empty, o.tol);
  SearchOptions search;
  search.threads = o.threads;
  std::ofstream audit;
  if (!o.audit.empty()) {
    audit.open(o.audit, std::ios::binary);
    if (!audit) throw Error(ErrorCode::IoError, "cannot write '" + o.audit + "'");
    search.audit = &audit;
  }
  const auto result = optimize(spec, search);
  if (!o.dot.empty()) {
    write_text_file(o.dot,
                    to_dot(build_bridged(spec.ga, spec.gb, result.best_bridge).graph));
  }
  if (o.json) {
    Json j;
    j["schema"] = 1;
    j["command"] = "optimize";
    const Json body = search_result_to_json(spec, result);
    for (const auto& [key, value] : body.items())
      if (key != "schema") j[key] = value;
    out << j.dump(2) << "\n";
  } else {
    out << "best_gap " << fixed6(result.best_gap) << "\n"
        << "bridging " << result.bridging_description << "\n"
        << "optima " << result.optima_count << "\n"
        << "evaluated " << result.candidates_evaluated << "\n"
        << "pruned " << result.candidates_pruned << "\n";
  }
  return kExitOk;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const auto ga = load_graph(o.a);
  const auto gb = load_graph(o.b);
  const auto bm = load_bridge(o, ga, gb);
  const auto bridged = build_bridged(ga, gb, bm);
  const auto optimum = gap_analytic(bridged.c());
  const auto cert = certify_bridged_lmi(ga, gb, bm, optimum.mu, optimum.eta);
  const auto va = recover_voltage(ga, o.tol);
  const auto vb = recover_voltage(gb, o.tol);
  const bool tight = certify_relaxation_tightness(bm.htilde(), va.d, vb.d);
  if (o.json) {
    Json j = certificate_to_json(cert);
    j["schema"] = 1;
    j["command"] = "certify";
    j["relaxation_tight"] = tight;
    out << j.dump(2) << "\n";
  } else {
    out << "mu " << fixed6(cert.mu) << "\n"
        << "eta " << fixed6(cert.eta) << "\n"
        << "gap " << fixed6(cert.gap) << "\n"
        << "margins " << cert.margins[0] << " " << cert.margins[1] << "\n"
        << "relaxation_tight " << (tight ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_table2(const Options& o, std::ostream& out) {
  SearchOptions search;
  search.threads = o.threads;
  const auto rows = run_table2(search);
  if (o.json)
    out << table2_to_json(rows).dump(2) << "\n";
  else
    out << table2_to_text(rows);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"HOMO-LUMO spectral gaps and optimal bridging of voltage graphs",
               "hlgap"};
  app.require_subcommand(1);
  // --h is the bridge file, so help is long-form only; subcommands inherit this.
  app.set_help_flag("--help", "Print this help message and exit");
  Options o;

  auto add_json = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Emit JSON");
  };
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", o.tol, "Voltage-recovery and bridgeability tolerance")
        ->capture_default_str();
  };
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--a", o.a, "G_A: PATH or builtin:NAME")->required();
    sub->add_option("--b", o.b, "G_B: PATH or builtin:NAME")->required();
  };

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Adjacency spectrum, descending");
  spectrum_cmd->add_option("-g,--graph", o.graph, "PATH or builtin:NAME")->required();
  spectrum_cmd->add_option("--dot", o.dot, "Write the graph as DOT");
  add_json(spectrum_cmd);

  auto* gap_cmd = app.add_subcommand("gap", "HOMO-LUMO spectral gap");
  gap_cmd->add_option("-g,--graph", o.graph, "PATH or builtin:NAME")->required();
  add_json(gap_cmd);

  auto* bridge_cmd = app.add_subcommand("bridge", "Build a bridged graph");
  add_pair(bridge_cmd);
  bridge_cmd->add_option("--h", o.h, "Bridge JSON")->required();
  bridge_cmd->add_option("--dot", o.dot, "Write the bridged graph as DOT");
  add_json(bridge_cmd);
  add_tol(bridge_cmd);

  auto* optimize_cmd = app.add_subcommand("optimize", "Find the gap-maximizing bridge");
  add_pair(optimize_cmd);
  optimize_cmd->add_option("--bridge-set", o.bridge_set, "1-based G_B vertices, e.g. 1,2")
      ->required();
  optimize_cmd->add_option("--max-degree", o.max_degree, "Cap on binary vertex degree");
  optimize_cmd->add_flag("--allow-empty-bridge", o.allow_empty,
                         "Admit the empty bridge");
  optimize_cmd->add_option("--dot", o.dot, "Write the optimal bridged graph as DOT");
  optimize_cmd->add_option("--audit", o.audit, "Write per-candidate CSV");
  optimize_cmd->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  add_json(optimize_cmd);
  add_tol(optimize_cmd);

  auto* certify_cmd = app.add_subcommand("certify", "Certify the gap of a bridged graph");
  add_pair(certify_cmd);
  certify_cmd->add_option("--h", o.h, "Bridge JSON")->required();
  add_json(certify_cmd);
  add_tol(certify_cmd);

  auto* table_cmd = app.add_subcommand("table2", "Reproduce the 16 benchmark bridgings");
  table_cmd->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  add_json(table_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitIoError;
  }

  try {
    if (spectrum_cmd->parsed()) return cmd_spectrum(o, out);
    if (gap_cmd->parsed()) return cmd_gap(o, out);
    if (bridge_cmd->parsed()) return cmd_bridge(o, out);
    if (optimize_cmd->parsed()) return cmd_optimize(o, out);
    if (certify_cmd->parsed()) return cmd_certify(o, out);
    return cmd_table2(o, out);
  } catch (const Error& e) {
    err << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError || e.code() == ErrorCode::IoError
               ? kExitIoError
               : kExitDomainError;
  }
}

}  // namespace hlgap
