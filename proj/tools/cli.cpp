#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "signed_spectra/catalog.hpp"
#include "signed_spectra/error.hpp"
#include "signed_spectra/extremal.hpp"
#include "signed_spectra/graph_io.hpp"
#include "signed_spectra/spectra.hpp"
#include "signed_spectra/switching.hpp"

namespace signed_spectra::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string format = "text";
  int r = 0;
  int s = 0;
  int i = 0;
  int j = 0;
  int h = 0;
  int k = 0;
  int m = 0;
  int n = 0;
  std::string name;
  std::string theorem;
  std::string mode;
  bool extended = false;
  int count = 0;
  std::uint64_t seed = 1;
  std::string output;
};

void emit(const std::string& text, const Options& opt, std::ostream& out) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output);
  if (!file) throw Error(ErrorKind::BadInput, fmt::format("cannot write '{}'", opt.output));
  file << text;
}

// Complete-bipartite view of a connected graph through its 2-colouring, X
// taken as the smaller colour class.
std::optional<SignedBipartiteGraph> complete_bipartite_view(const GraphFile& file) {
  if (file.parts) {
    const auto g = file.bipartite();
    if (g.is_complete_host()) return g;
    return std::nullopt;
  }
  const auto& g = file.graph;
  if (!is_connected(g)) return std::nullopt;
  const auto colour = two_coloring(g);
  if (!colour || !is_complete_bipartite(g)) return std::nullopt;
  std::vector<int> x;
  std::vector<int> y;
  for (int v = 0; v < g.order(); ++v) ((*colour)[v] == 0 ? x : y).push_back(v);
  if (x.size() > y.size()) std::swap(x, y);
  std::vector<Sign> signs;
  for (const int u : x) {
    for (const int w : y) signs.push_back(g.sign(u, w));
  }
  return SignedBipartiteGraph(static_cast<int>(x.size()), static_cast<int>(y.size()), std::move(signs));
}

int cmd_analyze(const Options& opt, std::ostream& out) {
  const auto file = read_graph_file(opt.file);
  const auto summary = spectral_summary(file.graph);
  if (opt.format == "json") {
    out << summary_to_json(summary);
  } else if (opt.format == "csv") {
    out << summary_to_csv(summary);
  } else {
    out << summary_to_text(summary);
  }
  return kExitOk;
}

int cmd_balance(const Options& opt, std::ostream& out) {
  const auto file = read_graph_file(opt.file);
  out << (is_balanced(file.graph) ? "BALANCED" : "UNBALANCED") << "\n";
  if (const auto complete = complete_bipartite_view(file)) {
    out << "structural: " << (balance_structural(*complete) ? "BALANCED" : "UNBALANCED") << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const ProgressSink progress = [&err](const std::string& line) { err << line << "\n" << std::flush; };
  const auto need = [&](std::initializer_list<std::pair<const char*, int>> values) {
    for (const auto& [flag, value] : values) {
      if (value <= 0) throw UsageError(fmt::format("verify {} needs --{}", opt.theorem, flag));
    }
  };
  ExtremalReport report;
  const std::string& id = opt.theorem;
  if (id == "thm-3.1") {
    need({{"r", opt.r}, {"s", opt.s}});
    report = verify_balance_characterization(opt.r, opt.s);
  } else if (id == "prop-4.1") {
    report = run_shift_property(opt.count > 0 ? opt.count : 1000, opt.seed);
  } else if (id == "lem-4.4") {
    need({{"r", opt.r}, {"s", opt.s}, {"k", opt.k}});
    report = verify_kds(opt.r, opt.s, opt.k);
  } else if (id == "thm-4.5") {
    need({{"r", opt.r}, {"s", opt.s}, {"m", opt.m}});
    report = verify_tree_extremal(opt.r, opt.s, opt.m, progress);
  } else if (id == "thm-5.2") {
    need({{"r", opt.r}, {"s", opt.s}});
    report = verify_complete_bipartite_max(opt.r, opt.s, progress);
  } else if (id == "lem-5.3") {
    report = run_completion_property(opt.count > 0 ? opt.count : 200, opt.seed);
  } else if (id == "lem-5.4") {
    if ((opt.r > 0) != (opt.s > 0)) throw UsageError("verify lem-5.4 takes both --r and --s or neither");
    report = opt.r > 0 ? verify_minus_edge(0, std::make_pair(opt.r, opt.s)) : verify_minus_edge(8);
  } else if (id == "thm-5.6" || id == "thm-6.1") {
    need({{"n", opt.n}});
    if (opt.n == 8 && !opt.extended) throw UsageError("n = 8 is an extended run; pass --extended");
    std::string mode = opt.mode.empty() ? (id == "thm-5.6" ? "max" : "min") : opt.mode;
    report = enumerate_bipartite_extrema(opt.n, mode == "max" ? ExtremeMode::Max : ExtremeMode::Min, progress);
  } else {
    throw UsageError(fmt::format("unknown theorem id '{}'", id));
  }
  out << (opt.format == "json" ? report_to_json(report) : report_to_text(report));
  return report.verdict == Verdict::Counterexample ? kExitCounterexample : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral workbench for signed bipartite graphs", "signed-spectra"};
  app.require_subcommand(1);
  Options opt;
  int exit_code = kExitOk;
  std::function<int()> action;

  auto* analyze = app.add_subcommand("analyze", "Spectrum of a signed-graph v1 file");
  analyze->add_option("file", opt.file, "Input graph")->required();
  analyze->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  analyze->callback([&] { action = [&] { return cmd_analyze(opt, out); }; });

  auto* balance = app.add_subcommand("balance", "Balance test, plus the structural test on complete hosts");
  balance->add_option("file", opt.file, "Input graph")->required();
  balance->callback([&] { action = [&] { return cmd_balance(opt, out); }; });

  auto* gen = app.add_subcommand("gen", "Write a named graph in signed-graph v1 format");
  gen->require_subcommand(1);
  gen->add_option("-o,--output", opt.output, "Write to a file instead of stdout");
  auto* gen_gstar = gen->add_subcommand("gstar", "K_{r,s} with the single negative edge v1w1");
  gen_gstar->add_option("--r", opt.r)->required();
  gen_gstar->add_option("--s", opt.s)->required();
  gen_gstar->callback([&] { action = [&] { emit(to_text(gstar(opt.r, opt.s)), opt, out); return kExitOk; }; });
  auto* gen_dstar = gen->add_subcommand("dstar", "K_{r,s} with the double star D_{i,j} negative");
  gen_dstar->add_option("--r", opt.r)->required();
  gen_dstar->add_option("--s", opt.s)->required();
  gen_dstar->add_option("--i", opt.i)->required();
  gen_dstar->add_option("--j", opt.j)->required();
  gen_dstar->callback([&] {
    action = [&] { emit(to_text(double_star(opt.r, opt.s, opt.i, opt.j)), opt, out); return kExitOk; };
  });
  auto* gen_catalog = gen->add_subcommand("catalog", "Underlying graph of a minimum-radius catalogue member");
  gen_catalog->set_help_flag("--help", "Print this help message and exit");
  gen_catalog->add_option("--name", opt.name)->required()->check(CLI::IsMember({"Q", "Cycle", "B6", "B7", "U1"}));
  gen_catalog->add_option("--h", opt.h);
  gen_catalog->add_option("--k", opt.k);
  gen_catalog->add_option("--n", opt.n);
  // -o may follow the generator name.
  for (auto* sub : {gen_gstar, gen_dstar, gen_catalog}) sub->fallthrough();
  gen_catalog->callback([&] {
    action = [&] {
      const auto g = catalog_underlying(parse_catalog_name(opt.name), {opt.h, opt.k, opt.n});
      emit(to_text(g), opt, out);
      return kExitOk;
    };
  });

  auto* bound = app.add_subcommand("bound", "Closed-form bounds");
  bound->require_subcommand(1);
  auto* bound_gstar = bound->add_subcommand("gstar", "Largest rho over unbalanced signatures of K_{r,s}");
  bound_gstar->add_option("--r", opt.r)->required();
  bound_gstar->add_option("--s", opt.s)->required();
  bound_gstar->callback([&] {
    action = [&] { out << format_real(gstar_bound(opt.r, opt.s)) << "\n"; return kExitOk; };
  });

  auto* verify = app.add_subcommand("verify", "Exhaustive or randomized check of one result");
  verify->add_option("theorem", opt.theorem,
                     "thm-3.1, prop-4.1, lem-4.4, thm-4.5, thm-5.2, lem-5.3, lem-5.4, thm-5.6, thm-6.1")
      ->required();
  verify->add_option("--r", opt.r);
  verify->add_option("--s", opt.s);
  verify->add_option("--m", opt.m);
  verify->add_option("--k", opt.k);
  verify->add_option("--n", opt.n);
  verify->add_option("--mode", opt.mode)->check(CLI::IsMember({"max", "min"}));
  verify->add_flag("--extended", opt.extended, "Allow the n = 8 enumeration");
  verify->add_option("--format", opt.format)->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--count", opt.count, "Instances for randomized checks");
  verify->add_option("--seed", opt.seed, "Seed for randomized checks");
  verify->callback([&] { action = [&] { return cmd_verify(opt, out, err); }; });

  auto* export_cmd = app.add_subcommand("export", "Convert a graph file");
  export_cmd->require_subcommand(1);
  auto* export_dot = export_cmd->add_subcommand("dot", "Graphviz output, negative edges dashed");
  export_dot->add_option("file", opt.file, "Input graph")->required();
  export_dot->callback([&] { action = [&] { out << to_dot(read_graph_file(opt.file)); return kExitOk; }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    exit_code = action ? action() : kExitInput;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return exit_code;
}

}  // namespace signed_spectra::cli
