#include "qspec/cotree.hpp"
#include "qspec/enumerate.hpp"
#include "qspec/families.hpp"
#include "qspec/graph.hpp"
#include "qspec/harness.hpp"
#include "qspec/oracle.hpp"
#include "qspec/recognition.hpp"
#include "qspec/spectra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

using namespace qspec;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitContradiction = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::optional<double> tol_group;
  std::optional<double> tol_main;
  std::size_t sweep_cap = SweepOptions{}.max_points;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A JSON argument is taken inline when it starts with '{', else as a path.
nlohmann::json json_arg(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  const std::string text = first != std::string::npos && arg[first] == '{' ? arg : slurp(arg);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

Config load_config(const std::string& path) {
  Config cfg;
  if (path.empty()) return cfg;
  const auto j = json_arg(path);
  if (!j.is_object()) throw UsageError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "tol_group" && value.is_number())
      cfg.tol_group = value.get<double>();
    else if (key == "tol_main" && value.is_number())
      cfg.tol_main = value.get<double>();
    else if (key == "sweep_cap" && value.is_number_unsigned())
      cfg.sweep_cap = value.get<std::size_t>();
    else
      throw UsageError("config: bad or unknown key '" + key + "'");
  }
  return cfg;
}

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  return file;
}

struct Input {
  std::string cotree, edges, family;
};

// Returns the graph and, where one is known, its cotree.
std::pair<Graph, std::optional<Cotree>> load_input(const Input& in) {
  if (!in.cotree.empty()) {
    Cotree t = parse_cotree(in.cotree);
    return {to_graph(t), t};
  }
  if (!in.edges.empty()) {
    std::ifstream f(in.edges);
    if (!f) throw UsageError("cannot open '" + in.edges + "'");
    return {read_edge_list(f), std::nullopt};
  }
  if (!in.family.empty()) {
    auto b = build(family_from_json(json_arg(in.family)));
    return {std::move(b.graph), std::move(b.tree)};
  }
  throw UsageError("one input option is required");
}

void print_spectrum_table(const QSpectrumReport& r) {
  std::printf("n = %d, main eigenvalues = %d\n", r.n, r.main_count);
  std::printf("%-24s %5s %5s %24s\n", "value", "mult", "main", "projection");
  for (const auto& g : r.groups)
    std::printf("%-24s %5d %5s %24s\n", format_double(g.value).c_str(), g.multiplicity, g.is_main ? "yes" : "no",
                format_double(g.projection_norm).c_str());
}

void print_classification(const ClassificationReport& r) {
  auto line = [](const char* name, bool v) { std::printf("%-18s %s\n", name, v ? "yes" : "no"); };
  line("cograph", r.is_cograph);
  line("chordal", r.is_chordal);
  line("quasi-threshold", r.is_quasi_threshold);
  line("threshold", r.is_threshold);
  line("bipartite", r.is_bipartite);
  line("regular", r.is_regular);
  line("complete", r.is_complete);
  line("connected", r.is_connected);
  if (r.witness) {
    static constexpr const char* names[] = {"P4", "C4", "2K2"};
    const auto& w = *r.witness;
    std::printf("witness            %s on %d %d %d %d\n", names[static_cast<int>(*r.witness_pattern)], w[0], w[1],
                w[2], w[3]);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signless-Laplacian spectra and main eigenvalues of cographs"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config: tol_group, tol_main, sweep_cap");

  Input in;
  bool as_json = false, as_table = false;
  std::optional<double> tol_group, tol_main;
  auto* spectrum = app.add_subcommand("spectrum", "Grouped Q-spectrum with main flags");
  {
    auto* g = spectrum->add_option_group("input");
    g->add_option("--cotree", in.cotree, "cotree expression");
    g->add_option("--edges", in.edges, "edge-list file");
    g->add_option("--family", in.family, "family JSON, inline or file");
    g->require_option(1);
    auto* j = spectrum->add_flag("--json", as_json);
    auto* t = spectrum->add_flag("--table", as_table);
    j->excludes(t);
    spectrum->add_option("--tol-group", tol_group, "eigenvalue grouping tolerance");
    spectrum->add_option("--tol-main", tol_main, "projection tolerance for main detection");
  }

  auto* classify_cmd = app.add_subcommand("classify", "Structural classification");
  {
    auto* g = classify_cmd->add_option_group("input");
    g->add_option("--cotree", in.cotree, "cotree expression");
    g->add_option("--edges", in.edges, "edge-list file");
    g->require_option(1);
    classify_cmd->add_flag("--json", as_json);
  }

  auto* condensed_cmd = app.add_subcommand("condensed", "Condensed matrix over the cotree bags");
  condensed_cmd->add_option("--cotree", in.cotree, "cotree expression")->required();
  condensed_cmd->add_flag("--json", as_json);

  std::string emit = "cotree";
  auto* build_cmd = app.add_subcommand("build", "Materialize a named family");
  build_cmd->add_option("--family", in.family, "family JSON, inline or file")->required();
  build_cmd->add_option("--emit", emit, "output form")->check(CLI::IsMember({"cotree", "edges"}));

  std::string theorem, grid_path, report_path;
  int max_n = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Check one characterization over its grid");
  verify_cmd->add_option("--theorem", theorem, "theorem id")->required()->check(CLI::IsMember(theorem_ids()));
  verify_cmd->add_option("--max-n", max_n, "largest enumerated order")->check(CLI::Range(1, kMaxEnumerationOrder));
  verify_cmd->add_option("--grid", grid_path, "grid JSON file");
  verify_cmd->add_option("--report", report_path, "CSV report path");

  std::string out_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate a family over parameter ranges");
  sweep_cmd->add_option("--family", in.family, "family JSON with ranged params, inline or file")->required();
  sweep_cmd->add_option("--out", out_path, "CSV output path");

  int enum_n = 0;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every cograph on n vertices");
  enumerate_cmd->add_option("--n", enum_n, "order")->required()->check(CLI::Range(1, kMaxEnumerationOrder));
  enumerate_cmd->add_option("--out", out_path, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    const Config cfg = load_config(config_path);
    if (spectrum->parsed()) {
      const auto [g, tree] = load_input(in);
      const Tolerances tol{tol_group ? tol_group : cfg.tol_group, tol_main ? tol_main : cfg.tol_main};
      const auto report = q_spectrum(g, tol);
      if (as_json)
        std::cout << to_json(report) << '\n';
      else
        print_spectrum_table(report);
    } else if (classify_cmd->parsed()) {
      const auto report = classify(load_input(in).first);
      if (as_json)
        std::cout << to_json(report) << '\n';
      else
        print_classification(report);
    } else if (condensed_cmd->parsed()) {
      const auto c = condensed(bags(parse_cotree(in.cotree)));
      const auto eigs = main_eigs_condensed(c, {cfg.tol_group, cfg.tol_main});
      if (as_json) {
        auto j = nlohmann::json::parse(to_json(c));
        j["eigenvalues"] = nlohmann::json::array();
        for (const auto& e : eigs) j["eigenvalues"].push_back({{"value", e.value}, {"main", e.is_main}});
        std::cout << j.dump() << '\n';
      } else {
        std::printf("order %d\n", c.order());
        for (int i = 0; i < c.order(); ++i) {
          for (int k = 0; k < c.order(); ++k)
            std::printf("%s%s", k ? " " : "", format_double(c.entries(i, k)).c_str());
          std::printf("\n");
        }
        for (const auto& e : eigs) std::printf("%s%s\n", format_double(e.value).c_str(), e.is_main ? " main" : "");
      }
    } else if (build_cmd->parsed()) {
      const auto b = build(family_from_json(json_arg(in.family)));
      if (emit == "edges")
        write_edge_list(std::cout, b.graph);
      else
        std::cout << canonical_string(b.tree) << '\n';
    } else if (verify_cmd->parsed()) {
      GridConfig grid = grid_path.empty() ? GridConfig{} : grid_from_json(json_arg(grid_path));
      if (max_n > 0) grid.max_n = max_n;
      const auto cases = verify(theorem, grid);
      std::size_t failed = 0;
      for (const auto& c : cases)
        if (!c.pass) {
          ++failed;
          std::cout << "FAIL " << c.case_id << " predicted " << c.predicted << " computed " << c.computed << '\n';
        }
      std::cout << theorem << ": " << cases.size() << " cases, " << failed << " failed\n";
      if (!report_path.empty()) {
        std::ofstream f;
        write_report_csv(open_out(report_path, f), cases);
      }
      return failed ? kExitFail : 0;
    } else if (sweep_cmd->parsed()) {
      std::ofstream f;
      sweep(json_arg(in.family), open_out(out_path, f), {cfg.sweep_cap, true});
    } else if (enumerate_cmd->parsed()) {
      std::ofstream f;
      auto& out = open_out(out_path, f);
      for (const auto& key : enumerate_cographs(enum_n).keys) out << key << '\n';
    }
  } catch (const InternalContradiction& e) {
    std::cerr << "internal contradiction: " << e.what() << '\n';
    return kExitContradiction;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
