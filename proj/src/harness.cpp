#include "qspec/harness.hpp"

#include "qspec/cotree.hpp"
#include "qspec/enumerate.hpp"
#include "qspec/oracle.hpp"
#include "qspec/recognition.hpp"
#include "qspec/spectra.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

namespace qspec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string join_values(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + format_double(v[i]);
  return s;
}

// Largest pointwise gap between two sorted value sets; infinite on a size
// mismatch.
double set_residual(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return kInf;
  double r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r = std::max(r, std::abs(a[i] - b[i]));
  return r;
}

std::string spec_label(const FamilySpec& spec) { return to_json(spec).dump(); }

// Cographs of every order 1..max_n, ascending by order then canonical key.
template <typename F>
void for_each_cograph(int max_n, F&& f) {
  for (int n = 1; n <= max_n; ++n)
    for (const auto& t : enumerate_cotrees(n)) f(t);
}

bool connected_cotree(const Cotree& t) { return t.is_leaf() || t.kind == Cotree::Kind::Join; }

int pick(int requested, int fallback) { return requested > 0 ? requested : fallback; }

std::vector<VerificationCase> verify_width_bound(const GridConfig& grid) {
  std::vector<VerificationCase> out;
  for_each_cograph(pick(grid.max_n, 9), [&](const Cotree& t) {
    const Graph g = to_graph(t);
    const auto rep = bags(t);
    const auto full = q_spectrum(g);
    std::vector<double> condensed_mains;
    for (const auto& e : main_eigs_condensed(condensed(rep)))
      if (e.is_main) condensed_mains.push_back(e.value);
    const auto full_mains = full.main_values();
    VerificationCase c;
    c.case_id = "width-bound/" + canonical_string(t);
    c.input = canonical_string(t);
    c.predicted = "k<=" + std::to_string(rep.width()) + " mains=" + join_values(condensed_mains);
    c.computed = "k=" + std::to_string(full.main_count) + " mains=" + join_values(full_mains);
    c.residual = set_residual(full_mains, condensed_mains);
    c.pass = full.main_count <= rep.width() && c.residual <= grid.tolerance;
    out.push_back(std::move(c));
  });
  return out;
}

std::vector<VerificationCase> verify_complement_invariance(const GridConfig& grid) {
  std::vector<VerificationCase> out;
  for_each_cograph(pick(grid.max_n, 9), [&](const Cotree& t) {
    const Graph g = to_graph(t);
    const int k = main_count(g);
    const int kc = main_count(complement(g));
    out.push_back({"complement-invariance/" + canonical_string(t), canonical_string(t), "k=" + std::to_string(k),
                   "k_complement=" + std::to_string(kc), k == kc, 0.0});
  });
  return out;
}

std::vector<VerificationCase> verify_zero_main_union(const GridConfig& grid) {
  std::vector<VerificationCase> out;
  for_each_cograph(pick(grid.max_n, 7), [&](const Cotree& t) {
    const Graph h = to_graph(t);
    const auto inner = q_spectrum(h).main_values();
    for (int p : grid.c_values) {
      const Graph g = disjoint_union(empty_graph(p), h);
      const auto predicted = merge_values(inner, {0.0}, grid.tolerance);
      const auto computed = q_spectrum(g).main_values();
      VerificationCase c;
      c.case_id = "zero-main-union/E" + std::to_string(p) + "+" + canonical_string(t);
      c.input = "U(E(" + std::to_string(p) + ")," + canonical_string(t) + ")";
      c.predicted = join_values(predicted);
      c.computed = join_values(computed);
      c.residual = set_residual(predicted, computed);
      c.pass = c.residual <= grid.tolerance;
      out.push_back(std::move(c));
    }
  });
  return out;
}

std::string form_label(const std::optional<TwoMainForm>& f) {
  if (!f) return "none";
  if (const auto* a = std::get_if<FormA>(&*f))
    return "FormA(c=" + std::to_string(a->c) + ",a=" + std::to_string(a->a) + ",b=" + std::to_string(a->b) + ")";
  const auto& b = std::get<FormB>(*f);
  return "FormB(c=" + std::to_string(b.c) + ",t=" + std::to_string(b.t) + ",a=" + std::to_string(b.a) + ")";
}

std::vector<VerificationCase> verify_two_main(const GridConfig& grid) {
  std::vector<VerificationCase> out;
  for_each_cograph(pick(grid.max_n, 10), [&](const Cotree& t) {
    if (!connected_cotree(t)) return;
    const Graph g = to_graph(t);
    if (!is_chordal(g)) return;
    const auto form = predict_two_main_forms(g);
    const int k = main_count(g);
    out.push_back({"two-main-characterization/" + canonical_string(t), canonical_string(t), form_label(form),
                   "k=" + std::to_string(k), (k == 2) == form.has_value(), 0.0});
    if (k < 2 || is_complete(g)) return;
    const auto d = universal_clique_decomposition(g);
    if (!bipartition(complement(d.remainder))) return;
    out.push_back({"two-main-characterization/co-bipartite/" + canonical_string(t), canonical_string(t),
                   "k=2 (complement of remainder bipartite)", "k=" + std::to_string(k), k == 2, 0.0});
  });
  return out;
}

std::vector<VerificationCase> verify_gcs_count(const GridConfig& grid) {
  std::vector<VerificationCase> out;
  for (const auto& spec : gcs_grid(grid)) {
    const auto prediction = predict_main_count(spec);
    const int k = main_count(build(spec).graph);
    out.push_back({"gcs-count/" + spec_label(spec), spec_label(spec),
                   "k=" + std::to_string(prediction.k) + " " + std::string(rule_name(prediction.rule)),
                   "k=" + std::to_string(k), k == prediction.k, 0.0});
  }
  return out;
}

std::vector<VerificationCase> verify_join_kc(const GridConfig& grid) {
  std::vector<VerificationCase> out;
  for_each_cograph(pick(grid.max_n, 8), [&](const Cotree& t) {
    const Graph g = to_graph(t);
    const int k = main_count(g);
    if (k < 2) return;
    const bool co_bipartite = bipartition(complement(g)).has_value();
    for (int c : grid.c_values) {
      const int predicted = co_bipartite ? k : k + 1;
      const int computed = main_count(join(complete_graph(c), g));
      out.push_back({"join-kc/K" + std::to_string(c) + "+" + canonical_string(t),
                     "J(K(" + std::to_string(c) + ")," + canonical_string(t) + ")",
                     "k=" + std::to_string(predicted) + (co_bipartite ? " complement bipartite" : " complement non-bipartite"),
                     "k=" + std::to_string(computed), predicted == computed, 0.0});
    }
  });
  return out;
}

// Compares grouped spectra entry by entry: value, multiplicity, main flag.
VerificationCase compare_spectrum(const std::string& id, const std::vector<SpectrumEntry>& expected,
                                  const QSpectrumReport& got, double tol) {
  auto render_expected = [&] {
    std::string s;
    for (const auto& e : expected)
      s += format_double(e.value) + "^" + std::to_string(e.multiplicity) + (e.is_main ? "*" : "") + " ";
    return s;
  };
  std::string computed;
  for (const auto& g : got.groups)
    computed += format_double(g.value) + "^" + std::to_string(g.multiplicity) + (g.is_main ? "*" : "") + " ";
  VerificationCase c{id, id, render_expected(), computed, true, 0.0};
  if (expected.size() != got.groups.size()) {
    c.pass = false;
    c.residual = kInf;
    return c;
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    c.residual = std::max(c.residual, std::abs(expected[i].value - got.groups[i].value));
    if (expected[i].multiplicity != got.groups[i].multiplicity || expected[i].is_main != got.groups[i].is_main)
      c.pass = false;
  }
  c.pass = c.pass && c.residual <= tol;
  return c;
}

std::vector<VerificationCase> verify_closed_forms(const GridConfig& grid) {
  std::vector<VerificationCase> out;
  for (int n = 1; n <= grid.complete_max; ++n)
    out.push_back(compare_spectrum("spectra-closed-forms/K" + std::to_string(n), sigma_complete(n),
                                   q_spectrum(complete_graph(n)), grid.tolerance));
  for (int a = 1; a <= grid.bipartite_max; ++a)
    for (int b = 1; b <= grid.bipartite_max; ++b)
      out.push_back(compare_spectrum("spectra-closed-forms/E" + std::to_string(a) + "+E" + std::to_string(b),
                                     sigma_bipartite_join(a, b), q_spectrum(join(empty_graph(a), empty_graph(b))),
                                     grid.tolerance));
  for (int a : grid.size_values)
    for (int b : grid.size_values) {
      if (b < 2) continue;
      const auto r = mains_complete_split(a, b);
      const std::vector<double> predicted = merge_values({r.smaller, r.larger}, {}, grid.tolerance);
      const auto computed = q_spectrum(join(complete_graph(a), empty_graph(b))).main_values();
      VerificationCase c;
      c.case_id = "spectra-closed-forms/K" + std::to_string(a) + "+E" + std::to_string(b);
      c.input = c.case_id;
      c.predicted = join_values(predicted);
      c.computed = join_values(computed);
      c.residual = set_residual(predicted, computed);
      c.pass = c.residual <= grid.tolerance;
      out.push_back(std::move(c));
    }
  for (int cc : grid.size_values)
    for (int a : grid.size_values)
      for (int b : grid.size_values) {
        if (a == b) continue;
        const auto r = mains_core_union(cc, a, b);
        const Graph g = join(complete_graph(cc), disjoint_union(complete_graph(a), complete_graph(b)));
        const auto report = q_spectrum(g);
        const std::vector<double> predicted = merge_values({r.mains.smaller, r.mains.larger}, {}, grid.tolerance);
        const auto computed = report.main_values();
        int multiplicity = 0;
        for (const auto& grp : report.groups)
          if (std::abs(grp.value - r.nonmain) <= grid.tolerance && !grp.is_main) multiplicity = grp.multiplicity;
        VerificationCase c;
        c.case_id = "spectra-closed-forms/K" + std::to_string(cc) + "+(K" + std::to_string(a) + "uK" +
                    std::to_string(b) + ")";
        c.input = c.case_id;
        c.predicted = join_values(predicted) + " nonmain=" + format_double(r.nonmain) + "^" +
                      std::to_string(r.nonmain_multiplicity);
        c.computed = join_values(computed) + " nonmain^" + std::to_string(multiplicity);
        c.residual = set_residual(predicted, computed);
        c.pass = c.residual <= grid.tolerance && multiplicity == r.nonmain_multiplicity;
        out.push_back(std::move(c));
      }
  return out;
}

std::vector<VerificationCase> verify_h_families(const GridConfig& grid) {
  std::vector<VerificationCase> out;
  for (const char* name : {"H1", "H2", "H2p", "H2pp", "H3", "H4", "H5", "H6", "H7", "H8"})
    for (const auto& spec : family_grid(name, grid)) {
      const auto built = build(spec);
      const auto expected = *expected_mains(spec);
      const auto computed = q_spectrum(built.graph).main_values();
      VerificationCase c;
      c.case_id = "h-families/mains/" + spec_label(spec);
      c.input = spec_label(spec);
      c.predicted = join_values(expected);
      c.computed = join_values(computed);
      c.residual = set_residual(expected, computed);
      c.pass = c.residual <= grid.tolerance;
      out.push_back(std::move(c));
      for (int cc : grid.join_c_values) {
        const int k = main_count(join(complete_graph(cc), built.graph));
        out.push_back({"h-families/join/K" + std::to_string(cc) + "+" + spec_label(spec), spec_label(spec), "k=3",
                       "k=" + std::to_string(k), k == 3, 0.0});
      }
    }
  return out;
}

std::vector<VerificationCase> verify_kappa(const GridConfig& grid) {
  std::vector<VerificationCase> out;
  for_each_cograph(pick(grid.max_n, 8), [&](const Cotree& t) {
    if (t.is_leaf() || !connected_cotree(t)) return;
    const Graph g = to_graph(t);
    const auto r = connectivity_report(g);
    if (is_complete(g)) {
      // kappa(K_n) = n - 1 by convention while a(K_n) = n.
      const int n = g.order();
      const double residual = std::abs(r.algebraic - n);
      out.push_back({"kappa-eq-a/" + canonical_string(t), canonical_string(t),
                     "kappa=" + std::to_string(n - 1) + " a=" + std::to_string(n),
                     "kappa=" + std::to_string(r.kappa) + " a=" + format_double(r.algebraic),
                     r.kappa == n - 1 && residual <= 1e-8 && !r.equal, residual});
      return;
    }
    out.push_back({"kappa-eq-a/" + canonical_string(t), canonical_string(t), "kappa=" + std::to_string(r.kappa),
                   "a=" + format_double(r.algebraic), r.equal, std::abs(r.kappa - r.algebraic)});
  });
  return out;
}

std::vector<VerificationCase> verify_regular_chordal(const GridConfig& grid) {
  std::vector<VerificationCase> out;
  for_each_cograph(pick(grid.max_n, 8), [&](const Cotree& t) {
    if (!connected_cotree(t)) return;
    const Graph g = to_graph(t);
    const bool premise = is_regular(g) && is_chordal(g);
    const bool complete = is_complete(g);
    out.push_back({"regular-chordal-complete/" + canonical_string(t), canonical_string(t),
                   premise ? "regular chordal => complete" : "premise false",
                   complete ? "complete" : "not complete", !premise || complete, 0.0});
  });
  return out;
}

std::vector<VerificationCase> verify_nonmain_multiplicities(const GridConfig& grid) {
  std::vector<VerificationCase> out;
  for_each_cograph(pick(grid.max_n, 9), [&](const Cotree& t) {
    const auto report = q_spectrum(to_graph(t));
    // Required multiplicity per value: bags with equal eigenvalue add up,
    // since their difference vectors have disjoint supports.
    std::map<int, int> floors;
    for (const auto& b : bags(t).bags)
      if (b.size >= 2) floors[b.kind == BagKind::J ? b.degree - 1 : b.degree] += b.size - 1;
    bool ok = true;
    std::string predicted, computed;
    for (auto [value, floor] : floors) {
      int mult = 0;
      for (const auto& grp : report.groups)
        if (std::abs(grp.value - value) <= report.tol_group) mult = grp.multiplicity;
      predicted += std::to_string(value) + "^>=" + std::to_string(floor) + " ";
      computed += std::to_string(value) + "^" + std::to_string(mult) + " ";
      ok = ok && mult >= floor;
    }
    out.push_back({"nonmain-multiplicities/" + canonical_string(t), canonical_string(t), predicted, computed, ok, 0.0});
  });
  return out;
}

using Suite = std::function<std::vector<VerificationCase>(const GridConfig&)>;

const std::vector<std::pair<std::string, Suite>>& suites() {
  static const std::vector<std::pair<std::string, Suite>> table{
      {"width-bound", verify_width_bound},
      {"complement-invariance", verify_complement_invariance},
      {"zero-main-union", verify_zero_main_union},
      {"two-main-characterization", verify_two_main},
      {"gcs-count", verify_gcs_count},
      {"join-kc", verify_join_kc},
      {"spectra-closed-forms", verify_closed_forms},
      {"h-families", verify_h_families},
      {"kappa-eq-a", verify_kappa},
      {"regular-chordal-complete", verify_regular_chordal},
      {"nonmain-multiplicities", verify_nonmain_multiplicities},
  };
  return table;
}

std::vector<int> int_list(const nlohmann::json& j, const char* key) {
  if (!j.is_array()) throw std::invalid_argument(std::string("grid: '") + key + "' must be an integer array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument(std::string("grid: '") + key + "' must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

GridConfig grid_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("grid must be a JSON object");
  GridConfig g;
  const std::map<std::string, std::vector<int>*> lists{
      {"c_values", &g.c_values},         {"n0_values", &g.n0_values},
      {"count_values", &g.count_values}, {"order_values", &g.order_values},
      {"multiplicity_values", &g.multiplicity_values}, {"size_values", &g.size_values},
      {"s_odd", &g.s_odd},               {"s_even", &g.s_even},
      {"join_c_values", &g.join_c_values},
  };
  const std::map<std::string, int*> ints{{"max_n", &g.max_n},
                                         {"max_order_classes", &g.max_order_classes},
                                         {"complete_max", &g.complete_max},
                                         {"bipartite_max", &g.bipartite_max}};
  for (const auto& [key, value] : j.items()) {
    if (auto it = lists.find(key); it != lists.end()) {
      *it->second = int_list(value, key.c_str());
    } else if (auto jt = ints.find(key); jt != ints.end()) {
      if (!value.is_number_integer()) throw std::invalid_argument("grid: '" + key + "' must be an integer");
      *jt->second = value.get<int>();
    } else if (key == "tolerance") {
      if (!value.is_number()) throw std::invalid_argument("grid: 'tolerance' must be a number");
      g.tolerance = value.get<double>();
    } else {
      throw std::invalid_argument("grid: unknown key '" + key + "'");
    }
  }
  return g;
}

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, suite] : suites()) out.push_back(id);
    return out;
  }();
  return ids;
}

std::vector<VerificationCase> verify(std::string_view theorem_id, const GridConfig& grid) {
  for (const auto& [id, suite] : suites())
    if (id == theorem_id) return suite(grid);
  throw std::invalid_argument("unknown theorem id '" + std::string(theorem_id) + "'");
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

void write_report_csv(std::ostream& out, const std::vector<VerificationCase>& cases) {
  out << "case_id,input,predicted,computed,verdict,residual\n";
  for (const auto& c : cases)
    out << csv_cell(c.case_id) << ',' << csv_cell(c.input) << ',' << csv_cell(c.predicted) << ','
        << csv_cell(c.computed) << ',' << (c.pass ? "PASS" : "FAIL") << ',' << format_double(c.residual) << '\n';
}

std::vector<FamilySpec> family_grid(std::string_view family, const GridConfig& grid) {
  const auto keys = parameter_keys(family);
  std::vector<std::vector<int>> axes;
  for (const auto& k : keys) {
    if (k == "p" || k == "p1" || k == "p2" || k == "p3" || k == "t")
      axes.push_back(grid.multiplicity_values);
    else if (k == "s" && family == "H6")
      axes.push_back(grid.s_odd);
    else if (k == "s" && (family == "H7" || family == "H8"))
      axes.push_back(grid.s_even);
    else
      axes.push_back(grid.size_values);
  }
  std::vector<FamilySpec> out;
  std::vector<int> idx(keys.size(), 0);
  if (std::any_of(axes.begin(), axes.end(), [](const auto& a) { return a.empty(); })) return out;
  while (true) {
    std::vector<std::pair<std::string, int>> params;
    for (std::size_t i = 0; i < keys.size(); ++i) params.emplace_back(keys[i], axes[i][idx[i]]);
    FamilySpec spec = make_family(family, params);
    if (is_valid(spec)) out.push_back(std::move(spec));
    std::size_t i = keys.size();
    while (i > 0 && ++idx[i - 1] == static_cast<int>(axes[i - 1].size())) idx[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<FamilySpec> gcs_grid(const GridConfig& grid) {
  std::vector<FamilySpec> out;
  std::vector<int> orders = grid.order_values;
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  const int m = static_cast<int>(orders.size());
  for (int n0 : grid.n0_values)
    for (int classes = 1; classes <= std::min(grid.max_order_classes, m); ++classes) {
      // Order subsets of size `classes`, then every count assignment.
      std::vector<int> choose(classes);
      std::function<void(int, int)> pick_orders = [&](int start, int depth) {
        if (depth == classes) {
          std::vector<int> cidx(classes, 0);
          while (true) {
            family::GeneralizedCoreSatellite s;
            s.n0 = n0;
            for (int i = 0; i < classes; ++i) s.satellites.push_back({grid.count_values[cidx[i]], choose[i]});
            out.push_back(s);
            int i = classes;
            while (i > 0 && ++cidx[i - 1] == static_cast<int>(grid.count_values.size())) cidx[--i] = 0;
            if (i == 0) break;
          }
          return;
        }
        for (int i = start; i < m; ++i) {
          choose[depth] = orders[i];
          pick_orders(i + 1, depth + 1);
        }
      };
      if (!grid.count_values.empty()) pick_orders(0, 0);
    }
  return out;
}

namespace {

std::vector<int> expand_axis(const std::string& key, const nlohmann::json& v) {
  if (v.is_number_integer()) return {v.get<int>()};
  if (v.is_array()) return int_list(v, key.c_str());
  if (v.is_object() && v.contains("from") && v.contains("to") && v["from"].is_number_integer() &&
      v["to"].is_number_integer()) {
    std::vector<int> out;
    for (int x = v["from"].get<int>(); x <= v["to"].get<int>(); ++x) out.push_back(x);
    return out;
  }
  throw FamilyError("sweep: parameter '" + key + "' must be an integer, a list, or {\"from\", \"to\"}");
}

}  // namespace

std::size_t sweep(const nlohmann::json& pattern, std::ostream& out, const SweepOptions& options) {
  if (!pattern.is_object() || !pattern.contains("family") || !pattern["family"].is_string())
    throw FamilyError("sweep pattern needs a string \"family\" field");
  const std::string name = pattern["family"].get<std::string>();
  const nlohmann::json params = pattern.value("params", nlohmann::json::object());
  const bool gcs = name == family::GeneralizedCoreSatellite::name;

  std::vector<std::string> keys = gcs ? std::vector<std::string>{"n0"} : parameter_keys(name);
  std::vector<std::vector<int>> axes;
  for (const auto& k : keys) {
    if (!params.contains(k)) throw FamilyError("sweep: missing parameter '" + k + "'");
    axes.push_back(expand_axis(k, params[k]));
    std::sort(axes.back().begin(), axes.back().end());
    axes.back().erase(std::unique(axes.back().begin(), axes.back().end()), axes.back().end());
  }
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.size();
  if (total > options.max_points)
    throw std::length_error("sweep: " + std::to_string(total) + " points exceed the cap of " +
                            std::to_string(options.max_points));

  out << "family";
  for (const auto& k : keys) out << ',' << k;
  out << ",n,m,width,main_count,mains,is_cograph,is_chordal,is_quasi_threshold,is_threshold,is_bipartite,"
         "is_regular,is_complete,is_connected,runtime_ms\n";
  if (total == 0) return 0;

  std::size_t rows = 0;
  std::vector<std::size_t> idx(keys.size(), 0);
  while (true) {
    std::vector<std::pair<std::string, int>> point;
    for (std::size_t i = 0; i < keys.size(); ++i) point.emplace_back(keys[i], axes[i][idx[i]]);

    std::optional<FamilySpec> spec;
    if (gcs) {
      nlohmann::json j{{"family", name}, {"params", params}};
      j["params"]["n0"] = point[0].second;
      try {
        spec = family_from_json(j);
      } catch (const FamilyError&) {
      }
    } else {
      spec = make_family(name, point);
      if (!is_valid(*spec)) spec.reset();
    }

    if (spec) {
      const auto start = std::chrono::steady_clock::now();
      const auto built = build(*spec);
      const auto report = q_spectrum(built.graph);
      const auto cls = classify(built.graph);
      const int width = bags(built.tree).width();
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      auto b = [](bool v) { return v ? "1" : "0"; };
      out << name;
      for (const auto& [k, v] : point) out << ',' << v;
      out << ',' << built.graph.order() << ',' << built.graph.size() << ',' << width << ',' << report.main_count << ','
          << join_values(report.main_values()) << ',' << b(cls.is_cograph) << ',' << b(cls.is_chordal) << ','
          << b(cls.is_quasi_threshold) << ',' << b(cls.is_threshold) << ',' << b(cls.is_bipartite) << ','
          << b(cls.is_regular) << ',' << b(cls.is_complete) << ',' << b(cls.is_connected) << ','
          << (options.timing ? format_double(ms) : std::string("0")) << '\n';
      ++rows;
    }
    std::size_t i = keys.size();
    while (i > 0 && ++idx[i - 1] == axes[i - 1].size()) idx[--i] = 0;
    if (i == 0) break;
  }
  return rows;
}

}  // namespace qspec
