#include "qspec/oracle.hpp"

#include "qspec/cotree.hpp"
#include "qspec/recognition.hpp"
#include "qspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qspec {

std::vector<SpectrumEntry> sigma_complete(int n) {
  if (n < 1) throw std::invalid_argument("sigma_complete needs n >= 1");
  if (n == 1) return {{0.0, 1, true}};
  return {{double(n - 2), n - 1, false}, {double(2 * n - 2), 1, true}};
}

std::vector<SpectrumEntry> sigma_bipartite_join(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("sigma_bipartite_join needs a, b >= 1");
  if (a == b) {
    std::vector<SpectrumEntry> out{{0.0, 1, false}};
    if (a > 1) out.push_back({double(a), 2 * a - 2, false});
    out.push_back({2.0 * a, 1, true});
    return out;
  }
  // b has multiplicity a-1 and a has multiplicity b-1.
  std::vector<SpectrumEntry> out{{0.0, 1, true}};
  std::vector<SpectrumEntry> middle;
  if (a > 1) middle.push_back({double(b), a - 1, false});
  if (b > 1) middle.push_back({double(a), b - 1, false});
  std::sort(middle.begin(), middle.end(), [](const auto& x, const auto& y) { return x.value < y.value; });
  out.insert(out.end(), middle.begin(), middle.end());
  out.push_back({double(a + b), 1, true});
  return out;
}

QuadraticRoots stable_quadratic_roots(double b, double c) {
  const double disc = std::max(0.0, b * b - 4 * c);
  const double big = 0.5 * (b + std::copysign(std::sqrt(disc), b));
  if (big == 0) return {0, 0};
  const double other = c / big;
  return {std::max(big, other), std::min(big, other)};
}

QuadraticRoots mains_complete_split(int a, int b) {
  if (a < 1 || b <= 1) throw std::invalid_argument("mains_complete_split needs a >= 1 and b > 1");
  return stable_quadratic_roots(b + 3.0 * a - 2, 2.0 * a * a - 2.0 * a);
}

CoreUnionMains mains_core_union(int c, int a, int b) {
  if (c < 1 || a < 1 || b < 1 || a == b) throw std::invalid_argument("mains_core_union needs c, a, b >= 1 and a != b");
  const double lin = 3.0 * c + 2.0 * b + 2.0 * a - 4;
  const double cst = 2.0 * c * c + (2.0 * b + 2.0 * a - 6) * c + (4.0 * a - 4) * b - 4.0 * a + 4;
  return {stable_quadratic_roots(lin, cst), double(a + b + c - 2), c};
}

QuadraticRoots mains_core_satellite(int c, int t, int a) {
  if (c < 1 || t < 2 || a < 1) throw std::invalid_argument("mains_core_satellite needs c, a >= 1 and t >= 2");
  // Quotient [[2c-2+ta, ta], [c, 2a-2+c]] of Q over core and satellites.
  const double core = 2.0 * c - 2 + double(t) * a;
  const double sat = 2.0 * a - 2 + c;
  return stable_quadratic_roots(core + sat, core * sat - double(t) * a * c);
}

std::string_view rule_name(MainRule rule) {
  switch (rule) {
    case MainRule::Regular:
      return "Regular";
    case MainRule::CompleteGraph:
      return "CompleteGraph";
    case MainRule::TwoMainFormA:
      return "TwoMainFormA";
    case MainRule::TwoMainFormB:
      return "TwoMainFormB";
    case MainRule::CoreSatelliteP1:
      return "CoreSatelliteP1";
    case MainRule::GcsPplus1:
      return "GcsPplus1";
    case MainRule::JoinKcBipartite:
      return "JoinKcBipartite";
    case MainRule::JoinKcNonBipartite:
      return "JoinKcNonBipartite";
    case MainRule::WidthBoundOnly:
      return "WidthBoundOnly";
  }
  return "?";
}

namespace {

MainCountPrediction predict_gcs(const family::GeneralizedCoreSatellite& s) {
  const int p = static_cast<int>(s.satellites.size());
  int total = 0;
  for (const auto& sat : s.satellites) total += sat.count;
  const std::string shape = "generalized core-satellite, n0=" + std::to_string(s.n0) + ", p=" + std::to_string(p) +
                            ", satellites=" + std::to_string(total);
  if (total == 1) return {1, MainRule::CompleteGraph, shape + "; a single satellite makes the graph complete"};
  if (p == 1) return {2, MainRule::CoreSatelliteP1, shape + "; two or more satellites of one order"};
  if (p == 2 && total == 2) return {2, MainRule::TwoMainFormA, shape + "; exactly two satellites of distinct orders"};
  return {p + 1, MainRule::GcsPplus1, shape + "; k = p + 1"};
}

}  // namespace

MainCountPrediction predict_main_count(const Graph& g) {
  if (g.empty()) throw std::invalid_argument("predict_main_count: empty graph");
  if (is_complete(g)) return {1, MainRule::CompleteGraph, "complete graph K_" + std::to_string(g.order())};
  if (is_regular(g)) return {1, MainRule::Regular, "regular of degree " + std::to_string(g.degree(0))};

  if (auto gcs = parse_generalized_core_satellite(g)) return predict_gcs(*gcs);

  const auto tree = from_graph(g);
  const bool cograph = std::holds_alternative<Cotree>(tree);
  if (cograph && !universal_vertices(g).empty()) {
    const auto d = split_universal(g);
    const int inner = main_count(d.remainder);
    if (inner >= 2) {
      const std::string premises = "K_" + std::to_string(d.clique_order) + " joined to a cograph with " +
                                   std::to_string(inner) + " main eigenvalues";
      if (bipartition(complement(d.remainder)))
        return {inner, MainRule::JoinKcBipartite, premises + "; complement of remainder bipartite"};
      return {inner + 1, MainRule::JoinKcNonBipartite, premises + "; complement of remainder non-bipartite"};
    }
  }
  if (cograph) {
    const int r = bags(std::get<Cotree>(tree)).width();
    return {r, MainRule::WidthBoundOnly, "upper bound only: cotree width " + std::to_string(r)};
  }
  return {g.order(), MainRule::WidthBoundOnly, "upper bound only: not a cograph, bounded by the order"};
}

MainCountPrediction predict_main_count(const FamilySpec& spec) {
  validate(spec);
  if (const auto* gcs = std::get_if<family::GeneralizedCoreSatellite>(&spec)) return predict_gcs(*gcs);
  return predict_main_count(build(spec).graph);
}

std::string to_json(const MainCountPrediction& p) {
  nlohmann::json j{{"k", p.k}, {"rule", std::string(rule_name(p.rule))}, {"premises", p.premises}};
  return j.dump();
}

std::optional<TwoMainForm> predict_two_main_forms(const Graph& g) {
  if (g.empty() || !is_connected(g)) throw NotApplicable("predict_two_main_forms: graph is not connected");
  if (!is_quasi_threshold(g)) throw NotApplicable("predict_two_main_forms: graph is not quasi-threshold");
  if (is_complete(g)) return std::nullopt;

  const auto d = universal_clique_decomposition(g);
  std::vector<int> orders;
  for (const auto& block : components(d.remainder).blocks) {
    if (!is_complete(induced_subgraph(d.remainder, block))) return std::nullopt;
    orders.push_back(static_cast<int>(block.size()));
  }
  std::sort(orders.begin(), orders.end());
  if (orders.size() == 2 && orders[0] != orders[1]) return FormA{d.clique_order, orders[0], orders[1]};
  if (orders.size() >= 2 && orders.front() == orders.back())
    return FormB{d.clique_order, static_cast<int>(orders.size()), orders[0]};
  return std::nullopt;
}

Eigen::VectorXd core_union_nonmain_vector(int c, int a, int b) {
  if (a == b) throw std::invalid_argument("core_union_nonmain_vector needs a != b");
  Eigen::VectorXd w(c + a + b);
  const double ratio = double(c) / double(b - a);
  w.head(c).setOnes();
  w.segment(c, a).setConstant(ratio);
  w.tail(b).setConstant(-ratio);
  return w;
}

}  // namespace qspec
