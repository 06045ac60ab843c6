#pragma once

#include "qspec/families.hpp"
#include "qspec/graph.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qspec {

struct SpectrumEntry {
  double value = 0;
  int multiplicity = 0;
  bool is_main = false;
  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Closed-form Q-spectrum of K_n, ascending.
std::vector<SpectrumEntry> sigma_complete(int n);
/// Closed-form Q-spectrum of Kbar_a + Kbar_b, ascending.
std::vector<SpectrumEntry> sigma_bipartite_join(int a, int b);

struct QuadraticRoots {
  double larger = 0;
  double smaller = 0;
};

/// Roots of q^2 - b q + c = 0 (real, clamped discriminant); the smaller
/// root is recovered from the product to avoid cancellation.
QuadraticRoots stable_quadratic_roots(double b, double c);

/// Main eigenvalues of K_a + Kbar_b, b > 1.
QuadraticRoots mains_complete_split(int a, int b);

struct CoreUnionMains {
  QuadraticRoots mains;
  double nonmain = 0;        // a + b + c - 2
  int nonmain_multiplicity;  // c
};

/// Main eigenvalues of K_c + (K_a u K_b), a != b.
CoreUnionMains mains_core_union(int c, int a, int b);

/// Main eigenvalues of K_c + t K_a, t >= 2, from the two-cell equitable
/// quotient of Q.
QuadraticRoots mains_core_satellite(int c, int t, int a);

enum class MainRule {
  Regular,
  CompleteGraph,
  TwoMainFormA,
  TwoMainFormB,
  CoreSatelliteP1,
  GcsPplus1,
  JoinKcBipartite,
  JoinKcNonBipartite,
  WidthBoundOnly,
};

std::string_view rule_name(MainRule rule);

struct MainCountPrediction {
  int k = 1;
  MainRule rule = MainRule::WidthBoundOnly;
  std::string premises;
};

MainCountPrediction predict_main_count(const Graph& g);
MainCountPrediction predict_main_count(const FamilySpec& spec);
std::string to_json(const MainCountPrediction& p);

struct FormA {
  int c, a, b;  // K_c + (K_a u K_b), a < b
  friend bool operator==(const FormA&, const FormA&) = default;
};
struct FormB {
  int c, t, a;  // K_c + t K_a, t >= 2
  friend bool operator==(const FormB&, const FormB&) = default;
};
using TwoMainForm = std::variant<FormA, FormB>;

/// Structural match against the two shapes with exactly two main
/// eigenvalues. Throws NotApplicable unless g is connected quasi-threshold.
std::optional<TwoMainForm> predict_two_main_forms(const Graph& g);

/// Vertex vector taking 1 on the core, c/(b-a) on K_a and -c/(b-a) on K_b,
/// labelled as join(K_c, disjoint_union(K_a, K_b)).
Eigen::VectorXd core_union_nonmain_vector(int c, int a, int b);

}  // namespace qspec
