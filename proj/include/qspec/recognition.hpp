#pragma once

#include "qspec/families.hpp"
#include "qspec/graph.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qspec {

enum class Pattern { P4, C4, TwoK2 };

/// First 4-subset in lexicographic order inducing `pattern`. For P4 the
/// tuple is returned in path order; otherwise in increasing order.
std::optional<std::array<int, 4>> find_induced(const Graph& g, Pattern pattern);

struct ChordalityResult {
  bool chordal = false;
  /// Perfect elimination ordering when chordal.
  std::vector<int> elimination_order;
};

ChordalityResult chordality(const Graph& g);
bool is_chordal(const Graph& g);
bool is_regular(const Graph& g);
bool is_complete(const Graph& g);
bool is_cograph(const Graph& g);
bool is_quasi_threshold(const Graph& g);
/// Degree-sequence peeling: repeatedly drop an isolated or dominating vertex.
bool is_threshold(const Graph& g);

struct ClassificationReport {
  bool is_cograph = false;
  bool is_chordal = false;
  bool is_quasi_threshold = false;
  bool is_threshold = false;
  bool is_bipartite = false;
  bool is_regular = false;
  bool is_complete = false;
  bool is_connected = false;
  /// First forbidden subgraph met: a P4, else a C4, else a 2K2.
  std::optional<std::array<int, 4>> witness;
  std::optional<Pattern> witness_pattern;
};

ClassificationReport classify(const Graph& g);
std::string to_json(const ClassificationReport& r);

/// Minimum number of vertices whose removal disconnects `g` (n-1 if complete).
int vertex_connectivity(const Graph& g);

struct ConnectivityReport {
  int kappa = 0;
  double algebraic = 0;
  bool equal = false;
};

ConnectivityReport connectivity_report(const Graph& g, double tol = 1e-8);

class NotApplicable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A theorem-level guarantee failed on an input that met its hypotheses.
class InternalContradiction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

std::vector<int> universal_vertices(const Graph& g);

struct UniversalCliqueDecomposition {
  int clique_order = 0;         // c
  std::vector<int> clique;      // the universal vertices of g
  std::vector<int> rest;        // vertices of h, increasing
  Graph remainder;              // h = g[rest]
};

/// g = K_c + h with every universal vertex in the clique. Throws
/// NotApplicable unless g is connected, non-complete and quasi-threshold.
UniversalCliqueDecomposition universal_clique_decomposition(const Graph& g);

/// Same split without the quasi-threshold precondition; requires at least
/// one universal vertex and at least one other vertex.
UniversalCliqueDecomposition split_universal(const Graph& g);

/// Reads g as K_n0 + (a_1 K_n1 u ... u a_p K_np) with satellites sorted by
/// order. Absent unless g is connected with at least two satellites.
std::optional<family::GeneralizedCoreSatellite> parse_generalized_core_satellite(const Graph& g);

}  // namespace qspec
