#pragma once

#include "qspec/cotree.hpp"
#include "qspec/graph.hpp"
#include "qspec/jacobi.hpp"

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

namespace qspec {

using SymMatrix = Eigen::MatrixXd;

SymMatrix adjacency_matrix(const Graph& g);
/// Q = D + A.
SymMatrix signless_laplacian(const Graph& g);
/// L = D - A.
SymMatrix laplacian(const Graph& g);

/// Grouping and main-detection thresholds. Unset fields take the defaults
/// 1e-7 * max(1, ||M||_inf) for grouping and 1e-6 * sqrt(n) for projections.
struct Tolerances {
  std::optional<double> group;
  std::optional<double> main;
};

double default_group_tolerance(const SymMatrix& m);
double default_main_tolerance(int n);

struct EigenGroup {
  double value = 0;
  int multiplicity = 0;
  bool is_main = false;
  /// Norm of the all-ones vector projected onto the group's eigenspace.
  double projection_norm = 0;
};

struct QSpectrumReport {
  int n = 0;
  std::vector<EigenGroup> groups;  // ascending by value
  int main_count = 0;
  double tol_group = 0;
  double tol_main = 0;

  std::vector<double> main_values() const;
};

/// Groups the eigenpairs of `m` and projects `weights` onto each group.
QSpectrumReport grouped_spectrum(const SymMatrix& m, const Eigen::VectorXd& weights, const Tolerances& tol = {});

QSpectrumReport q_spectrum(const Graph& g, const Tolerances& tol = {});

/// Condensed signless Laplacian over the bags of a cotree.
struct CondensedMatrix {
  SymMatrix entries;
  Eigen::VectorXd weights;  // sqrt(t_i)

  int order() const { return static_cast<int>(entries.rows()); }
};

CondensedMatrix condensed(const BagRepresentation& b);

struct CondensedEigenvalue {
  double value = 0;
  bool is_main = false;
};

/// Main eigenvalues read off the condensed matrix: a group is main iff the
/// bag-weight vector has a non-negligible projection onto it. The default
/// main tolerance scales with sqrt of the vertex count sum(t_i).
std::vector<CondensedEigenvalue> main_eigs_condensed(const CondensedMatrix& c, const Tolerances& tol = {});

int main_count(const Graph& g);

/// Second-smallest Laplacian eigenvalue.
double algebraic_connectivity(const Graph& g);

/// Sorted union of two value sets, merging entries closer than `tol`.
std::vector<double> merge_values(std::vector<double> a, const std::vector<double>& b, double tol);
/// True if the sorted sets have equal size and agree pointwise within `tol`.
bool same_values(const std::vector<double>& a, const std::vector<double>& b, double tol);

/// Fixed 17-significant-digit rendering used in every report.
std::string format_double(double x);
std::string to_json(const QSpectrumReport& r);
std::string to_json(const CondensedMatrix& c);

}  // namespace qspec
