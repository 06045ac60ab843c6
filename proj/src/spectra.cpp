#include "qspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qspec {

namespace {

void require_nonempty(const Graph& g, const char* what) {
  if (g.empty()) throw std::invalid_argument(std::string(what) + ": empty graph");
}

}  // namespace

SymMatrix adjacency_matrix(const Graph& g) { return g.adjacency().cast<double>().matrix(); }

SymMatrix signless_laplacian(const Graph& g) {
  require_nonempty(g, "signless_laplacian");
  SymMatrix q = adjacency_matrix(g);
  q.diagonal() = q.rowwise().sum();
  return q;
}

SymMatrix laplacian(const Graph& g) {
  require_nonempty(g, "laplacian");
  SymMatrix l = -adjacency_matrix(g);
  l.diagonal() = -l.rowwise().sum();
  return l;
}

double default_group_tolerance(const SymMatrix& m) {
  const double inf_norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  return 1e-7 * std::max(1.0, inf_norm);
}

double default_main_tolerance(int n) { return 1e-6 * std::sqrt(static_cast<double>(n)); }

std::vector<double> QSpectrumReport::main_values() const {
  std::vector<double> out;
  for (const auto& g : groups)
    if (g.is_main) out.push_back(g.value);
  return out;
}

QSpectrumReport grouped_spectrum(const SymMatrix& m, const Eigen::VectorXd& weights, const Tolerances& tol) {
  const auto n = static_cast<int>(m.rows());
  QSpectrumReport r;
  r.n = n;
  r.tol_group = tol.group.value_or(default_group_tolerance(m));
  r.tol_main = tol.main.value_or(default_main_tolerance(static_cast<int>(std::lround(weights.squaredNorm()))));

  const auto eig = eigen_sym(m);
  const Eigen::VectorXd coeffs = eig.vectors.transpose() * weights;

  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n && eig.values(end) - eig.values(end - 1) <= r.tol_group) ++end;
    EigenGroup g;
    g.multiplicity = end - start;
    g.value = eig.values.segment(start, g.multiplicity).mean();
    g.projection_norm = coeffs.segment(start, g.multiplicity).norm();
    g.is_main = g.projection_norm > r.tol_main;
    if (g.is_main) ++r.main_count;
    r.groups.push_back(g);
    start = end;
  }
  return r;
}

QSpectrumReport q_spectrum(const Graph& g, const Tolerances& tol) {
  return grouped_spectrum(signless_laplacian(g), Eigen::VectorXd::Ones(g.order()), tol);
}

CondensedMatrix condensed(const BagRepresentation& b) {
  const int r = b.width();
  CondensedMatrix c;
  c.entries = SymMatrix::Zero(r, r);
  c.weights.resize(r);
  for (int i = 0; i < r; ++i) {
    const Bag& bi = b.bags[i];
    c.weights(i) = std::sqrt(static_cast<double>(bi.size));
    c.entries(i, i) = bi.kind == BagKind::J ? bi.degree + (bi.size - 1) : bi.degree;
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i != j && b.linked(i, j)) c.entries(i, j) = c.weights(i) * c.weights(j);
  return c;
}

std::vector<CondensedEigenvalue> main_eigs_condensed(const CondensedMatrix& c, const Tolerances& tol) {
  const auto report = grouped_spectrum(c.entries, c.weights, tol);
  std::vector<CondensedEigenvalue> out;
  for (const auto& g : report.groups) out.push_back({g.value, g.is_main});
  return out;
}

int main_count(const Graph& g) { return q_spectrum(g).main_count; }

double algebraic_connectivity(const Graph& g) {
  if (g.order() < 2) throw std::invalid_argument("algebraic_connectivity needs at least two vertices");
  return eigen_sym(laplacian(g)).values(1);
}

std::vector<double> merge_values(std::vector<double> a, const std::vector<double>& b, double tol) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  std::vector<double> out;
  for (double x : a)
    if (out.empty() || x - out.back() > tol) out.push_back(x);
  return out;
}

bool same_values(const std::vector<double>& a, const std::vector<double>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

std::string format_double(double x) {
  if (x == 0) x = 0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_json(const QSpectrumReport& r) {
  std::string s = "{\"n\":" + std::to_string(r.n) + ",\"groups\":[";
  for (std::size_t i = 0; i < r.groups.size(); ++i) {
    const auto& g = r.groups[i];
    if (i) s += ',';
    s += "{\"value\":" + format_double(g.value) + ",\"multiplicity\":" + std::to_string(g.multiplicity) +
         ",\"main\":" + (g.is_main ? "true" : "false") + ",\"projection_norm\":" + format_double(g.projection_norm) +
         "}";
  }
  s += "],\"main_count\":" + std::to_string(r.main_count) + ",\"tolerances\":{\"group\":" + format_double(r.tol_group) +
       ",\"main\":" + format_double(r.tol_main) + "}}";
  return s;
}

std::string to_json(const CondensedMatrix& c) {
  std::string s = "{\"order\":" + std::to_string(c.order()) + ",\"entries\":[";
  for (int i = 0; i < c.order(); ++i) {
    if (i) s += ',';
    s += '[';
    for (int j = 0; j < c.order(); ++j) {
      if (j) s += ',';
      s += format_double(c.entries(i, j));
    }
    s += ']';
  }
  s += "],\"weights\":[";
  for (int i = 0; i < c.order(); ++i) {
    if (i) s += ',';
    s += format_double(c.weights(i));
  }
  s += "]}";
  return s;
}

}  // namespace qspec
