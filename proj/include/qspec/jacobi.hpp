#pragma once

#include <Eigen/Core>
#include <Eigen/Jacobi>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qspec {

template <typename Scalar>
struct EigenDecomposition {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Vector values;   // ascending
  Matrix vectors;  // column k pairs with values(k)
  int sweeps = 0;
};

class EigenSolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct JacobiOptions {
  double relative_tolerance = 1e-12;  // on the off-diagonal Frobenius norm
  int max_sweeps = 100;
};

/// Cyclic Jacobi eigensolver for a dense symmetric matrix.
///
/// Sweeps visit (p, q) pairs in row-major order so the result is a pure
/// function of the input. Only the upper triangle of `input` is read.
template <typename Derived>
EigenDecomposition<typename Derived::Scalar> eigen_sym(const Eigen::MatrixBase<Derived>& input,
                                                       const JacobiOptions& options = {}) {
  using Scalar = typename Derived::Scalar;
  using Matrix = typename EigenDecomposition<Scalar>::Matrix;
  using std::abs;
  using std::sqrt;

  const Eigen::Index n = input.rows();
  if (n < 1 || input.cols() != n) throw std::invalid_argument("eigen_sym needs a non-empty square matrix");

  Matrix a = input.template selfadjointView<Eigen::Upper>();
  Matrix v = Matrix::Identity(n, n);

  const Scalar scale = a.norm();
  const Scalar target = Scalar(options.relative_tolerance) * scale;
  auto off_norm = [&] {
    Scalar s(0);
    for (Eigen::Index q = 1; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) s += a(p, q) * a(p, q);
    return sqrt(Scalar(2) * s);
  };

  EigenDecomposition<Scalar> out;
  while (off_norm() > target) {
    if (out.sweeps == options.max_sweeps)
      throw EigenSolverError("Jacobi iteration did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
    ++out.sweeps;
    for (Eigen::Index p = 0; p < n - 1; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == Scalar(0)) continue;
        Eigen::JacobiRotation<Scalar> rot;
        rot.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        v.applyOnTheRight(p, q, rot);
        a(p, q) = a(q, p) = Scalar(0);
      }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[k], order[k]);
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

}  // namespace qspec
