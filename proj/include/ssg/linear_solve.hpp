#pragma once

#include <cstddef>
#include <vector>

#include "ssg/errors.hpp"
#include "ssg/rational.hpp"

namespace ssg {

namespace detail {

template <typename Scalar>
auto pivot_magnitude(const Scalar& x) {
  using std::abs;
  return abs(x);
}

// Rationals pivot on the size of the numerator.
inline Integer pivot_magnitude(const Rational& x) {
  return abs(numerator_of(x));
}

}  // namespace detail

/// Solves m * x = rhs exactly by Gaussian elimination with partial pivoting
/// (largest pivot magnitude, smallest row on ties). Rows are sparse in
/// practice, so updates only touch the pivot row's nonzero columns.
/// Throws InvariantError if m is singular.
template <typename Scalar>
Vector<Scalar> solve_exact(Matrix<Scalar> m, Vector<Scalar> rhs) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n || rhs.size() != n) {
    throw InputError("solve_exact: dimension mismatch");
  }
  const Scalar zero(0);
  std::vector<Eigen::Index> nonzero_cols;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = k; r < n; ++r) {
      if (m(r, k) == zero) continue;
      if (pivot < 0 || detail::pivot_magnitude(m(r, k)) > detail::pivot_magnitude(m(pivot, k))) {
        pivot = r;
      }
    }
    if (pivot < 0) throw InvariantError("singular linear system");
    if (pivot != k) {
      m.row(k).swap(m.row(pivot));
      std::swap(rhs(k), rhs(pivot));
    }
    nonzero_cols.clear();
    for (Eigen::Index c = k + 1; c < n; ++c) {
      if (m(k, c) != zero) nonzero_cols.push_back(c);
    }
    const Scalar p = m(k, k);
    for (Eigen::Index r = k + 1; r < n; ++r) {
      if (m(r, k) == zero) continue;
      const Scalar factor = m(r, k) / p;
      for (Eigen::Index c : nonzero_cols) m(r, c) -= factor * m(k, c);
      rhs(r) -= factor * rhs(k);
      m(r, k) = zero;
    }
  }
  Vector<Scalar> x(n);
  for (Eigen::Index k = n - 1; k >= 0; --k) {
    Scalar acc = rhs(k);
    for (Eigen::Index c = k + 1; c < n; ++c) {
      if (m(k, c) != zero) acc -= m(k, c) * x(c);
    }
    x(k) = acc / m(k, k);
  }
  return x;
}

}  // namespace ssg
