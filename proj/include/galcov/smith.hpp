#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <utility>
#include <vector>

namespace galcov {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

template <typename Scalar>
using IntMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
struct SmithForm {
  IntMatrix<Scalar> diagonal;     // same shape as the input
  std::vector<Scalar> invariants;  // nonzero diagonal entries, d1 | d2 | ...
  int rank = 0;                    // number of nonzero invariants
};

namespace detail {

template <typename Scalar>
Scalar abs_of(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

// Entry of least nonzero absolute value in the block [t.., t..], if any.
template <typename Scalar>
bool least_pivot(const IntMatrix<Scalar>& a, Eigen::Index t, Eigen::Index& pr, Eigen::Index& pc) {
  bool found = false;
  Scalar best = 0;
  for (Eigen::Index j = t; j < a.cols(); ++j)
    for (Eigen::Index i = t; i < a.rows(); ++i) {
      if (a(i, j) == 0) continue;
      const Scalar v = abs_of(a(i, j));
      if (!found || v < best) {
        best = v;
        pr = i;
        pc = j;
        found = true;
      }
    }
  return found;
}

}  // namespace detail

/// Smith normal form by unimodular row and column operations, always
/// pivoting on an entry of least absolute value. Exact for BigInt.
template <typename Scalar>
SmithForm<Scalar> smith_normal_form(IntMatrix<Scalar> a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    Eigen::Index pr = 0;
    Eigen::Index pc = 0;
    if (!detail::least_pivot(a, t, pr, pc)) break;
    a.row(t).swap(a.row(pr));
    a.col(t).swap(a.col(pc));
    for (;;) {
      bool dirty = false;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Scalar q = a(i, t) / a(t, t);
        a.row(i) -= q * a.row(t);
        if (a(i, t) != 0) dirty = true;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Scalar q = a(t, j) / a(t, t);
        a.col(j) -= q * a.col(t);
        if (a(t, j) != 0) dirty = true;
      }
      if (!dirty) {
        // Divisibility: fold a non-multiple from the block into row t.
        Eigen::Index bad = -1;
        for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
          for (Eigen::Index j = t + 1; j < cols; ++j)
            if (a(i, j) % a(t, t) != 0) {
              bad = i;
              break;
            }
        if (bad < 0) break;
        a.row(t) += a.row(bad);
      }
      // Move the smallest entry of row t / column t to the pivot.
      Eigen::Index br = t;
      Eigen::Index bc = t;
      Scalar best = detail::abs_of(a(t, t));
      for (Eigen::Index i = t + 1; i < rows; ++i)
        if (a(i, t) != 0 && detail::abs_of(a(i, t)) < best) {
          best = detail::abs_of(a(i, t));
          br = i;
          bc = t;
        }
      for (Eigen::Index j = t + 1; j < cols; ++j)
        if (a(t, j) != 0 && detail::abs_of(a(t, j)) < best) {
          best = detail::abs_of(a(t, j));
          br = t;
          bc = j;
        }
      a.row(t).swap(a.row(br));
      a.col(t).swap(a.col(bc));
    }
    if (a(t, t) < 0) a.row(t) *= Scalar(-1);
    ++t;
  }
  SmithForm<Scalar> out;
  for (Eigen::Index i = 0; i < std::min(rows, cols); ++i)
    if (a(i, i) != 0) out.invariants.push_back(a(i, i));
  out.rank = static_cast<int>(out.invariants.size());
  out.diagonal = std::move(a);
  return out;
}

}  // namespace galcov
