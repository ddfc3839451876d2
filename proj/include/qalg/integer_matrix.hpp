#pragma once

// Exact integer linear algebra on Eigen matrices. T is any exact integer
// type with truncating division (long long, boost cpp_int, ...).

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qalg {

template <typename T>
using IntMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using IntVector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using BigMatrix = IntMatrix<boost::multiprecision::cpp_int>;
using I64Matrix = IntMatrix<long long>;
using I64Vector = IntVector<long long>;

namespace detail {

template <typename T>
T abs_value(const T& a) {
  return a < 0 ? T(-a) : a;
}

template <typename T>
T gcd_value(T a, T b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    T r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace detail

/// Fraction-free (Bareiss) row echelon form in place; returns the rank.
/// Every division is exact.
template <typename T>
int bareiss_echelon(IntMatrix<T>& A) {
  const Eigen::Index rows = A.rows(), cols = A.cols();
  Eigen::Index r = 0;
  T prev = 1;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index pivot = r;
    while (pivot < rows && A(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) A.row(pivot).swap(A.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        A(i, j) = T(A(i, j) * A(r, c) - A(i, c) * A(r, j)) / prev;
      }
      A(i, c) = 0;
    }
    prev = A(r, c);
    ++r;
  }
  return static_cast<int>(r);
}

/// Invariant factors d_1 | d_2 | ... (nonzero ones only) of the Smith normal form.
template <typename T>
std::vector<T> smith_invariants(IntMatrix<T> A) {
  using detail::abs_value;
  const Eigen::Index rows = A.rows(), cols = A.cols();
  std::vector<T> out;
  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block goes to (t, t)
      Eigen::Index pr = -1, pc = -1;
      for (Eigen::Index i = t; i < rows; ++i)
        for (Eigen::Index j = t; j < cols; ++j)
          if (A(i, j) != 0 && (pr < 0 || abs_value<T>(A(i, j)) < abs_value<T>(A(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) {
        std::sort(out.begin(), out.end());
        return out;
      }
      A.row(pr).swap(A.row(t));
      A.col(pc).swap(A.col(t));

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (A(i, t) == 0) continue;
        const T f = A(i, t) / A(t, t);
        for (Eigen::Index j = t; j < cols; ++j) A(i, j) -= f * A(t, j);
        if (A(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (A(t, j) == 0) continue;
        const T f = A(t, j) / A(t, t);
        for (Eigen::Index i = t; i < rows; ++i) A(i, j) -= f * A(i, t);
        if (A(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into row t and start over
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (A(i, j) % A(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad >= 0) {
        A.row(t) += A.row(bad);
        continue;
      }
      out.push_back(abs_value<T>(A(t, t)));
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Rank over Q by fraction-free elimination, cross-checked against the
/// Smith normal form for matrices up to 12x12.
template <typename T>
int integer_rank(const IntMatrix<T>& A) {
  IntMatrix<T> work = A;
  const int r = bareiss_echelon(work);
  if (A.rows() <= 12 && A.cols() <= 12) {
    const auto snf = smith_invariants(A);
    if (static_cast<int>(snf.size()) != r) throw std::logic_error("rank mismatch between Bareiss and Smith normal form");
  }
  return r;
}

/// Integer basis (columns) of the rational null space {v : A v = 0}.
template <typename T>
IntMatrix<T> nullspace_basis(const IntMatrix<T>& A) {
  const Eigen::Index cols = A.cols();
  IntMatrix<T> E = A;
  const int r = bareiss_echelon(E);
  // back-substitute to reduced form over Q by tracking pivots
  std::vector<Eigen::Index> pivot_col;
  for (int i = 0; i < r; ++i) {
    Eigen::Index c = 0;
    while (E(i, c) == 0) ++c;
    pivot_col.push_back(c);
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_col) is_pivot[c] = true;

  IntMatrix<T> basis(cols, cols - r);
  Eigen::Index out = 0;
  for (Eigen::Index f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    // v_f free, other free variables 0; rescale whenever a pivot would be fractional
    IntVector<T> v = IntVector<T>::Zero(cols);
    v(f) = 1;
    for (int i = r - 1; i >= 0; --i) {
      const Eigen::Index c = pivot_col[i];
      T s = 0;
      for (Eigen::Index j = c + 1; j < cols; ++j) s += E(i, j) * v(j);
      // E(i,c) v_c + s = 0; rescale v so v_c is integral
      const T g = detail::gcd_value<T>(s, E(i, c));
      const T mult = g == 0 ? T(1) : T(detail::abs_value<T>(E(i, c)) / g);
      if (mult != 1) {
        for (Eigen::Index j = 0; j < cols; ++j) v(j) *= mult;
        s *= mult;
      }
      v(c) = T(-s) / E(i, c);
    }
    T g = 0;
    for (Eigen::Index j = 0; j < cols; ++j) g = detail::gcd_value<T>(g, v(j));
    if (g > 1)
      for (Eigen::Index j = 0; j < cols; ++j) v(j) /= g;
    basis.col(out++) = v;
  }
  return basis;
}

/// Plain triple loop; Eigen's product kernels and boost number expression
/// templates do not mix.
template <typename T>
IntMatrix<T> mat_mul(const IntMatrix<T>& A, const IntMatrix<T>& B) {
  if (A.cols() != B.rows()) throw std::invalid_argument("mat_mul: shape mismatch");
  IntMatrix<T> C(A.rows(), B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < B.cols(); ++j) {
      T s = 0;
      for (Eigen::Index l = 0; l < A.cols(); ++l)
        if (A(i, l) != 0 && B(l, j) != 0) s += A(i, l) * B(l, j);
      C(i, j) = s;
    }
  return C;
}

template <typename T, typename U>
IntMatrix<T> cast_matrix(const IntMatrix<U>& A) {
  IntMatrix<T> out(A.rows(), A.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) out(i, j) = T(A(i, j));
  return out;
}

}  // namespace qalg
