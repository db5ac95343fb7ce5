#pragma once

// Dense matrices over the parameter ring or Q, with exact determinants.

#include <string>
#include <vector>

#include "cmult/xpoly.hpp"

namespace cmult {

template <class C>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, C(0)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  C& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const C& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  /// Optional provenance per row, e.g. "x^2*F1".
  std::vector<std::string>& labels() { return labels_; }
  const std::vector<std::string>& labels() const { return labels_; }

  Matrix submatrix(int row_count, int col_count) const {
    Matrix m(row_count, col_count);
    for (int r = 0; r < row_count; ++r)
      for (int c = 0; c < col_count; ++c) m.at(r, c) = at(r, c);
    return m;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<C> data_;
  std::vector<std::string> labels_;
};

using PolyMatrix = Matrix<ParamPoly>;
using NumMatrix = Matrix<Rat>;

/// Fraction-free Gaussian elimination with row pivoting (Bareiss).
template <class C>
C bareiss_determinant(Matrix<C> m);

/// dp M = sum_i det(M_1..M_{p-1}, M_{q-i}) x^i for a p x q matrix, p <= q,
/// by one Bareiss pass over the shared first p-1 columns.
template <class C>
XPoly<C> bareiss_determinant_polynomial(Matrix<C> m);

/// Same quantities by memoized cofactor expansion along columns. Every
/// intermediate is an actual minor, so no ring division is needed; this is
/// the route used for parametric entries.
ParamPoly expansion_determinant(const PolyMatrix& m);
SymPoly expansion_determinant_polynomial(const PolyMatrix& m);

/// Leading principal minors of orders `orders` (ascending), sharing the
/// expansion memo between them.
std::vector<ParamPoly> expansion_leading_minors(const PolyMatrix& m, const std::vector<int>& orders);

/// Leading principal minors over Q; uses one elimination pass while pivots
/// stay nonzero and falls back to individual determinants afterwards.
std::vector<Rat> leading_minors(const NumMatrix& m, const std::vector<int>& orders);

/// Dispatches to the route suited to the coefficient ring.
ParamPoly determinant(const PolyMatrix& m);
Rat determinant(const NumMatrix& m);
SymPoly determinant_polynomial(const PolyMatrix& m);
NumPoly determinant_polynomial(const NumMatrix& m);

std::string to_string(const PolyMatrix& m);
std::string to_string(const NumMatrix& m);

// ---------------------------------------------------------------------------

template <class C>
C bareiss_determinant(Matrix<C> m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return C(1);
  int sign = 1;
  C prev(1);
  for (int k = 0; k < n - 1; ++k) {
    int piv = k;
    while (piv < n && is_zero(m.at(piv, k))) ++piv;
    if (piv == n) return C(0);
    if (piv != k) {
      for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(piv, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        C v = m.at(k, k) * m.at(i, j);
        if (!is_zero(m.at(i, k)) && !is_zero(m.at(k, j))) v -= m.at(i, k) * m.at(k, j);
        m.at(i, j) = exact_quotient(v, prev);
      }
      m.at(i, k) = C(0);
    }
    prev = m.at(k, k);
  }
  C det = m.at(n - 1, n - 1);
  return sign < 0 ? C(-det) : det;
}

template <class C>
XPoly<C> bareiss_determinant_polynomial(Matrix<C> m) {
  const int p = m.rows(), q = m.cols();
  if (p > q) throw std::invalid_argument("determinant polynomial needs rows <= cols");
  if (p == 0) return XPoly<C>::constant(C(1));
  int sign = 1;
  C prev(1);
  for (int k = 0; k < p - 1; ++k) {
    int piv = k;
    while (piv < p && is_zero(m.at(piv, k))) ++piv;
    // Columns 0..k are dependent on every row set: all minors vanish.
    if (piv == p) return {};
    if (piv != k) {
      for (int c = 0; c < q; ++c) std::swap(m.at(k, c), m.at(piv, c));
      sign = -sign;
    }
    for (int i = k + 1; i < p; ++i) {
      for (int j = k + 1; j < q; ++j) {
        C v = m.at(k, k) * m.at(i, j);
        if (!is_zero(m.at(i, k)) && !is_zero(m.at(k, j))) v -= m.at(i, k) * m.at(k, j);
        m.at(i, j) = exact_quotient(v, prev);
      }
      m.at(i, k) = C(0);
    }
    prev = m.at(k, k);
  }
  std::vector<C> coeffs(q - p + 1);
  for (int i = 0; i <= q - p; ++i) {
    const C& v = m.at(p - 1, q - 1 - i);
    coeffs[i] = sign < 0 ? C(-v) : v;
  }
  return XPoly<C>(std::move(coeffs));
}

}  // namespace cmult
