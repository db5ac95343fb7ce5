#include "cmult/matrix.hpp"

#include <bit>
#include <cstdint>
#include <sstream>
#include <unordered_map>

namespace cmult {

namespace {

// Minors of a fixed matrix whose columns are a prefix 0..k-1 and whose rows
// are a k-subset given as a bitmask.
class ColumnMinors {
 public:
  explicit ColumnMinors(const PolyMatrix& m) : m_(m) {
    if (m.rows() > 64) throw std::invalid_argument("expansion determinant supports at most 64 rows");
  }

  const ParamPoly& minor(std::uint64_t rows) {
    if (rows == 0) return one_;
    auto it = memo_.find(rows);
    if (it != memo_.end()) return it->second;
    const int k = std::popcount(rows);
    const int col = k - 1;
    ParamPoly acc;
    int position = 0;
    for (std::uint64_t rest = rows; rest != 0; rest &= rest - 1, ++position) {
      int r = std::countr_zero(rest);
      const ParamPoly& entry = m_.at(r, col);
      if (entry.is_zero()) continue;
      const ParamPoly& sub = minor(rows & ~(std::uint64_t{1} << r));
      if (sub.is_zero()) continue;
      if ((position + col) % 2 == 0)
        acc += entry * sub;
      else
        acc -= entry * sub;
    }
    return memo_.emplace(rows, std::move(acc)).first->second;
  }

 private:
  const PolyMatrix& m_;
  ParamPoly one_{1};
  std::unordered_map<std::uint64_t, ParamPoly> memo_;
};

std::uint64_t prefix_mask(int k) { return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1; }

}  // namespace

ParamPoly expansion_determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  ColumnMinors minors(m);
  return minors.minor(prefix_mask(m.rows()));
}

SymPoly expansion_determinant_polynomial(const PolyMatrix& m) {
  const int p = m.rows(), q = m.cols();
  if (p > q) throw std::invalid_argument("determinant polynomial needs rows <= cols");
  if (p == 0) return SymPoly::constant(ParamPoly(1));
  ColumnMinors minors(m);
  const std::uint64_t all = prefix_mask(p);
  std::vector<ParamPoly> coeffs(q - p + 1);
  for (int i = 0; i <= q - p; ++i) {
    const int col = q - 1 - i;
    ParamPoly acc;
    for (int r = 0; r < p; ++r) {
      const ParamPoly& entry = m.at(r, col);
      if (entry.is_zero()) continue;
      const ParamPoly& sub = minors.minor(all & ~(std::uint64_t{1} << r));
      if (sub.is_zero()) continue;
      if ((r + p - 1) % 2 == 0)
        acc += entry * sub;
      else
        acc -= entry * sub;
    }
    coeffs[i] = std::move(acc);
  }
  return SymPoly(std::move(coeffs));
}

std::vector<ParamPoly> expansion_leading_minors(const PolyMatrix& m, const std::vector<int>& orders) {
  ColumnMinors minors(m);
  std::vector<ParamPoly> out;
  out.reserve(orders.size());
  for (int k : orders) {
    if (k > m.rows() || k > m.cols()) throw std::out_of_range("minor order exceeds matrix size");
    out.push_back(minors.minor(prefix_mask(k)));
  }
  return out;
}

std::vector<Rat> leading_minors(const NumMatrix& m, const std::vector<int>& orders) {
  std::vector<Rat> out(orders.size());
  if (orders.empty()) return out;
  int top = 0;
  for (int k : orders) top = std::max(top, k);
  if (top > m.rows() || top > m.cols()) throw std::out_of_range("minor order exceeds matrix size");
  NumMatrix a = m.submatrix(top, top);
  // pivot[k] holds the leading (k+1)-minor while elimination is unbroken.
  std::vector<Rat> pivot;
  Rat prev = 1;
  for (int k = 0; k < top; ++k) {
    if (sgn(a.at(k, k)) == 0) {
      pivot.push_back(0);
      break;
    }
    pivot.push_back(a.at(k, k));
    for (int i = k + 1; i < top; ++i) {
      for (int j = k + 1; j < top; ++j) a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  for (std::size_t i = 0; i < orders.size(); ++i) {
    int k = orders[i];
    if (k == 0)
      out[i] = 1;
    else if (k <= static_cast<int>(pivot.size()))
      out[i] = pivot[k - 1];
    else
      out[i] = bareiss_determinant(m.submatrix(k, k));
  }
  return out;
}

ParamPoly determinant(const PolyMatrix& m) { return expansion_determinant(m); }
Rat determinant(const NumMatrix& m) { return bareiss_determinant(m); }
SymPoly determinant_polynomial(const PolyMatrix& m) { return expansion_determinant_polynomial(m); }
NumPoly determinant_polynomial(const NumMatrix& m) { return bareiss_determinant_polynomial(m); }

namespace {

template <class C, class F>
std::string matrix_text(const Matrix<C>& m, F entry_text) {
  std::ostringstream os;
  for (int r = 0; r < m.rows(); ++r) {
    os << "[";
    for (int c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << entry_text(m.at(r, c));
    os << "]";
    if (r < static_cast<int>(m.labels().size())) os << "  " << m.labels()[r];
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string to_string(const PolyMatrix& m) {
  return matrix_text(m, [](const ParamPoly& p) { return p.to_string(); });
}

std::string to_string(const NumMatrix& m) {
  return matrix_text(m, [](const Rat& q) { return q.get_str(); });
}

}  // namespace cmult
