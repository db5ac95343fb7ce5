#pragma once

// Generalized Sylvester matrices, subresultants indexed by shift vectors,
// and the discrimination matrix of a single polynomial.

#include <optional>
#include <string>
#include <vector>

#include "cmult/matrix.hpp"

namespace cmult {

using Shifts = std::vector<int>;

/// Row count of the F0 block: max over nonzero shifts of (d_i + shift_i)
/// minus d0 when that is at least d0, otherwise 1.
int leading_shift(const std::vector<int>& degrees, const Shifts& delta);

/// Drops trailing zero shifts.
Shifts trim_shifts(const Shifts& delta);

std::string shifts_to_string(const Shifts& delta);

/// Stacked shift blocks of F0..Ft; row r of block i holds x^(delta_i-1-r)*F_i
/// and column 0 carries the highest power of x.
template <class C>
Matrix<C> generalized_sylvester(const std::vector<XPoly<C>>& f, const Shifts& delta_in) {
  if (f.empty() || f[0].degree() < 1) throw std::invalid_argument("first polynomial must have degree >= 1");
  Shifts delta = trim_shifts(delta_in);
  if (delta.size() + 1 > f.size()) throw std::invalid_argument("more shifts than polynomials");
  std::vector<int> degrees;
  for (std::size_t i = 0; i <= delta.size(); ++i) degrees.push_back(f[i].degree());
  int total = 0;
  for (int s : delta) {
    if (s < 0) throw std::invalid_argument("negative shift");
    total += s;
  }
  const int d0 = degrees[0];
  if (total > d0) throw std::invalid_argument("shift sum exceeds the degree of the first polynomial");
  const int lead = leading_shift(degrees, delta);
  const int rows = lead + total, cols = lead + d0;
  Matrix<C> m(rows, cols);
  int r = 0;
  auto place = [&](const XPoly<C>& g, int power, const std::string& label) {
    // x^power * g occupies the columns of powers power..power+deg g.
    for (int k = 0; k <= g.degree(); ++k) {
      int col = cols - 1 - (power + k);
      if (col < 0) throw std::logic_error("shifted row does not fit the matrix");
      m.at(r, col) = g.coeffs()[k];
    }
    m.labels().push_back(label);
    ++r;
  };
  for (int i = 0; i <= static_cast<int>(delta.size()); ++i) {
    int count = i == 0 ? lead : delta[i - 1];
    for (int s = count - 1; s >= 0; --s) place(f[i], s, "x^" + std::to_string(s) + "*F" + std::to_string(i));
  }
  return m;
}

/// R_delta(F) = dp of the generalized Sylvester matrix.
template <class C>
XPoly<C> subresultant(const std::vector<XPoly<C>>& f, const Shifts& delta) {
  return determinant_polynomial(generalized_sylvester(f, delta));
}

/// Formal degree d0 - |delta| of R_delta(F).
int subresultant_formal_degree(int d0, const Shifts& delta);

/// Coefficient of x^(d0 - |delta|) in R_delta(F).
template <class C>
C psc(const std::vector<XPoly<C>>& f, const Shifts& delta) {
  return subresultant(f, delta).coeff(subresultant_formal_degree(f[0].degree(), delta));
}

/// Default split index for the pseudo-remainder route: the first j with
/// delta_j > delta_{j+1} (0-based), or nullopt when none qualifies.
std::optional<int> prem_split_index(const Shifts& delta);

/// R_delta(F) from prem(R_{delta-e_j}, R_{delta-e_t}) divided by the psc of
/// delta-e_j-e_t. Throws std::domain_error if that psc is zero and
/// std::invalid_argument if delta does not have the required shape.
template <class C>
XPoly<C> subresultant_via_prem(const std::vector<XPoly<C>>& f, const Shifts& delta_in,
                               std::optional<int> split = std::nullopt) {
  Shifts delta = trim_shifts(delta_in);
  const int t = static_cast<int>(delta.size());
  if (t < 2) throw std::invalid_argument("prem route needs at least two nonzero shifts");
  for (int i = 0; i + 1 < t; ++i)
    if (delta[i] < delta[i + 1]) throw std::invalid_argument("prem route needs non-increasing shifts");
  if (!split) split = prem_split_index(delta);
  if (!split || *split < 0 || *split >= t - 1 || delta[*split] <= delta[*split + 1])
    throw std::invalid_argument("prem route needs a strict descent delta_j > delta_{j+1}");
  const int j = *split;
  Shifts minus_j = delta, minus_t = delta, minus_both = delta;
  minus_j[j] -= 1;
  minus_t[t - 1] -= 1;
  minus_both[j] -= 1;
  minus_both[t - 1] -= 1;
  const int d0 = f[0].degree();
  C divisor = psc(f, minus_both);
  if (is_zero(divisor)) throw std::domain_error("prem route divisor vanishes");
  const int formal = subresultant_formal_degree(d0, minus_j);
  XPoly<C> a = subresultant(f, minus_j);
  XPoly<C> b = subresultant(f, minus_t);
  if (b.is_zero()) throw std::domain_error("prem route divisor polynomial vanishes");
  XPoly<C> r = prem_formal(a, formal, b, formal);
  std::vector<C> out = r.coeffs();
  for (auto& c : out) c = exact_quotient(c, divisor);
  return XPoly<C>(std::move(out));
}

/// 2n x 2n matrix interleaving shifted rows of P and of P' (the latter
/// written with formal degree n, i.e. a leading zero).
template <class C>
Matrix<C> discrimination_matrix(const XPoly<C>& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("discrimination matrix needs degree >= 1");
  XPoly<C> dp = derivative(p, 1);
  Matrix<C> m(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i <= n; ++i) {
      int col = k + (n - i);
      if (col >= 2 * n) continue;
      m.at(2 * k, col) = p.coeffs()[i];
      if (i <= dp.degree()) m.at(2 * k + 1, col) = dp.coeffs()[i];
    }
    m.labels().push_back("P shift " + std::to_string(k));
    m.labels().push_back("P' shift " + std::to_string(k));
  }
  return m;
}

/// D_1..D_upto of P: even-order leading principal minors of the
/// discrimination matrix (upto defaults to deg P).
std::vector<ParamPoly> discriminant_sequence(const SymPoly& p, int upto = -1);
std::vector<Rat> discriminant_sequence(const NumPoly& p, int upto = -1);

}  // namespace cmult
