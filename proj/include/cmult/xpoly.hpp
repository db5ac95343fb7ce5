#pragma once

// Dense univariate polynomials in x over either the parameter ring or Q.

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cmult/param_poly.hpp"

namespace cmult {

template <class C>
class XPoly {
 public:
  using Coeff = C;

  XPoly() = default;
  explicit XPoly(std::vector<C> ascending) : coeffs_(std::move(ascending)) { trim(); }
  static XPoly constant(C c) { return XPoly(std::vector<C>{std::move(c)}); }
  /// c * x^k
  static XPoly monomial(C c, int k) {
    std::vector<C> v(k + 1, C(0));
    v[k] = std::move(c);
    return XPoly(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<C>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  C coeff(int i) const { return i >= 0 && i <= degree() ? coeffs_[i] : C(0); }
  const C& leading() const { return coeffs_.back(); }

  friend bool operator==(const XPoly& a, const XPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

  XPoly& operator+=(const XPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  XPoly& operator-=(const XPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (cmult::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (cmult::is_zero(b.coeffs_[j])) continue;
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return XPoly(std::move(out));
  }
  XPoly scaled(const C& s) const {
    std::vector<C> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] * s;
    return XPoly(std::move(out));
  }
  XPoly operator-() const { return scaled(C(-1)); }

  /// Copy with x^k multiplied in.
  XPoly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<C> out(k, C(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return XPoly(std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && cmult::is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  std::vector<C> coeffs_;
};

using SymPoly = XPoly<ParamPoly>;
using NumPoly = XPoly<Rat>;

/// k-th derivative d^k p / dx^k.
template <class C>
XPoly<C> derivative(const XPoly<C>& p, int k) {
  if (k < 0) throw std::invalid_argument("derivative order must be non-negative");
  if (k > p.degree()) return {};
  std::vector<C> out(p.degree() - k + 1);
  for (int i = k; i <= p.degree(); ++i) {
    Int falling = 1;
    for (int j = 0; j < k; ++j) falling *= i - j;
    out[i - k] = p.coeffs()[i] * C(falling);
  }
  return XPoly<C>(std::move(out));
}

Int factorial(int k);

/// derivative(p, k) / k!, with the division checked for exactness.
SymPoly scaled_derivative(const SymPoly& p, int k);
NumPoly scaled_derivative(const NumPoly& p, int k);

/// Derivative tower (P, P', ..., P^(n)) optionally divided by k!.
template <class C>
std::vector<XPoly<C>> derivative_tower(const XPoly<C>& p, bool scaled) {
  std::vector<XPoly<C>> out;
  for (int k = 0; k <= p.degree(); ++k) out.push_back(scaled ? scaled_derivative(p, k) : derivative(p, k));
  return out;
}

/// Pseudo-remainder treating A and B as having the given formal degrees.
/// Missing leading coefficients are taken as zero, so the result is the
/// polynomial identity obtained from generic coefficients, specialized.
template <class C>
XPoly<C> prem_formal(const XPoly<C>& a, int deg_a, const XPoly<C>& b, int deg_b) {
  if (b.is_zero()) throw std::domain_error("prem by the zero polynomial");
  if (deg_a < a.degree() || deg_b < b.degree()) throw std::invalid_argument("formal degree below actual degree");
  if (deg_a < deg_b) return a;
  C lc = b.coeff(deg_b);
  std::vector<C> r(deg_a + 1, C(0));
  for (int i = 0; i <= a.degree(); ++i) r[i] = a.coeffs()[i];
  for (int top = deg_a; top >= deg_b; --top) {
    C lead = r[top];
    for (int i = 0; i < top; ++i) r[i] *= lc;
    r[top] = C(0);
    if (!is_zero(lead)) {
      int s = top - deg_b;
      int last = std::min(deg_b - 1, b.degree());
      for (int i = 0; i <= last; ++i)
        if (!is_zero(b.coeffs()[i])) r[i + s] -= lead * b.coeffs()[i];
    }
  }
  r.resize(deg_b);
  return XPoly<C>(std::move(r));
}

/// Standard pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B.
template <class C>
XPoly<C> prem(const XPoly<C>& a, const XPoly<C>& b) {
  if (b.is_zero()) throw std::domain_error("prem by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  return prem_formal(a, a.degree(), b, b.degree());
}

/// Evaluates every coefficient at `point` (values of a0..an).
NumPoly instantiate(const SymPoly& p, std::span<const Rat> point);

/// Canonical associate: primitive part with positive leading coefficient.
/// Over the parameter ring the sign is fixed by the leading coefficient's
/// lexicographically largest term; numerically the result has coprime
/// integer coefficients.
SymPoly normalize_assoc(const SymPoly& p);
NumPoly normalize_assoc(const NumPoly& p);

/// Monic associate over Q.
NumPoly make_monic(const NumPoly& p);

/// Euclidean division over Q; returns {quotient, remainder}.
std::pair<NumPoly, NumPoly> divide(const NumPoly& a, const NumPoly& b);

/// Monic gcd over Q (zero only when both inputs are zero).
NumPoly gcd(const NumPoly& a, const NumPoly& b);

/// Deterministic text forms, descending powers of x.
std::string to_string(const SymPoly& p);
std::string to_string(const NumPoly& p);

}  // namespace cmult
