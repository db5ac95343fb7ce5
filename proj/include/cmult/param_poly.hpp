#pragma once

// Sparse polynomials in the parameters a0..an with arbitrary-precision
// integer coefficients.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cmult {

using Int = mpz_class;
using Rat = mpq_class;

inline constexpr int kMaxVars = 16;
inline constexpr unsigned kMaxExponent = 255;

/// Exponent vector over at most kMaxVars parameters, one byte per variable.
/// Variable i lives in byte i, so comparing the packed value as an unsigned
/// integer is the lexicographic order with a_n most significant.
class Monomial {
 public:
  using Bits = unsigned __int128;

  constexpr Monomial() = default;

  static Monomial variable(int index, unsigned exponent = 1);
  static Monomial from_exponents(std::span<const unsigned> exponents);
  static constexpr Monomial from_bits(unsigned __int128 bits) { return Monomial(bits); }

  unsigned exponent(int index) const {
    return static_cast<unsigned>(bits_ >> (8 * index)) & 0xffu;
  }
  std::vector<unsigned> exponents(int nvars) const;
  unsigned total_degree() const;
  bool is_one() const { return bits_ == 0; }
  /// Number of variables up to and including the highest one present.
  int support_width() const;

  bool divides(Monomial other) const;

  // Caller guarantees that no exponent exceeds kMaxExponent.
  Monomial operator*(Monomial other) const { return Monomial(bits_ + other.bits_); }
  // Caller guarantees divides().
  Monomial operator/(Monomial other) const { return Monomial(bits_ - other.bits_); }

  Bits bits() const { return bits_; }

  friend bool operator==(Monomial a, Monomial b) { return a.bits_ == b.bits_; }
  friend bool operator<(Monomial a, Monomial b) { return a.bits_ < b.bits_; }
  friend bool operator>(Monomial a, Monomial b) { return a.bits_ > b.bits_; }
  friend bool operator<=(Monomial a, Monomial b) { return a.bits_ <= b.bits_; }
  friend bool operator>=(Monomial a, Monomial b) { return a.bits_ >= b.bits_; }

 private:
  explicit constexpr Monomial(Bits b) : bits_(b) {}
  Bits bits_ = 0;
};

struct Term {
  Monomial mono;
  Int coeff;
};

/// Element of Z[a0, ..., an]. Terms are kept sorted by strictly decreasing
/// monomial and never carry a zero coefficient.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(long constant);  // NOLINT(google-explicit-constructor)
  ParamPoly(const Int& constant);  // NOLINT(google-explicit-constructor)

  static ParamPoly variable(int index);
  static ParamPoly monomial(const Int& coeff, Monomial mono);
  /// Sorts, merges equal monomials and drops zeros.
  static ParamPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Value of a constant polynomial; throws if not constant.
  Int constant_value() const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// Highest exponent of any single variable.
  unsigned max_exponent() const;
  /// 1 + index of the highest variable appearing (0 for constants).
  int support_width() const;
  bool is_homogeneous() const;

  /// Non-negative gcd of all coefficients (0 for the zero polynomial).
  Int content() const;

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);
  ParamPoly& operator*=(const Int& scalar);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const Int& s) { return a *= s; }
  friend ParamPoly operator*(ParamPoly a, long s) { return a *= Int(s); }

  friend bool operator==(const ParamPoly& a, const ParamPoly& b);
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  /// Divides every coefficient by `divisor`; throws std::domain_error if any
  /// division leaves a remainder.
  void divide_exact(const Int& divisor);

  Rat evaluate(std::span<const Rat> values) const;
  /// Specialized evaluation at an integer point.
  Int evaluate(std::span<const Int> values) const;

  /// Deterministic text form, terms in decreasing lexicographic order,
  /// e.g. "-2*a2^3 + 9*a1*a2*a3".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Exact quotient a / b in Z[a]; throws std::domain_error when b does not
/// divide a or when b is zero.
ParamPoly divide_exact(const ParamPoly& a, const ParamPoly& b);

inline bool is_zero(const ParamPoly& p) { return p.is_zero(); }
inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_zero(const Int& z) { return sgn(z) == 0; }

/// Exact ring division used by fraction-free elimination.
inline ParamPoly exact_quotient(const ParamPoly& a, const ParamPoly& b) { return divide_exact(a, b); }
Rat exact_quotient(const Rat& a, const Rat& b);
Int exact_quotient(const Int& a, const Int& b);

}  // namespace cmult
