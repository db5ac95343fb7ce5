#include "cmult/param_poly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace cmult {

Monomial Monomial::variable(int index, unsigned exponent) {
  if (index < 0 || index >= kMaxVars) throw std::out_of_range("monomial variable index out of range");
  if (exponent > kMaxExponent) throw std::overflow_error("monomial exponent exceeds 255");
  return Monomial(static_cast<Bits>(exponent) << (8 * index));
}

Monomial Monomial::from_exponents(std::span<const unsigned> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars))
    throw std::out_of_range("too many variables for a monomial");
  Bits b = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > kMaxExponent) throw std::overflow_error("monomial exponent exceeds 255");
    b |= static_cast<Bits>(exponents[i]) << (8 * i);
  }
  return Monomial(b);
}

std::vector<unsigned> Monomial::exponents(int nvars) const {
  std::vector<unsigned> out(nvars);
  for (int i = 0; i < nvars; ++i) out[i] = exponent(i);
  return out;
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (Bits b = bits_; b != 0; b >>= 8) d += static_cast<unsigned>(b & 0xff);
  return d;
}

int Monomial::support_width() const {
  int w = 0;
  for (Bits b = bits_; b != 0; b >>= 8) ++w;
  return w;
}

bool Monomial::divides(Monomial other) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (exponent(i) > other.exponent(i)) return false;
  return true;
}

// ---------------------------------------------------------------------------

ParamPoly::ParamPoly(long constant) {
  if (constant != 0) terms_.push_back({Monomial(), Int(constant)});
}

ParamPoly::ParamPoly(const Int& constant) {
  if (sgn(constant) != 0) terms_.push_back({Monomial(), constant});
}

ParamPoly ParamPoly::variable(int index) { return monomial(Int(1), Monomial::variable(index)); }

ParamPoly ParamPoly::monomial(const Int& coeff, Monomial mono) {
  ParamPoly p;
  if (sgn(coeff) != 0) p.terms_.push_back({mono, coeff});
  return p;
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono > b.mono; });
  ParamPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

Int ParamPoly::constant_value() const {
  if (!is_constant()) throw std::domain_error("polynomial is not constant: " + to_string());
  return terms_.empty() ? Int(0) : terms_[0].coeff;
}

int ParamPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.total_degree()));
  return d;
}

unsigned ParamPoly::max_exponent() const {
  unsigned m = 0;
  for (const auto& t : terms_)
    for (int i = 0; i < kMaxVars; ++i) m = std::max(m, t.mono.exponent(i));
  return m;
}

int ParamPoly::support_width() const {
  int w = 0;
  for (const auto& t : terms_) w = std::max(w, t.mono.support_width());
  return w;
}

bool ParamPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = terms_[0].mono.total_degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.total_degree() == d; });
}

Int ParamPoly::content() const {
  Int g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) mpz_neg(t.coeff.get_mpz_t(), t.coeff.get_mpz_t());
  return r;
}

namespace {

// Merges two sorted term lists, with `sign` = -1 for subtraction.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].mono > a[i].mono) {
      out.push_back(b[j++]);
      if (sign < 0) mpz_neg(out.back().coeff.get_mpz_t(), out.back().coeff.get_mpz_t());
    } else {
      Int c = sign < 0 ? Int(a[i].coeff - b[j].coeff) : Int(a[i].coeff + b[j].coeff);
      if (sgn(c) != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ParamPoly& ParamPoly::operator+=(const ParamPoly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  terms_ = merge_terms(terms_, other.terms_, 1);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& other) { return *this = *this * other; }

ParamPoly& ParamPoly::operator*=(const Int& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

namespace {

// Open-addressing table from monomial to accumulator slot. Accumulation is
// where multiplication spends its time: products of the dense homogeneous
// polynomials met here collapse onto far fewer monomials than there are
// term pairs.
template <class Acc>
class ProductAccumulator {
 public:
  explicit ProductAccumulator(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    slots_.assign(cap, 0);
    keys_.reserve(expected);
    vals_.reserve(expected);
  }

  Acc& at(Monomial::Bits key) {
    std::size_t mask = slots_.size() - 1;
    std::size_t h = hash(key) & mask;
    while (true) {
      std::uint32_t s = slots_[h];
      if (s == 0) break;
      if (keys_[s - 1] == key) return vals_[s - 1];
      h = (h + 1) & mask;
    }
    keys_.push_back(key);
    vals_.emplace_back();
    slots_[h] = static_cast<std::uint32_t>(keys_.size());
    if (2 * keys_.size() > slots_.size()) grow();
    return vals_.back();
  }

  std::vector<Monomial::Bits>& keys() { return keys_; }
  std::vector<Acc>& values() { return vals_; }

 private:
  static std::size_t hash(Monomial::Bits key) {
    auto lo = static_cast<std::uint64_t>(key);
    auto hi = static_cast<std::uint64_t>(key >> 64);
    std::uint64_t x = lo ^ (hi * 0x9E3779B97F4A7C15ull);
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }

  void grow() {
    std::vector<std::uint32_t> next(slots_.size() * 2, 0);
    std::size_t mask = next.size() - 1;
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      std::size_t h = hash(keys_[i]) & mask;
      while (next[h] != 0) h = (h + 1) & mask;
      next[h] = static_cast<std::uint32_t>(i + 1);
    }
    slots_.swap(next);
  }

  std::vector<std::uint32_t> slots_;
  std::vector<Monomial::Bits> keys_;
  std::vector<Acc> vals_;
};

void set_from_int128(Int& out, __int128 v) {
  bool neg = v < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::uint64_t parts[2] = {static_cast<std::uint64_t>(mag), static_cast<std::uint64_t>(mag >> 64)};
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, parts);
  if (neg) mpz_neg(out.get_mpz_t(), out.get_mpz_t());
}

std::size_t max_bits(const std::vector<Term>& ts, bool& fits_long) {
  std::size_t m = 0;
  fits_long = true;
  for (const auto& t : ts) {
    m = std::max(m, mpz_sizeinbase(t.coeff.get_mpz_t(), 2));
    if (!mpz_fits_slong_p(t.coeff.get_mpz_t())) fits_long = false;
  }
  return m;
}

template <class Acc>
std::vector<Term> drain(ProductAccumulator<Acc>& table, void (*finish)(Int&, const Acc&)) {
  auto& keys = table.keys();
  auto& vals = table.values();
  std::vector<std::uint32_t> order(keys.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) { return keys[x] > keys[y]; });
  std::vector<Term> out;
  out.reserve(order.size());
  Int c;
  for (auto i : order) {
    finish(c, vals[i]);
    if (sgn(c) != 0) out.push_back({Monomial::from_bits(keys[i]), c});
  }
  return out;
}

struct SmallTerm {
  Monomial::Bits mono;
  long coeff;
};

std::vector<SmallTerm> to_small(const std::vector<Term>& ts) {
  std::vector<SmallTerm> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back({t.mono.bits(), mpz_get_si(t.coeff.get_mpz_t())});
  return out;
}

std::vector<Term> multiply_small(const std::vector<Term>& large, const std::vector<Term>& small) {
  auto a = to_small(large);
  auto b = to_small(small);
  ProductAccumulator<__int128> table(2 * a.size());
  for (const auto& ta : a)
    for (const auto& tb : b) table.at(ta.mono + tb.mono) += static_cast<__int128>(ta.coeff) * tb.coeff;
  return drain<__int128>(table, +[](Int& out, const __int128& v) { set_from_int128(out, v); });
}

std::vector<Term> multiply_big(const std::vector<Term>& large, const std::vector<Term>& small) {
  ProductAccumulator<Int> table(2 * large.size());
  for (const auto& ta : large) {
    Monomial::Bits ka = ta.mono.bits();
    for (const auto& tb : small)
      mpz_addmul(table.at(ka + tb.mono.bits()).get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
  }
  return drain<Int>(table, +[](Int& out, const Int& v) { out = v; });
}

}  // namespace

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.max_exponent() + b.max_exponent() > kMaxExponent)
    throw std::overflow_error("parameter exponent exceeds 255 in product");
  const auto& small = a.size() <= b.size() ? a.terms_ : b.terms_;
  const auto& large = a.size() <= b.size() ? b.terms_ : a.terms_;
  if (small.size() == 1) {
    const Term& s = small[0];
    r.terms_.reserve(large.size());
    for (const auto& t : large) r.terms_.push_back({t.mono * s.mono, t.coeff * s.coeff});
    return r;
  }
  bool long_small = false, long_large = false;
  std::size_t bits = max_bits(small, long_small) + max_bits(large, long_large);
  // Each accumulated sum has at most small.size() products.
  if (long_small && long_large && bits + std::bit_width(small.size()) < 126)
    r.terms_ = multiply_small(large, small);
  else
    r.terms_ = multiply_big(large, small);
  return r;
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

void ParamPoly::divide_exact(const Int& divisor) {
  if (sgn(divisor) == 0) throw std::domain_error("division by zero");
  for (auto& t : terms_) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), divisor.get_mpz_t()))
      throw std::domain_error("inexact integer division of polynomial coefficients");
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), divisor.get_mpz_t());
  }
}

namespace {

template <class V>
V evaluate_terms(const std::vector<Term>& terms, std::span<const V> values) {
  int width = 0;
  unsigned maxe = 0;
  for (const auto& t : terms) {
    width = std::max(width, t.mono.support_width());
    for (int i = 0; i < kMaxVars; ++i) maxe = std::max(maxe, t.mono.exponent(i));
  }
  if (static_cast<std::size_t>(width) > values.size())
    throw std::out_of_range("evaluation point has too few coordinates");
  std::vector<std::vector<V>> powers(width);
  for (int i = 0; i < width; ++i) {
    powers[i].resize(maxe + 1);
    powers[i][0] = 1;
    for (unsigned e = 1; e <= maxe; ++e) powers[i][e] = powers[i][e - 1] * values[i];
  }
  V sum = 0, term;
  for (const auto& t : terms) {
    term = t.coeff;
    for (int i = 0; i < width; ++i) {
      unsigned e = t.mono.exponent(i);
      if (e != 0) term *= powers[i][e];
    }
    sum += term;
  }
  return sum;
}

}  // namespace

Rat ParamPoly::evaluate(std::span<const Rat> values) const { return evaluate_terms<Rat>(terms_, values); }

Int ParamPoly::evaluate(std::span<const Int> values) const { return evaluate_terms<Int>(terms_, values); }

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Int mag = abs(t.coeff);
    bool neg = sgn(t.coeff) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || t.mono.is_one()) {
      os << mag.get_str();
      wrote = true;
    }
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned e = t.mono.exponent(i);
      if (e == 0) continue;
      if (wrote) os << "*";
      os << "a" << i;
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

ParamPoly divide_exact(const ParamPoly& a, const ParamPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (b.size() == 1 && b.leading_term().mono.is_one()) {
    ParamPoly q = a;
    q.divide_exact(b.leading_term().coeff);
    return q;
  }
  std::vector<Term> quotient;
  ParamPoly rem = a;
  const Term& lb = b.leading_term();
  while (!rem.is_zero()) {
    const Term& lr = rem.leading_term();
    if (!lb.mono.divides(lr.mono) || !mpz_divisible_p(lr.coeff.get_mpz_t(), lb.coeff.get_mpz_t()))
      throw std::domain_error("polynomial division is not exact");
    Int c;
    mpz_divexact(c.get_mpz_t(), lr.coeff.get_mpz_t(), lb.coeff.get_mpz_t());
    ParamPoly step = ParamPoly::monomial(c, lr.mono / lb.mono);
    quotient.push_back(step.leading_term());
    rem -= step * b;
  }
  return ParamPoly::from_terms(std::move(quotient));
}

Rat exact_quotient(const Rat& a, const Rat& b) {
  if (sgn(b) == 0) throw std::domain_error("division by zero");
  return a / b;
}

Int exact_quotient(const Int& a, const Int& b) {
  if (sgn(b) == 0) throw std::domain_error("division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw std::domain_error("inexact integer division");
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace cmult
