#include "cmult/xpoly.hpp"

#include <sstream>

namespace cmult {

Int factorial(int k) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

SymPoly scaled_derivative(const SymPoly& p, int k) {
  SymPoly d = derivative(p, k);
  Int f = factorial(k);
  std::vector<ParamPoly> out = d.coeffs();
  for (auto& c : out) c.divide_exact(f);  // throws if k! does not divide
  return SymPoly(std::move(out));
}

NumPoly scaled_derivative(const NumPoly& p, int k) {
  NumPoly d = derivative(p, k);
  Rat inv(1, 1);
  inv /= Rat(factorial(k));
  return d.scaled(inv);
}

NumPoly instantiate(const SymPoly& p, std::span<const Rat> point) {
  std::vector<Rat> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.evaluate(point));
  return NumPoly(std::move(out));
}

SymPoly normalize_assoc(const SymPoly& p) {
  if (p.is_zero()) throw std::domain_error("normalize_assoc of the zero polynomial");
  Int g = 0;
  for (const auto& c : p.coeffs()) {
    Int cc = c.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cc.get_mpz_t());
  }
  if (sgn(p.leading().leading_term().coeff) < 0) g = -g;
  std::vector<ParamPoly> out = p.coeffs();
  for (auto& c : out) c.divide_exact(g);
  return SymPoly(std::move(out));
}

NumPoly normalize_assoc(const NumPoly& p) {
  if (p.is_zero()) throw std::domain_error("normalize_assoc of the zero polynomial");
  Int den = 1, num = 0;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rat scale(den, num);
  scale.canonicalize();
  if (sgn(p.leading()) < 0) scale = -scale;
  return p.scaled(scale);
}

NumPoly make_monic(const NumPoly& p) {
  if (p.is_zero()) return p;
  Rat inv = 1 / p.leading();
  return p.scaled(inv);
}

std::pair<NumPoly, NumPoly> divide(const NumPoly& a, const NumPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  std::vector<Rat> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {NumPoly(), a};
  std::vector<Rat> q(a.degree() - db + 1);
  Rat inv = 1 / b.leading();
  for (int top = a.degree(); top >= db; --top) {
    Rat c = r[top] * inv;
    q[top - db] = c;
    if (sgn(c) == 0) continue;
    for (int i = 0; i <= db; ++i) r[i + top - db] -= c * b.coeffs()[i];
  }
  r.resize(db);
  return {NumPoly(std::move(q)), NumPoly(std::move(r))};
}

NumPoly gcd(const NumPoly& a, const NumPoly& b) {
  NumPoly x = a, y = b;
  while (!y.is_zero()) {
    NumPoly r = divide(x, y).second;
    x = std::move(y);
    y = make_monic(r);
  }
  return make_monic(x);
}

std::string to_string(const SymPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const ParamPoly& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << "(" << c.to_string() << ")";
      continue;
    }
    if (c != ParamPoly(1)) os << "(" << c.to_string() << ")*";
    os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

std::string to_string(const NumPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rat& c = p.coeffs()[k];
    if (sgn(c) == 0) continue;
    Rat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      os << mag.get_str();
      if (k > 0) os << "*";
    }
    if (k > 0) os << "x";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace cmult
