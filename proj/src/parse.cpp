#include "cmult/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace cmult {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Rat parse_rational(std::string_view token) {
  token = strip(token);
  if (token.empty()) throw std::invalid_argument("empty coefficient");
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  auto slash = token.find('/');
  std::string num(strip(token.substr(0, slash)));
  std::string den = slash == std::string_view::npos ? "1" : std::string(strip(token.substr(slash + 1)));
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed coefficient '" + std::string(token) + "'");
  if (num[0] == '+') num.erase(0, 1);
  Rat q{Int(num), Int(den)};
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
  q.canonicalize();
  return q;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  SymPoly parse() {
    SymPoly p = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at position " + std::to_string(pos_) + " in expression");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return Int(std::string(s_.substr(start, pos_ - start)));
  }

  SymPoly sum() {
    SymPoly acc;
    bool first = true;
    while (true) {
      bool neg = false;
      if (eat('-')) {
        neg = true;
      } else if (!eat('+') && !first) {
        break;
      }
      SymPoly t = product();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  SymPoly product() {
    SymPoly acc = power();
    while (true) {
      skip();
      if (eat('*')) {
        acc = acc * power();
      } else if (pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == 'x' || s_[pos_] == 'a')) {
        acc = acc * power();  // implicit multiplication, e.g. 3x or 2(a1+a0)
      } else {
        break;
      }
    }
    return acc;
  }

  SymPoly power() {
    SymPoly base = atom();
    if (eat('^')) {
      Int e = integer();
      if (e > 64) fail("exponent too large");
      SymPoly r = SymPoly::constant(ParamPoly(1));
      for (long i = 0; i < e.get_si(); ++i) r = r * base;
      return r;
    }
    return base;
  }

  SymPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      SymPoly inner = sum();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (c == 'x') {
      ++pos_;
      return SymPoly::monomial(ParamPoly(1), 1);
    }
    if (c == 'a') {
      ++pos_;
      Int idx = integer();
      if (idx >= kMaxVars) fail("parameter index too large");
      return SymPoly::constant(ParamPoly::variable(static_cast<int>(idx.get_si())));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return SymPoly::constant(ParamPoly(integer()));
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

NumPoly parse_coefficients(std::string_view text) {
  std::vector<Rat> coeffs;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    coeffs.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return NumPoly(std::move(coeffs));
}

SymPoly parse_expression(std::string_view text) { return ExprParser(text).parse(); }

NumPoly parse_numeric_expression(std::string_view text) {
  SymPoly p = parse_expression(text);
  std::vector<Rat> out;
  for (const auto& c : p.coeffs()) {
    if (!c.is_constant()) throw std::invalid_argument("expression mentions parameters");
    out.emplace_back(c.constant_value());
  }
  return NumPoly(std::move(out));
}

std::string format_coefficients(const NumPoly& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ',';
    out += p.coeffs()[i].get_str();
  }
  return out.empty() ? "0" : out;
}

}  // namespace cmult
