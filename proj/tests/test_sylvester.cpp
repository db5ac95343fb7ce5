#include <random>

#include "cmult/partitions.hpp"
#include "cmult/signlists.hpp"
#include "cmult/sylvester.hpp"
#include "doctest.h"

using namespace cmult;

namespace {

NumPoly num(std::initializer_list<long> ascending) {
  std::vector<Rat> v;
  for (long c : ascending) v.emplace_back(c);
  return NumPoly(v);
}

ParamPoly a(int i) { return ParamPoly::variable(i); }

SymPoly generic(int n) {
  std::vector<ParamPoly> c;
  for (int i = 0; i <= n; ++i) c.push_back(a(i));
  return SymPoly(c);
}

template <class C>
std::vector<XPoly<C>> tower(const XPoly<C>& p, bool scaled) {
  return derivative_tower(p, scaled);
}

const NumPoly kSeptic = num({-1, 1, 1, -1, 1, -1, -1, 1});

}  // namespace

TEST_CASE("determinant polynomial of small matrices") {
  NumMatrix m(2, 3);
  long vals[2][3] = {{1, 2, 3}, {4, 5, 6}};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) m.at(r, c) = vals[r][c];
  CHECK(determinant_polynomial(m) == num({-6, -3}));

  PolyMatrix pm(2, 3);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) pm.at(r, c) = ParamPoly(vals[r][c]);
  CHECK(determinant_polynomial(pm) == SymPoly({ParamPoly(-6), ParamPoly(-3)}));

  NumMatrix sq(2, 2);
  sq.at(0, 0) = 2;
  sq.at(0, 1) = 7;
  sq.at(1, 0) = 1;
  sq.at(1, 1) = 3;
  CHECK(determinant_polynomial(sq) == num({-1}));
  CHECK_THROWS_AS(determinant_polynomial(NumMatrix(3, 2)), std::invalid_argument);
}

TEST_CASE("the degree-7 example: matrix shapes and incremental gcds") {
  auto raw = tower(kSeptic, false);
  auto scaled = tower(kSeptic, true);

  NumMatrix m1 = generalized_sylvester(raw, {4});
  CHECK(m1.rows() == 7);
  CHECK(m1.cols() == 10);
  // First row: x^2 * P, last row: P'.
  CHECK(m1.at(0, 0) == 1);
  CHECK(m1.at(0, 7) == -1);
  CHECK(m1.at(6, 3) == 7);
  CHECK(m1.at(6, 9) == 1);
  CHECK(determinant_polynomial(m1) == num({-1536, 1536, 1536, -1536}));

  NumMatrix m2 = generalized_sylvester(scaled, {4, 2});
  CHECK(m2.rows() == 9);
  CHECK(m2.cols() == 10);

  CHECK(subresultant(raw, {4, 2}) == num({1179648, -1179648}));
  CHECK(subresultant(raw, {4, 2, 1}) == num({-56623104}));
  // Dividing the rows of P'' by 2 and of P''' by 6 scales the determinant
  // polynomial by the product of the row factors.
  CHECK(subresultant(scaled, {4, 2}) == subresultant(raw, {4, 2}).scaled(Rat(1, 4)));
  CHECK(subresultant(scaled, {4, 2, 1}) == subresultant(raw, {4, 2, 1}).scaled(Rat(1, 24)));
  CHECK(subresultant(scaled, {4}) == subresultant(raw, {4}));
  CHECK(normalize_assoc(subresultant(raw, {4})) == num({1, -1, -1, 1}));
}

TEST_CASE("degenerate shift vectors") {
  auto f = tower(kSeptic, false);
  NumMatrix m = generalized_sylvester(f, {0, 0});
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 8);
  CHECK(subresultant(f, {}) == kSeptic);
  CHECK(subresultant(f, {1}) == f[1]);
  // An internal zero leaves an empty block for F1.
  NumMatrix gap = generalized_sylvester(f, {0, 2});
  CHECK(gap.rows() == leading_shift({7, 6, 5}, {0, 2}) + 2);
  CHECK_THROWS_AS(generalized_sylvester(f, {5, 3}), std::invalid_argument);
}

TEST_CASE("subresultants of the generic cubic") {
  auto f = tower(generic(3), false);
  CHECK(psc(f, {1}) == a(3) * 3);
  SymPoly r11 = subresultant(f, {1, 1});
  CHECK(r11 == SymPoly({a(3) * a(2) * 6, a(3) * a(3) * 18}));
  SymPoly r20 = subresultant(f, {2, 0});
  CHECK(r20 == SymPoly({a(3) * (a(0) * a(3) * 9 - a(1) * a(2)), a(3) * (a(1) * a(3) * 6 - a(2) * a(2) * 2)}));
  ParamPoly disc = a(0) * a(3) * a(3) * 27 - a(1) * a(2) * a(3) * 9 + a(2) * a(2) * a(2) * 2;
  SymPoly expected = SymPoly::constant(a(3) * disc * -2);
  CHECK(subresultant_via_prem(f, {2, 1}) == expected);
  CHECK(subresultant(f, {2, 1}) == expected);
  CHECK(subresultant(f, {2}).degree() <= 1);
}

TEST_CASE("expansion and fraction-free elimination agree on symbolic matrices") {
  for (int n = 3; n <= 4; ++n) {
    auto f = tower(generic(n), true);
    for (const auto& delta : enumerate_partitions(n)) {
      auto m = generalized_sylvester(f, delta);
      CHECK(expansion_determinant_polynomial(m) == bareiss_determinant_polynomial(m));
    }
  }
}

TEST_CASE("pseudo-remainder route equals the determinant route") {
  for (bool scaled : {false, true}) {
    for (int n = 3; n <= 5; ++n) {
      auto f = tower(generic(n), scaled);
      std::vector<Partition> all = enumerate_partitions(n);
      for (const auto& small : enumerate_smaller_partitions(n)) all.push_back(small);
      for (const auto& delta : all) {
        if (!prem_split_index(delta) || delta.back() < 1) continue;
        CAPTURE(to_string(delta));
        CAPTURE(scaled);
        CHECK(subresultant_via_prem(f, delta) == subresultant(f, delta));
      }
    }
  }
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + trial % 6;
    std::vector<Rat> c;
    for (int i = 0; i <= n; ++i) c.emplace_back(static_cast<long>(rng() % 21) - 10);
    if (sgn(c.back()) == 0) c.back() = 1;
    auto f = tower(NumPoly(c), true);
    for (const auto& delta : enumerate_partitions(n - 1)) {
      if (!prem_split_index(delta)) continue;
      try {
        CHECK(subresultant_via_prem(f, delta) == subresultant(f, delta));
      } catch (const std::domain_error&) {
        // The divisor vanished at this point; the determinant route stands.
      }
    }
  }
}

TEST_CASE("prem route rejects a vanishing divisor") {
  // x^3: every lower-order principal coefficient vanishes.
  auto f = tower(num({0, 0, 0, 1}), false);
  CHECK_THROWS_AS(subresultant_via_prem(f, {2, 1}), std::domain_error);
  CHECK_THROWS_AS(subresultant_via_prem(f, {1, 1}), std::invalid_argument);
}

TEST_CASE("discriminant sequences") {
  auto d = discriminant_sequence(num({1, 0, 1}));
  CHECK(d == std::vector<Rat>{2, -4});
  auto s = discriminant_sequence(generic(4), 1);
  CHECK(s[0] == a(4) * a(4) * 4);
  auto sym = discriminant_sequence(generic(3));
  std::vector<Rat> pt = {3, -1, 4, 2};
  auto num_seq = discriminant_sequence(NumPoly(pt));
  for (int j = 0; j < 3; ++j) CHECK(sym[j].evaluate(std::span<const Rat>(pt)) == num_seq[j]);
  // (x-1)^2 (x-2) (x^2+1): two distinct real roots and one imaginary pair.
  CHECK(count_roots(num({-2, 5, -6, 6, -4, 1})) == RootCounts{2, 1});
}

TEST_CASE("leading minors fall back past a zero pivot") {
  NumMatrix m(3, 3);
  long vals[3][3] = {{0, 1, 2}, {1, 0, 3}, {4, 5, 6}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m.at(r, c) = vals[r][c];
  auto minors = leading_minors(m, {1, 2, 3});
  CHECK(minors[0] == 0);
  CHECK(minors[1] == -1);
  CHECK(minors[2] == bareiss_determinant(m));
}

TEST_CASE("scaling the first polynomial scales the subresultant by a power") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + trial % 4;
    std::vector<Rat> c;
    for (int i = 0; i <= n; ++i) c.emplace_back(static_cast<long>(rng() % 15) - 7);
    c.back() = 1 + rng() % 5;
    auto f = tower(NumPoly(c), true);
    Shifts delta = {n - 1 > 1 ? 2 : 1};
    auto g = f;
    g[0] = g[0].scaled(Rat(3));
    std::vector<int> degrees = {f[0].degree(), f[1].degree()};
    int lead = leading_shift(degrees, delta);
    Rat factor = 1;
    for (int i = 0; i < lead; ++i) factor *= 3;
    CHECK(subresultant(g, delta) == subresultant(f, delta).scaled(factor));
  }
}
