#include <random>

#include "cmult/parse.hpp"
#include "cmult/signlists.hpp"
#include "cmult/sylvester.hpp"
#include "doctest.h"

using namespace cmult;

TEST_CASE("revised sign lists") {
  CHECK(revise({1, 0, 0, -1}) == SignList{1, -1, -1, -1});
  CHECK(revise({1, 1, 1}) == SignList{1, 1, 1});
  CHECK(revise({1, 0, 0, 0, 0, 1}) == SignList{1, -1, -1, 1, 1, 1});
  CHECK(revise({-1, 0, 1}) == SignList{-1, 1, 1});
  CHECK(revise({0, 1, 0, 0}) == SignList{0, 1, 0, 0});
  CHECK(revise({1, 0, 0, 0, 0, 0, 1}) == SignList{1, -1, -1, 1, 1, -1, 1});
}

TEST_CASE("revision is idempotent without interior zeros") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    SignList s(1 + rng() % 8);
    for (auto& x : s) x = static_cast<int>(rng() % 3) - 1;
    SignList r = revise(s);
    CHECK(revise(r) == r);
  }
}

TEST_CASE("sign changes") {
  CHECK(var({1, 0, 0, -1}) == 1);
  CHECK(var({1, 1, 1, 1}) == 0);
  CHECK(var({1, -1, 1}) == 2);
  CHECK(var({0, 0}) == 0);
  NumPoly p = parse_numeric_expression("(x-1)^2*(x-2)*(x^2+1)");
  auto d = discriminant_sequence(p);
  CHECK(var(signs_of(d.begin(), d.end())) == 1);
}

TEST_CASE("root counts") {
  CHECK(count_roots(parse_numeric_expression("(x-1)^2*(x-2)*(x^2+1)")) == RootCounts{2, 1});
  CHECK(count_roots(parse_numeric_expression("x^2+1")) == RootCounts{0, 1});
  CHECK(count_roots(parse_numeric_expression("(x-1)*(x-2)*(x-3)")) == RootCounts{3, 0});
  CHECK(count_roots(parse_numeric_expression("(x-3)^4")) == RootCounts{1, 0});
  CHECK(count_roots(parse_numeric_expression("(x^2+x+1)^2")) == RootCounts{0, 1});
}
