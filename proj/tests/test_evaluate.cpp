#include <map>

#include "cmult/evaluate.hpp"
#include "cmult/oracle.hpp"
#include "cmult/parse.hpp"
#include "doctest.h"

using namespace cmult;

namespace {

NumPoly expr(const char* text) { return parse_numeric_expression(text); }

NumPoly shifted(const NumPoly& p, const Rat& q) {
  // Horner in (x + q).
  const NumPoly x_plus_q(std::vector<Rat>{q, Rat(1)});
  NumPoly out;
  for (int k = p.degree(); k >= 0; --k) out = out * x_plus_q + NumPoly(std::vector<Rat>{p.coeffs()[k]});
  return out;
}

const ConditionSet& cached(int n, Method m) {
  static std::map<std::pair<int, Method>, ConditionSet> sets;
  auto it = sets.find({n, m});
  if (it == sets.end()) it = sets.emplace(std::make_pair(n, m), generate(n, m)).first;
  return it->second;
}

}  // namespace

TEST_CASE("conditions at the coefficient point of the quintic with a double root") {
  const ConditionSet& cs = cached(5, Method::Qxy);
  const NumPoly p = expr("x^5 - 4*x^4 + 6*x^3 - 6*x^2 + 5*x - 2");
  const auto point = parameter_point(cs, p);
  const Condition* right = &cs.find({{2, 1}, {1, 1}})->condition;
  const Condition* sibling = &cs.find({{1, 1, 1, 1, 1}, {}})->condition;
  std::vector<AtomResult> trace;
  CHECK(eval_condition(*right, cs, point, &trace));
  CHECK(trace.size() == right->atoms.size());
  trace.clear();
  CHECK_FALSE(eval_condition(*sibling, cs, point, &trace));
  REQUIRE_FALSE(trace.empty());
  CHECK_FALSE(trace.back().holds);
}

TEST_CASE("a vanishing nonzero test ends the trace") {
  const ConditionSet& cs = cached(4, Method::Qxy);
  // (x-1)^4 makes R(4) vanish, which the four-simple-real-roots condition
  // requires to be nonzero.
  const auto point = parameter_point(cs, expr("(x-1)^4"));
  const Condition& c = cs.find({{1, 1, 1, 1}, {}})->condition;
  std::vector<AtomResult> trace;
  CHECK_FALSE(eval_condition(c, cs, point, &trace));
  REQUIRE(trace.size() == 1);
  CHECK(trace[0].atom.kind == Atom::Kind::NeqZero);
  CHECK(trace[0].observed == 0);
}

TEST_CASE("point evaluator basics") {
  const ConditionSet& cs = cached(3, Method::Qxy);
  std::vector<Rat> point{Rat(-6), Rat(11), Rat(-6), Rat(1)};  // (x-1)(x-2)(x-3)
  PointEvaluator at(cs, point);
  CHECK_FALSE(at.vanishes("R(3)"));
  CHECK(at.sign("R(3)") != 0);
  CHECK_THROWS_AS(at.sign("R()"), std::logic_error);
  std::vector<Rat> degenerate{Rat(1), Rat(0), Rat(0), Rat(0)};
  CHECK_THROWS_AS(PointEvaluator(cs, degenerate), std::invalid_argument);
}

TEST_CASE("classification of hand-checked polynomials") {
  CHECK(classify(expr("x^5 - 4*x^4 + 6*x^3 - 6*x^2 + 5*x - 2")).mu_c == CompletePartition{{2, 1}, {1, 1}});
  CHECK(classify(expr("x^7 - x^6 - x^5 + x^4 - x^3 + x^2 + x - 1")).mu_c == CompletePartition{{3, 2}, {1, 1}});
  CHECK(classify(expr("(x^2 + x + 1)^2")).mu_c == CompletePartition{{}, {2, 2}});
  CHECK(classify(expr("x^2 + 1")).mu_c == CompletePartition{{}, {1, 1}});
  CHECK(classify(expr("(x^2 + 1)*(x^2 + 4)")).mu_c == CompletePartition{{}, {1, 1, 1, 1}});
  CHECK(classify(expr("(x - 3)^6")).mu_c == CompletePartition{{6}, {}});
  CHECK(classify_with(cached(4, Method::Yhz), expr("(x^2 + x + 1)^2")).mu_c == CompletePartition{{}, {2, 2}});
}

TEST_CASE("verdicts are invariant under scaling and shifts") {
  WitnessGenerator gen(20261016);
  for (int trial = 0; trial < 60; ++trial) {
    const Witness w = gen.random(gen.uniform(2, 7));
    const Rat c = gen.nonzero_rational(9, 4);
    const Rat q = gen.small_rational(5, 3);
    CHECK(classify(w.poly).mu_c == w.mu_c);
    CHECK(classify(w.poly * NumPoly(std::vector<Rat>{c})).mu_c == w.mu_c);
    CHECK(classify(shifted(w.poly, q)).mu_c == w.mu_c);
  }
}

TEST_CASE("fast path agrees with evaluating the generated conditions") {
  WitnessGenerator gen(77);
  for (int n = 2; n <= 5; ++n) {
    for (const auto& mu_c : enumerate_all_complete(n)) {
      for (int k = 0; k < 3; ++k) {
        const Witness w = gen.for_structure(mu_c);
        const Verdict fast = classify(w.poly);
        CHECK(fast.trace.empty());
        for (Method m : {Method::Qxy, Method::Yhz}) {
          const Verdict slow = classify_with(cached(n, m), w.poly);
          CHECK(slow.mu_c == fast.mu_c);
          CHECK(slow.mu_c == mu_c);
          CHECK(slow.trace.size() == cached(n, m).find(mu_c)->condition.atoms.size());
        }
      }
    }
  }
}

TEST_CASE("slow path rejects mismatched degrees") {
  CHECK_THROWS_AS(classify_with(cached(3, Method::Qxy), expr("x^4 + 1")), std::invalid_argument);
  CHECK_THROWS_AS(classify(expr("x + 1")), std::invalid_argument);
}
