#include <set>

#include "cmult/discriminate.hpp"
#include "cmult/evaluate.hpp"
#include "cmult/oracle.hpp"
#include "cmult/parse.hpp"
#include "doctest.h"

using namespace cmult;

namespace {

NumPoly num(std::initializer_list<long> ascending) {
  std::vector<Rat> v;
  for (long c : ascending) v.emplace_back(c);
  return NumPoly(v);
}

Atom eq0(const std::string& k) { return {Atom::Kind::EqZero, {k}, 0}; }
Atom ne0(const std::string& k) { return {Atom::Kind::NeqZero, {k}, 0}; }
Atom var_eq(std::vector<std::string> keys, int target) { return {Atom::Kind::VarEq, std::move(keys), target}; }

// Structure read off exact gcds and Sturm counts: level i keeps the roots of
// multiplicity > i, so conjugate entries are degree drops along the chain.
CompletePartition gcd_sturm_structure(const NumPoly& p) {
  const auto chain = euclid_gcd_chain(p);
  const int n = p.degree();
  std::vector<int> real_bar(n, 0), imag_bar(n, 0);
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const int distinct = chain[i].degree() - chain[i + 1].degree();
    const int real = sturm_real_root_count(chain[i]);
    real_bar[i] = real;
    imag_bar[i] = distinct - real;
  }
  auto unconjugate = [&](const std::vector<int>& bar) {
    Partition trimmed;
    for (int v : bar)
      if (v > 0) trimmed.push_back(v);
    Partition out;
    for (int v : conjugate(trimmed, n))
      if (v > 0) out.push_back(v);
    return out;
  };
  return {unconjugate(real_bar), unconjugate(imag_bar)};
}

std::vector<const LabeledCondition*> holding(const ConditionSet& cs, const NumPoly& p) {
  std::vector<Rat> point = parameter_point(cs, p);
  PointEvaluator at(cs, point);
  std::vector<const LabeledCondition*> out;
  for (const auto& item : cs.items)
    if (eval_condition(item.condition, at)) out.push_back(&item);
  return out;
}

}  // namespace

TEST_CASE("gcd candidates of the degree-7 example follow the conjugate prefixes") {
  const NumPoly p = num({-1, 1, 1, -1, 1, -1, -1, 1});
  auto g = gcd_candidates(derivative_tower(p, false), {3, 2, 1, 1});
  REQUIRE(g.size() == 3);
  CHECK(g[0] == p);
  CHECK(g[1] == num({-1536, 1536, 1536, -1536}));  // -1536 (x-1)^2 (x+1)
  CHECK(g[2] == num({1179648, -1179648}));
  CHECK(gcd_candidates(derivative_tower(p, false), {1, 1, 1, 1, 1, 1, 1}).size() == 1);
}

TEST_CASE("gcd candidate of a generic cubic with a double root") {
  auto g = gcd_candidates(derivative_tower(generic_polynomial(3), false), {2, 1});
  REQUIRE(g.size() == 2);
  CHECK(g[1] == parse_expression("a3*((6*a1*a3 - 2*a2^2)*x + (9*a0*a3 - a1*a2))"));
}

TEST_CASE("conditions unfolded by hand for degree 4") {
  SUBCASE("one root of multiplicity four") {
    Condition c = build_condition(4, {{4}, {}});
    std::vector<Atom> expected{eq0("R(4)"),
                               eq0("R(3,1)"),
                               eq0("R(2,2)"),
                               eq0("R(2,1,1)"),
                               ne0("R(1,1,1,1)"),
                               var_eq({"D(;1)"}, 0),
                               var_eq({"D(1;1)"}, 0),
                               var_eq({"D(1,1;1)"}, 0),
                               var_eq({}, 0)};
    CHECK(c.atoms == expected);
  }
  SUBCASE("four simple real roots") {
    Condition c = build_condition(4, {{1, 1, 1, 1}, {}});
    std::vector<Atom> expected{ne0("R(4)"), var_eq({"D(;1)", "D(;2)", "D(;3)", "D(;4)"}, 0)};
    CHECK(c.atoms == expected);
  }
  SUBCASE("a double conjugate pair") {
    Condition c = build_condition(4, {{}, {2, 2}});
    std::vector<Atom> expected{eq0("R(4)"), eq0("R(3,1)"), ne0("R(2,2)"), var_eq({"D(;1)", "D(;2)"}, 1),
                               var_eq({"D(2;1)", "D(2;2)"}, 1)};
    CHECK(c.atoms == expected);
    Condition real_twin = build_condition(4, {{2, 2}, {}});
    CHECK(real_twin.atoms[3] == var_eq({"D(;1)", "D(;2)"}, 0));
  }
  CHECK_THROWS_AS(build_condition(4, {{2, 1}, {1}}), std::logic_error);
  CHECK_THROWS_AS(build_condition(4, {{2}, {}}), std::invalid_argument);
}

TEST_CASE("repeated-gcd condition for a triple root of a cubic") {
  Condition c = yhz_build_condition(3, {{3}, {}});
  std::vector<Atom> expected{eq0("Dt(;2)"),         eq0("Dt(;3)"),      eq0("Dt(1;2)"), ne0("Dt(1,1;1)"),
                             var_eq({"Dt(;1)"}, 0), var_eq({"Dt(1;1)"}, 0), var_eq({}, 0)};
  CHECK(c.atoms == expected);
}

TEST_CASE("condition sets cover every structure once") {
  ConditionSet two = generate_all(2);
  REQUIRE(two.items.size() == 3);
  std::set<CompletePartition> labels;
  for (const auto& item : two.items) labels.insert(item.mu_c);
  CHECK(labels == std::set<CompletePartition>{{{1, 1}, {}}, {{}, {1, 1}}, {{2}, {}}});

  for (int n = 3; n <= 5; ++n) {
    for (Method m : {Method::Qxy, Method::Yhz}) {
      ConditionSet cs = generate(n, m);
      std::set<CompletePartition> seen;
      for (const auto& item : cs.items) seen.insert(item.mu_c);
      auto all = enumerate_all_complete(n);
      CHECK(seen == std::set<CompletePartition>(all.begin(), all.end()));
      CHECK(cs.items.size() == all.size());
      for (const auto& item : cs.items)
        for (const auto& a : item.condition.atoms)
          for (const auto& k : a.keys) CHECK(cs.registry.contains(k));
    }
  }
  CHECK(generate_all(4).items.size() == 9);
  CHECK_THROWS_AS(generate_all(1), std::invalid_argument);
}

TEST_CASE("nesting depth recorded in the registry") {
  ConditionSet q = generate_all(5);
  int deepest = 0;
  for (const auto& [key, e] : q.registry.entries) {
    deepest = std::max(deepest, e.depth);
    if (key.rfind("R(", 0) == 0) CHECK(e.depth == (key == "R()" ? 0 : 1));
    if (key.rfind("D(", 0) == 0) CHECK(e.depth == q.registry.at(e.base).depth + 1);
  }
  CHECK(deepest == 2);

  ConditionSet y = yhz_generate_all(5);
  CHECK(y.registry.at("Rt(1,1,1)").depth == 3);
  CHECK(y.registry.at("Dt(1,1,1,1;1)").depth == 5);
}

TEST_CASE("JSON output is deterministic and round-trips") {
  for (Method m : {Method::Qxy, Method::Yhz}) {
    const std::string first = to_json(generate(4, m));
    CHECK(first == to_json(generate(4, m)));
    ConditionSet back = from_json(first);
    CHECK(to_json(back) == first);
  }
  CHECK_THROWS_AS(from_json("{\"degree\": 3}"), std::invalid_argument);
  CHECK_THROWS_AS(from_json("not json"), std::invalid_argument);
}

TEST_CASE("parallel fill and time budget") {
  GenerateOptions parallel;
  parallel.threads = 3;
  CHECK(to_json(generate_all(5, parallel)) == to_json(generate_all(5)));
  CHECK(to_json(yhz_generate_all(5, parallel)) == to_json(yhz_generate_all(5)));

  GenerateOptions tight;
  tight.timeout = std::chrono::milliseconds(0);
  CHECK_THROWS_AS(generate_all(6, tight), GenerationTimeout);
}

TEST_CASE("monic and dropped-coefficient variants") {
  GenerateOptions opt;
  opt.monic = true;
  opt.drop_coeffs = {2};
  SymPoly p = generic_polynomial(3, opt);
  CHECK(p == parse_expression("x^3 + a1*x + a0"));
  ConditionSet cs = generate_all(3, opt);
  // Depressed cubic: the last discriminant entry is -4 a1^3 - 27 a0^2 up to
  // a positive factor.
  const SymPoly& d3 = cs.registry.at("D(;3)").value;
  CHECK(d3.degree() == 0);
  CHECK(d3.coeffs()[0].total_degree() == 3);
  CHECK(to_string(classify_with(cs, parse_numeric_expression("x^3 - 3*x + 2")).mu_c) == "((2,1);())");
  CHECK_THROWS_AS(classify_with(cs, parse_numeric_expression("x^3 + x^2 + 1")), std::invalid_argument);
  GenerateOptions bad;
  bad.drop_coeffs = {3};
  CHECK_THROWS_AS(generate_all(3, bad), std::invalid_argument);
}

TEST_CASE("exactly one condition holds on small integer grids") {
  // Ground truth from exact gcd chains and Sturm counts, independent of the
  // subresultant machinery.
  for (auto [m, scaled] : {std::pair{Method::Qxy, false}, std::pair{Method::Yhz, false}, std::pair{Method::Qxy, true},
                           std::pair{Method::Yhz, true}}) {
    GenerateOptions opt;
    opt.scaled = scaled;
    ConditionSet cubic = generate(3, m, opt);
    int checked = 0;
    for (int a0 = -2; a0 <= 2; ++a0)
      for (int a1 = -2; a1 <= 2; ++a1)
        for (int a2 = -2; a2 <= 2; ++a2)
          for (int a3 : {-2, -1, 1, 2}) {
            NumPoly p = num({a0, a1, a2, a3});
            auto hits = holding(cubic, p);
            REQUIRE(hits.size() == 1);
            CHECK(hits[0]->mu_c == gcd_sturm_structure(p));
            ++checked;
          }
    CHECK(checked == 500);

    ConditionSet quartic = generate(4, m, opt);
    for (int a0 = -1; a0 <= 1; ++a0)
      for (int a1 = -1; a1 <= 1; ++a1)
        for (int a2 = -1; a2 <= 1; ++a2)
          for (int a3 = -1; a3 <= 1; ++a3)
            for (int a4 : {-1, 1}) {
              NumPoly p = num({a0, a1, a2, a3, a4});
              auto hits = holding(quartic, p);
              REQUIRE(hits.size() == 1);
              CHECK(hits[0]->mu_c == gcd_sturm_structure(p));
            }
  }
}
