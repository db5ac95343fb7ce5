#include "cmult/oracle.hpp"
#include "cmult/parse.hpp"
#include "doctest.h"

using namespace cmult;

namespace {

NumPoly expr(const char* text) { return parse_numeric_expression(text); }

}  // namespace

TEST_CASE("witnesses built from prescribed roots") {
  const NumPoly x2p1 = expr("x^2 + 1");
  Witness w = construct_witness({{Rat(1), 2}, {Rat(2), 1}}, {{x2p1, 1}});
  CHECK(w.poly == expr("x^5 - 4*x^4 + 6*x^3 - 6*x^2 + 5*x - 2"));
  CHECK(w.mu_c == CompletePartition{{2, 1}, {1, 1}});

  w = construct_witness({{Rat(1), 3}, {Rat(-1), 2}}, {{x2p1, 1}});
  CHECK(w.poly == expr("x^7 - x^6 - x^5 + x^4 - x^3 + x^2 + x - 1"));
  CHECK(w.mu_c == CompletePartition{{3, 2}, {1, 1}});

  w = construct_witness({}, {{expr("x^2 + x + 1"), 2}});
  CHECK(w.poly == expr("x^4 + 2*x^3 + 3*x^2 + 2*x + 1"));
  CHECK(w.mu_c == CompletePartition{{}, {2, 2}});

  w = construct_witness({{Rat(1, 2), 1}}, {}, Rat(-3));
  CHECK(w.poly == parse_coefficients("3/2,-3"));

  CHECK_THROWS_AS(construct_witness({{Rat(1), 1}, {Rat(1), 2}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(construct_witness({}, {{expr("x^2 - 1"), 1}}), std::invalid_argument);
  CHECK_THROWS_AS(construct_witness({}, {{expr("x^2 - 2*x + 1"), 1}}), std::invalid_argument);
  CHECK_THROWS_AS(construct_witness({}, {{x2p1, 1}, {x2p1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(construct_witness({{Rat(0), 0}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(construct_witness({}, {{expr("2*x^2 + 2"), 1}}), std::invalid_argument);
  CHECK_THROWS_AS(construct_witness({{Rat(0), 1}}, {}, Rat(0)), std::invalid_argument);
}

TEST_CASE("gcd chains") {
  const NumPoly p = expr("x^7 - x^6 - x^5 + x^4 - x^3 + x^2 + x - 1");
  auto chain = euclid_gcd_chain(p);
  REQUIRE(chain.size() == 4);
  CHECK(chain[0] == p);
  CHECK(chain[1] == expr("(x-1)^2*(x+1)"));
  CHECK(chain[2] == expr("x - 1"));
  CHECK(chain[3] == expr("1"));
  CHECK(repeated_gcd_chain(p) == chain);

  auto quartic = euclid_gcd_chain(expr("(x-2)^4"));
  REQUIRE(quartic.size() == 5);
  CHECK(quartic[1] == expr("(x-2)^3"));
  CHECK(quartic[2] == expr("(x-2)^2"));
  CHECK(quartic[3] == expr("x-2"));
  CHECK(quartic[4] == expr("1"));

  auto squarefree = euclid_gcd_chain(expr("2*x^3 - x + 5"));
  REQUIRE(squarefree.size() == 2);
  CHECK(squarefree[0] == parse_coefficients("5/2,-1/2,0,1"));
  CHECK(squarefree[1] == expr("1"));
  CHECK(repeated_gcd_chain(expr("2*x^3 - x + 5")).size() == 2);
}

TEST_CASE("confluent Vandermonde determinants") {
  auto mixed = confluent_vandermonde_det({Rat(0), Rat(1), Rat(2)}, {3, 1, 2});
  CHECK(mixed.determinant == Rat(64));
  CHECK(mixed.agrees());

  auto classical = confluent_vandermonde_det({Rat(1), Rat(3), Rat(-2), Rat(1, 2)}, {1, 1, 1, 1});
  Rat product = 1;
  const std::vector<Rat> xs{Rat(1), Rat(3), Rat(-2), Rat(1, 2)};
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) product *= xs[j] - xs[i];
  CHECK(classical.determinant == product);
  CHECK(classical.agrees());

  auto single = confluent_vandermonde_det({Rat(7, 3)}, {4});
  CHECK(single.determinant == Rat(1));
  CHECK(single.agrees());

  NumMatrix block = confluent_vandermonde_matrix({Rat(2)}, {3});
  CHECK(block.at(2, 0) == Rat(4));
  CHECK(block.at(2, 1) == Rat(4));
  CHECK(block.at(2, 2) == Rat(1));
  CHECK(block.at(0, 1) == Rat(0));

  CHECK_THROWS_AS(confluent_vandermonde_det({Rat(1)}, {1, 2}), std::invalid_argument);
}

TEST_CASE("Sturm real root counts") {
  CHECK(sturm_real_root_count(expr("(x-1)^2*(x-2)*(x^2+1)")) == 2);
  CHECK(sturm_real_root_count(expr("x^2 + 1")) == 0);
  CHECK(sturm_real_root_count(expr("(x^2 - 2)*(x - 5)^3")) == 3);
  CHECK(sturm_real_root_count(expr("7")) == 0);
}

TEST_CASE("ground truth counts from a structure") {
  RootCounts c = ground_truth_counts({{2, 1}, {1, 1}});
  CHECK(c.distinct_real == 2);
  CHECK(c.imaginary_pairs == 1);
}

TEST_CASE("random witnesses respect their structure") {
  WitnessGenerator gen(5);
  for (int n = 2; n <= 6; ++n)
    for (const auto& mu_c : enumerate_all_complete(n)) {
      const Witness w = gen.for_structure(mu_c);
      CHECK(w.mu_c == mu_c);
      CHECK(w.poly.degree() == n);
      CHECK(sturm_real_root_count(w.poly) == static_cast<int>(mu_c.real.size()));
    }
  CHECK(trial_seed(1, 0) != trial_seed(1, 1));
  CHECK(trial_seed(9, 3) == trial_seed(9, 3));
}

TEST_CASE("named suites run and are reproducible") {
  for (const auto& name : suite_names()) {
    SuiteReport r = run_suite(name, 5, 11);
    CHECK_MESSAGE(r.ok(), name);
    CHECK(r.trials == 5);
  }
  CHECK(run_suite("icgcd", 4, 3).failures == run_suite("icgcd", 4, 3).failures);
  CHECK_THROWS_AS(run_suite("nope", 1, 1), std::invalid_argument);
}
