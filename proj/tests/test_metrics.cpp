#include <sstream>

#include "cmult/metrics.hpp"
#include "doctest.h"

using namespace cmult;

TEST_CASE("closed-form polynomial counts") {
  CHECK(t_yhz(3) == 5);
  CHECK(t_yhz(10) == 767);
  CHECK(t_yhz(18) == 196607);
  CHECK(t_qxy(3) == 8);
  CHECK(t_qxy(6) == 49);
  CHECK(t_qxy(18) == 4670);
  for (int n = 3; n <= 40; ++n) CHECK(t_yhz(n) - t_yhz(n - 1) == 1 + t_yhz(n - 1));
  CHECK_THROWS_AS(t_yhz(1), std::invalid_argument);
  CHECK_THROWS_AS(t_qxy(1), std::invalid_argument);
}

TEST_CASE("the counts table for n = 3..18") {
  const std::string expected =
      "n,t_yhz,t_qxy,ratio\n"
      "3,5,8,0.625\n"
      "4,11,16,0.688\n"
      "5,23,28,0.821\n"
      "6,47,49,0.959\n"
      "7,95,79,1.203\n"
      "8,191,127,1.504\n"
      "9,383,195,1.964\n"
      "10,767,296,2.591\n"
      "11,1535,437,3.513\n"
      "12,3071,639,4.806\n"
      "13,6143,914,6.721\n"
      "14,12287,1297,9.473\n"
      "15,24575,1812,13.562\n"
      "16,49151,2510,19.582\n"
      "17,98303,3436,28.610\n"
      "18,196607,4670,42.100\n";
  CHECK(counts_table_csv(3, 18) == expected);
}

TEST_CASE("maximal parameter degree formula") {
  CHECK(d_qxy(3) == 6);
  CHECK(d_qxy(4) == 12);
  CHECK(d_qxy(8) == 56);
  const long long column[] = {6, 12, 20, 30, 42, 56};
  for (int n = 3; n <= 8; ++n) CHECK(d_qxy(n) == column[n - 3]);
}

TEST_CASE("measured sizes of generated condition sets") {
  for (int n = 3; n <= 5; ++n) {
    Measurement m = measure(generate_all(n));
    CHECK(m.poly_count == t_qxy(n));
    CHECK(m.max_param_degree == d_qxy(n));
    CHECK(m.max_x_degree == n);
    CHECK(m.max_depth == 2);
  }
  Measurement cubic = measure(generate_all(3));
  CHECK(cubic.atom_key_count == 7);
  CHECK(cubic.registry_size == static_cast<long long>(cubic.per_key.size()));

  // The repeated-gcd count matches the closed form while every chain prefix
  // is still needed; from degree 5 on fewer nodes are generated.
  CHECK(measure(yhz_generate_all(3)).poly_count == t_yhz(3));
  CHECK(measure(yhz_generate_all(4)).poly_count == t_yhz(4));
  CHECK(measure(yhz_generate_all(5)).poly_count == 21);
  CHECK(measure(yhz_generate_all(3)).max_param_degree == 6);
  CHECK(measure(yhz_generate_all(4)).max_param_degree == 12);
}

TEST_CASE("exact ratio rounding") {
  CHECK(rounded_ratio(11, 16) == "0.688");
  CHECK(rounded_ratio(1, 8) == "0.125");
  CHECK(rounded_ratio(1, 3, 0) == "0");
  CHECK(rounded_ratio(-5, 8, 2) == "-0.63");
  CHECK(rounded_ratio(421, 10) == "42.100");
  CHECK_THROWS_AS(rounded_ratio(1, 0), std::invalid_argument);
}

TEST_CASE("bench rows round-trip through the timing table") {
  BenchResult q = bench(4, Method::Qxy, 3);
  BenchResult y = bench(4, Method::Yhz, 1, 2);
  CHECK(q.seconds >= 0);
  CHECK(y.threads == 2);
  std::ostringstream csv;
  csv << bench_csv_header() << "\n" << bench_csv_row(q) << "\n" << bench_csv_row(y) << "\n";
  auto rows = parse_bench_csv(csv.str());
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].n == 4);
  CHECK(rows[0].method == Method::Qxy);
  CHECK(rows[1].method == Method::Yhz);

  const std::string table = timing_table_csv({{6, Method::Qxy, 0.5, 1, 1},
                                              {6, Method::Yhz, 2.0, 1, 1},
                                              {6, Method::Qxy, 1.5, 1, 1},
                                              {7, Method::Qxy, 1.0, 1, 1}});
  CHECK(table == "n,t_yhz,t_qxy,ratio\n6,2.000000,1.000000,2.000\n7,,1.000000,\n");
  CHECK_THROWS_AS(parse_bench_csv("n,seconds\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bench_csv(bench_csv_header() + "\n4,qxy\n"), std::invalid_argument);
  CHECK_THROWS_AS(bench(4, Method::Qxy, 0), std::invalid_argument);
}

TEST_CASE("degree table with a budget") {
  CHECK(maxdeg_table_csv(3, 4, std::nullopt) ==
        "n,d_yhz_measured,d_qxy_measured,d_qxy_formula\n3,6,6,6\n4,12,12,12\n");
  CHECK(maxdeg_table_csv(7, 7, std::chrono::milliseconds(0)) == "n,d_yhz_measured,d_qxy_measured,d_qxy_formula\n7,,,42\n");
}
