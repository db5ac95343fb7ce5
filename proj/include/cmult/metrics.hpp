#pragma once

// Size metrics of condition sets (closed forms and measurements) and the
// generation benchmark.

#include <optional>
#include <string>
#include <vector>

#include "cmult/discriminate.hpp"

namespace cmult {

/// Polynomial count of the repeated-gcd method: 3 * 2^(n-2) - 1.
long long t_yhz(int n);
/// Polynomial count of the incremental-gcd method:
/// p(n) + sum_{i=0}^{n-2} p(i) (n - i).
long long t_qxy(int n);
/// Largest parameter degree of the incremental-gcd conditions: n (n - 1).
long long d_qxy(int n);

struct KeyMeasure {
  std::string key;
  int x_degree = -1;
  int param_degree = 0;
  int depth = 0;
  bool in_atoms = false;
};

struct Measurement {
  /// Counted as in the closed forms: each key referenced directly by a zero
  /// test counts once, and each base of a discriminant sequence with
  /// x-degree d >= 2 counts d (degree-1 bases count nothing).
  long long poly_count = 0;
  /// Distinct keys appearing in some atom.
  long long atom_key_count = 0;
  long long registry_size = 0;
  int max_param_degree = 0;
  int max_x_degree = 0;
  int max_depth = 0;
  std::vector<KeyMeasure> per_key;
};

Measurement measure(const ConditionSet& cs);

struct BenchResult {
  int n = 0;
  Method method = Method::Qxy;
  /// Median wall time of one full generation.
  double seconds = 0;
  int threads = 1;
  int repetitions = 1;
};

BenchResult bench(int n, Method method, int repetitions = 1, int threads = 1,
                  std::optional<std::chrono::milliseconds> timeout = std::nullopt);

std::string bench_csv_header();
std::string bench_csv_row(const BenchResult& r);
/// Rows of a bench CSV (header required). Throws std::invalid_argument.
std::vector<BenchResult> parse_bench_csv(const std::string& text);

/// n,t_yhz,t_qxy,ratio with the ratio rounded to three decimals.
std::string counts_table_csv(int first, int last);

/// n,d_yhz_measured,d_qxy_measured,d_qxy_formula. A measured column is left
/// empty when generation does not finish within `budget` (checked between
/// registry tasks).
std::string maxdeg_table_csv(int first, int last, std::optional<std::chrono::milliseconds> budget);

/// n,t_yhz,t_qxy,ratio from bench rows (median over rows per n and method).
std::string timing_table_csv(const std::vector<BenchResult>& rows);

/// Exact decimal rounding of a/b to `places` places, half away from zero.
std::string rounded_ratio(long long a, long long b, int places = 3);

}  // namespace cmult
