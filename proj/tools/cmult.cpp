// Command-line front end. Links only the C interface of libcmult.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cmult/cmult.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid input maps to the usage exit code; anything else is a failure.
void check(cm_status s) {
  if (s == CM_OK) return;
  std::string message = std::string(cm_status_name(s)) + ": " + cm_last_error();
  if (s == CM_INVALID_ARGUMENT || s == CM_PARSE_ERROR) throw Usage(message);
  throw Failure(message);
}

class OwnedString {
 public:
  ~OwnedString() { cm_string_free(p_); }
  char** out() { return &p_; }
  std::string str() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

class Conditions {
 public:
  ~Conditions() { cm_conditions_free(h_); }
  cm_conditions** out() { return &h_; }
  const cm_conditions* get() const { return h_; }

 private:
  cm_conditions* h_ = nullptr;
};

long to_ms(double seconds) { return seconds > 0 ? static_cast<long>(seconds * 1000.0) : 0; }

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Usage("range must look like a..b, got '" + text + "'");
  }
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text)) throw Failure("cannot write " + path);
}

std::string read_input(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Usage("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complete multiplicity structure of univariate polynomials: condition generation and classification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cm_version());

  // gen
  auto* gen = app.add_subcommand("gen", "generate the condition set of a generic degree-n polynomial");
  int gen_degree = 0;
  std::string gen_method = "qxy", gen_format = "json", gen_out;
  bool gen_monic = false, gen_scaled = false, gen_raw = false;  // scaled unless --raw-derivatives
  std::vector<int> gen_drop;
  int gen_threads = 1, gen_indent = -1;
  double gen_timeout = 0;
  gen->add_option("--degree,-n", gen_degree, "degree n >= 2")->required();
  gen->add_option("--method", gen_method, "qxy (incremental gcd) or yhz (repeated gcd)")
      ->check(CLI::IsMember({"qxy", "yhz"}));
  gen->add_option("--format", gen_format, "output format")->check(CLI::IsMember({"json"}));
  gen->add_flag("--monic", gen_monic, "fix the leading coefficient to 1");
  auto* scaled_flag = gen->add_flag("--scaled-derivatives", gen_scaled, "use P^(k)/k! in the derivative tower (default)");
  gen->add_flag("--raw-derivatives", gen_raw, "use P^(k) in the derivative tower")->excludes(scaled_flag);
  gen->add_option("--drop-coeff", gen_drop, "coefficient index fixed to zero (repeatable)");
  gen->add_option("--threads", gen_threads, "registry fill workers")->check(CLI::PositiveNumber);
  gen->add_option("--timeout", gen_timeout, "time budget in seconds (0: none)")->check(CLI::NonNegativeNumber);
  gen->add_option("--indent", gen_indent, "JSON indentation (-1: compact)");
  gen->add_option("--out,-o", gen_out, "output file (default stdout)");

  // classify
  auto* cls = app.add_subcommand("classify", "report the complete multiplicity structure of a rational polynomial");
  std::string cls_poly, cls_expr, cls_conditions;
  auto* poly_opt = cls->add_option("--poly", cls_poly, "ascending coefficients c0,c1,...,cn");
  auto* expr_opt = cls->add_option("--expr", cls_expr, "polynomial expression in x");
  poly_opt->excludes(expr_opt);
  cls->add_option("--conditions", cls_conditions, "evaluate this generated condition set instead of the numeric pipeline");

  // table
  auto* table = app.add_subcommand("table", "CSV tables of polynomial counts, degrees and timings");
  std::string table_metric = "counts", table_range = "3..10", table_input;
  double table_budget = 60;
  table->add_option("--metric", table_metric, "counts | maxdeg | timing")
      ->check(CLI::IsMember({"counts", "maxdeg", "timing"}));
  table->add_option("--n-range", table_range, "degree range a..b");
  table->add_option("--budget", table_budget, "maxdeg: seconds per generation (0: none)")->check(CLI::NonNegativeNumber);
  table->add_option("--input", table_input, "timing: bench CSV file");

  // verify
  auto* verify = app.add_subcommand("verify", "run a randomized verification suite");
  std::string verify_suite = "all";
  int verify_trials = 100;
  unsigned long long verify_seed = 1;
  bool verify_json = false;
  verify->add_option("--suite", verify_suite, "icgcd | appendixB | prem | vandermonde | yhz-roots | cross-method | all");
  verify->add_option("--trials", verify_trials, "trials per suite")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", verify_seed, "master seed");
  verify->add_flag("--json", verify_json, "print the JSON report");

  // bench
  auto* bench = app.add_subcommand("bench", "time symbolic generation");
  int bench_degree = 0, bench_reps = 1, bench_threads = 1;
  std::string bench_method = "both", bench_out;
  double bench_timeout = 0;
  bool bench_no_header = false;
  bench->add_option("--degree,-n", bench_degree, "degree n")->required();
  bench->add_option("--method", bench_method, "qxy | yhz | both")->check(CLI::IsMember({"qxy", "yhz", "both"}));
  bench->add_option("--repetitions", bench_reps, "median over this many runs")->check(CLI::PositiveNumber);
  bench->add_option("--threads", bench_threads, "registry fill workers")->check(CLI::PositiveNumber);
  bench->add_option("--timeout", bench_timeout, "seconds per generation (0: none)")->check(CLI::NonNegativeNumber);
  bench->add_flag("--no-header", bench_no_header, "omit the CSV header");
  bench->add_option("--out,-o", bench_out, "output file (default stdout)");

  // measure
  auto* meas = app.add_subcommand("measure", "size metrics of a generated condition set");
  std::string meas_conditions;
  meas->add_option("--conditions", meas_conditions, "condition set JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      if (gen_degree < 2) throw Usage("degree must be at least 2");
      cm_gen_options opt;
      cm_gen_options_init(&opt);
      opt.scaled_derivatives = gen_raw ? 0 : 1;
      opt.monic = gen_monic ? 1 : 0;
      opt.drop_coeffs = gen_drop.data();
      opt.drop_count = static_cast<int>(gen_drop.size());
      opt.threads = gen_threads;
      opt.timeout_ms = to_ms(gen_timeout);
      Conditions cs;
      check(cm_generate(gen_degree, gen_method.c_str(), &opt, cs.out()));
      if (gen_out.empty() || gen_out == "-") {
        OwnedString json;
        check(cm_conditions_to_json(cs.get(), gen_indent, json.out()));
        std::cout << json.str();
      } else {
        check(cm_conditions_save(cs.get(), gen_out.c_str(), gen_indent));
        int count = 0;
        check(cm_conditions_count(cs.get(), &count));
        std::cerr << "wrote " << count << " conditions to " << gen_out << "\n";
      }
      return kExitOk;
    }

    if (*cls) {
      if (cls_poly.empty() == cls_expr.empty()) throw Usage("give exactly one of --poly or --expr");
      Conditions cs;
      if (!cls_conditions.empty()) check(cm_conditions_load(cls_conditions.c_str(), cs.out()));
      OwnedString out;
      const bool is_expr = !cls_expr.empty();
      check(cm_classify(is_expr ? cls_expr.c_str() : cls_poly.c_str(), is_expr ? 1 : 0, cs.get(), out.out()));
      std::cout << out.str();
      return kExitOk;
    }

    if (*table) {
      auto [first, last] = parse_range(table_range);
      std::string input;
      if (table_metric == "timing") {
        if (table_input.empty()) throw Usage("--metric timing needs --input bench.csv");
        input = read_input(table_input);
      }
      OwnedString csv;
      check(cm_table(table_metric.c_str(), first, last, to_ms(table_budget), input.empty() ? nullptr : input.c_str(),
                     csv.out()));
      std::cout << csv.str();
      return kExitOk;
    }

    if (*verify) {
      std::vector<std::string> names;
      if (verify_suite == "all")
        names = {"icgcd", "appendixB", "prem", "vandermonde", "yhz-roots", "cross-method"};
      else
        names = {verify_suite};
      bool all_ok = true;
      for (const auto& name : names) {
        int passed = 0;
        OwnedString report;
        check(cm_verify(name.c_str(), verify_trials, verify_seed, &passed, report.out()));
        const bool ok = passed == verify_trials;
        all_ok = all_ok && ok;
        if (verify_json)
          std::cout << report.str();
        else
          std::cout << name << ": " << passed << "/" << verify_trials << (ok ? " pass" : " FAIL") << "\n";
      }
      return all_ok ? kExitOk : kExitFailure;
    }

    if (*bench) {
      if (bench_degree < 2) throw Usage("degree must be at least 2");
      std::string text = bench_no_header ? "" : std::string(cm_bench_csv_header()) + "\n";
      std::vector<std::string> methods =
          bench_method == "both" ? std::vector<std::string>{"qxy", "yhz"} : std::vector<std::string>{bench_method};
      for (const auto& m : methods) {
        OwnedString row;
        check(cm_bench(bench_degree, m.c_str(), bench_reps, bench_threads, to_ms(bench_timeout), row.out()));
        text += row.str();
      }
      write_output(text, bench_out);
      return kExitOk;
    }

    if (*meas) {
      Conditions cs;
      check(cm_conditions_load(meas_conditions.c_str(), cs.out()));
      OwnedString out;
      check(cm_conditions_measure(cs.get(), out.out()));
      std::cout << out.str();
      return kExitOk;
    }
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
