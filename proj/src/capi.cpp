#include "cmult/cmult.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cmult/discriminate.hpp"
#include "cmult/evaluate.hpp"
#include "cmult/metrics.hpp"
#include "cmult/oracle.hpp"
#include "cmult/parse.hpp"

struct cm_conditions {
  cmult::ConditionSet set;
};

namespace {

thread_local std::string last_error;

struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class F>
cm_status guarded(F body) {
  try {
    last_error.clear();
    body();
    return CM_OK;
  } catch (const cmult::GenerationTimeout& e) {
    last_error = e.what();
    return CM_TIMEOUT;
  } catch (const ParseFailure& e) {
    last_error = e.what();
    return CM_PARSE_ERROR;
  } catch (const IoFailure& e) {
    last_error = e.what();
    return CM_IO_ERROR;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return CM_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return CM_INVALID_ARGUMENT;
  } catch (const std::logic_error& e) {
    last_error = e.what();
    return CM_INCONSISTENT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CM_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return CM_INTERNAL;
  }
}

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cmult::GenerateOptions to_options(const cm_gen_options* opt) {
  cmult::GenerateOptions o;
  if (!opt) return o;
  o.scaled = opt->scaled_derivatives != 0;
  o.monic = opt->monic != 0;
  require(opt->drop_count >= 0 && (opt->drop_count == 0 || opt->drop_coeffs), "invalid dropped-coefficient list");
  o.drop_coeffs.assign(opt->drop_coeffs, opt->drop_coeffs + opt->drop_count);
  require(opt->threads >= 1, "threads must be at least 1");
  o.threads = opt->threads;
  if (opt->timeout_ms > 0) o.timeout = std::chrono::milliseconds(opt->timeout_ms);
  return o;
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure(std::string("cannot open ") + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::ordered_json partition_json(const cmult::CompletePartition& c) {
  nlohmann::ordered_json j;
  j["real"] = c.real;
  j["imag"] = c.imag;
  return j;
}

}  // namespace

extern "C" {

const char* cm_version(void) { return "1.0.0"; }

const char* cm_last_error(void) { return last_error.c_str(); }

const char* cm_status_name(cm_status status) {
  switch (status) {
    case CM_OK:
      return "ok";
    case CM_INVALID_ARGUMENT:
      return "invalid argument";
    case CM_PARSE_ERROR:
      return "parse error";
    case CM_TIMEOUT:
      return "timeout";
    case CM_INCONSISTENT:
      return "inconsistent";
    case CM_IO_ERROR:
      return "i/o error";
    case CM_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void cm_string_free(char* s) { std::free(s); }

void cm_gen_options_init(cm_gen_options* opt) {
  if (!opt) return;
  *opt = cm_gen_options{0, 0, nullptr, 0, 1, 0};
}

cm_status cm_generate(int degree, const char* method, const cm_gen_options* opt, cm_conditions** out) {
  return guarded([&] {
    require(out != nullptr, "output handle is null");
    *out = nullptr;
    require(degree >= 2, "degree must be at least 2");
    const cmult::Method m = cmult::parse_method(method ? method : "qxy");
    auto handle = std::make_unique<cm_conditions>();
    handle->set = cmult::generate(degree, m, to_options(opt));
    *out = handle.release();
  });
}

cm_status cm_conditions_from_json(const char* json, cm_conditions** out) {
  return guarded([&] {
    require(out != nullptr && json != nullptr, "null argument");
    *out = nullptr;
    auto handle = std::make_unique<cm_conditions>();
    try {
      handle->set = cmult::from_json(json);
    } catch (const std::invalid_argument& e) {
      throw ParseFailure(e.what());
    }
    *out = handle.release();
  });
}

cm_status cm_conditions_load(const char* path, cm_conditions** out) {
  std::string text;
  cm_status s = guarded([&] {
    require(path != nullptr, "path is null");
    text = read_file(path);
  });
  if (s != CM_OK) return s;
  return cm_conditions_from_json(text.c_str(), out);
}

cm_status cm_conditions_to_json(const cm_conditions* cs, int indent, char** out) {
  return guarded([&] {
    require(cs && out, "null argument");
    *out = copy_out(cmult::to_json(cs->set, indent) + "\n");
  });
}

cm_status cm_conditions_save(const cm_conditions* cs, const char* path, int indent) {
  return guarded([&] {
    require(cs && path, "null argument");
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoFailure(std::string("cannot write ") + path);
    f << cmult::to_json(cs->set, indent) << "\n";
    if (!f) throw IoFailure(std::string("write failed for ") + path);
  });
}

cm_status cm_conditions_count(const cm_conditions* cs, int* out) {
  return guarded([&] {
    require(cs && out, "null argument");
    *out = static_cast<int>(cs->set.items.size());
  });
}

cm_status cm_conditions_degree(const cm_conditions* cs, int* out) {
  return guarded([&] {
    require(cs && out, "null argument");
    *out = cs->set.degree;
  });
}

cm_status cm_conditions_measure(const cm_conditions* cs, char** out_json) {
  return guarded([&] {
    require(cs && out_json, "null argument");
    const cmult::Measurement m = cmult::measure(cs->set);
    nlohmann::json j = {{"method", cmult::method_name(cs->set.method)},
                        {"degree", cs->set.degree},
                        {"conditions", cs->set.items.size()},
                        {"poly_count", m.poly_count},
                        {"atom_key_count", m.atom_key_count},
                        {"registry_size", m.registry_size},
                        {"max_param_degree", m.max_param_degree},
                        {"max_x_degree", m.max_x_degree},
                        {"max_depth", m.max_depth}};
    nlohmann::json keys = nlohmann::json::array();
    for (const auto& k : m.per_key)
      keys.push_back({{"key", k.key}, {"xdeg", k.x_degree}, {"param_degree", k.param_degree}, {"depth", k.depth},
                      {"in_atoms", k.in_atoms}});
    j["keys"] = std::move(keys);
    *out_json = copy_out(j.dump() + "\n");
  });
}

void cm_conditions_free(cm_conditions* cs) { delete cs; }

cm_status cm_classify(const char* poly, int is_expression, const cm_conditions* cs, char** out_json) {
  return guarded([&] {
    require(poly && out_json, "null argument");
    cmult::NumPoly p;
    try {
      p = is_expression ? cmult::parse_numeric_expression(poly) : cmult::parse_coefficients(poly);
    } catch (const std::invalid_argument& e) {
      throw ParseFailure(e.what());
    }
    if (p.degree() < 2) throw std::invalid_argument("classification needs a polynomial of degree >= 2");
    nlohmann::ordered_json j;
    if (cs) {
      const cmult::Verdict v = cmult::classify_with(cs->set, p);
      j = partition_json(v.mu_c);
      nlohmann::ordered_json trace = nlohmann::ordered_json::array();
      for (const auto& r : v.trace)
        trace.push_back(nlohmann::ordered_json{{"atom", cmult::to_string(r.atom)}, {"holds", r.holds}, {"observed", r.observed}});
      j["trace"] = std::move(trace);
    } else {
      j = partition_json(cmult::classify(p).mu_c);
    }
    *out_json = copy_out(j.dump() + "\n");
  });
}

cm_status cm_table(const char* metric, int first, int last, long budget_ms, const char* bench_csv, char** out_csv) {
  return guarded([&] {
    require(metric && out_csv, "null argument");
    const std::string m = metric;
    if (m == "timing") {
      require(bench_csv != nullptr, "the timing table needs bench CSV input");
      *out_csv = copy_out(cmult::timing_table_csv(cmult::parse_bench_csv(bench_csv)));
      return;
    }
    require(first >= 2 && first <= last, "range must satisfy 2 <= first <= last");
    if (m == "counts") {
      require(last <= 60, "counts table supports n <= 60");
      *out_csv = copy_out(cmult::counts_table_csv(first, last));
    } else if (m == "maxdeg") {
      require(last <= 14, "maxdeg table supports n <= 14");
      std::optional<std::chrono::milliseconds> budget;
      if (budget_ms > 0) budget = std::chrono::milliseconds(budget_ms);
      *out_csv = copy_out(cmult::maxdeg_table_csv(first, last, budget));
    } else {
      throw std::invalid_argument("unknown metric '" + m + "' (expected counts, maxdeg or timing)");
    }
  });
}

cm_status cm_verify(const char* suite, int trials, unsigned long long seed, int* passed, char** out_json) {
  return guarded([&] {
    require(suite && passed && out_json, "null argument");
    require(trials >= 0, "trials must be non-negative");
    const cmult::SuiteReport r = cmult::run_suite(suite, trials, seed);
    *passed = r.passed;
    nlohmann::json j = {{"suite", r.name}, {"trials", r.trials}, {"passed", r.passed}, {"seed", seed},
                        {"seconds", r.seconds}, {"failures", r.failures}};
    *out_json = copy_out(j.dump() + "\n");
  });
}

cm_status cm_bench(int degree, const char* method, int repetitions, int threads, long timeout_ms, char** out_csv_row) {
  return guarded([&] {
    require(method && out_csv_row, "null argument");
    require(degree >= 2, "degree must be at least 2");
    require(threads >= 1, "threads must be at least 1");
    std::optional<std::chrono::milliseconds> budget;
    if (timeout_ms > 0) budget = std::chrono::milliseconds(timeout_ms);
    const cmult::BenchResult r = cmult::bench(degree, cmult::parse_method(method), repetitions, threads, budget);
    *out_csv_row = copy_out(cmult::bench_csv_row(r) + "\n");
  });
}

const char* cm_bench_csv_header(void) {
  static const std::string header = cmult::bench_csv_header();
  return header.c_str();
}

}  // extern "C"
