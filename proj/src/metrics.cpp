#include "cmult/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace cmult {

long long t_yhz(int n) {
  if (n < 2) throw std::invalid_argument("t_yhz needs n >= 2");
  if (n > 62) throw std::overflow_error("t_yhz overflows 64 bits");
  return 3LL * (1LL << (n - 2)) - 1;
}

long long t_qxy(int n) {
  if (n < 2) throw std::invalid_argument("t_qxy needs n >= 2");
  long long total = partition_count(n);
  for (int i = 0; i <= n - 2; ++i) total += partition_count(i) * (n - i);
  return total;
}

long long d_qxy(int n) {
  if (n < 2) throw std::invalid_argument("d_qxy needs n >= 2");
  return static_cast<long long>(n) * (n - 1);
}

Measurement measure(const ConditionSet& cs) {
  Measurement m;
  std::set<std::string> in_atoms, direct, bases;
  for (const auto& item : cs.items)
    for (const auto& a : item.condition.atoms)
      for (const auto& k : a.keys) in_atoms.insert(k);
  for (const auto& k : in_atoms) {
    const RegistryEntry& e = cs.registry.at(k);
    if (!e.base.empty() && cs.registry.contains(e.base))
      bases.insert(e.base);
    else
      direct.insert(k);
  }
  m.poly_count = static_cast<long long>(direct.size());
  for (const auto& b : bases) {
    int d = cs.registry.at(b).value.degree();
    if (d >= 2) m.poly_count += d;
  }
  m.atom_key_count = static_cast<long long>(in_atoms.size());
  m.registry_size = static_cast<long long>(cs.registry.entries.size());
  for (const auto& [key, e] : cs.registry.entries) {
    KeyMeasure km{key, e.value.degree(), 0, e.depth, in_atoms.count(key) != 0};
    for (const auto& c : e.value.coeffs()) km.param_degree = std::max(km.param_degree, c.total_degree());
    m.max_param_degree = std::max(m.max_param_degree, km.param_degree);
    m.max_x_degree = std::max(m.max_x_degree, km.x_degree);
    m.max_depth = std::max(m.max_depth, km.depth);
    m.per_key.push_back(std::move(km));
  }
  return m;
}

BenchResult bench(int n, Method method, int repetitions, int threads, std::optional<std::chrono::milliseconds> timeout) {
  if (n < 2) throw std::invalid_argument("bench needs n >= 2");
  if (repetitions < 1) throw std::invalid_argument("bench needs at least one repetition");
  GenerateOptions opt;
  opt.threads = threads;
  opt.timeout = timeout;
  std::vector<double> times;
  for (int r = 0; r < repetitions; ++r) {
    const auto start = std::chrono::steady_clock::now();
    ConditionSet cs = generate(n, method, opt);
    times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(times.begin(), times.end());
  const std::size_t mid = times.size() / 2;
  const double median = times.size() % 2 ? times[mid] : (times[mid - 1] + times[mid]) / 2;
  return BenchResult{n, method, median, threads, repetitions};
}

std::string bench_csv_header() { return "n,method,seconds,threads"; }

std::string bench_csv_row(const BenchResult& r) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d,%s,%.6f,%d", r.n, method_name(r.method).c_str(), r.seconds, r.threads);
  return buf;
}

std::vector<BenchResult> parse_bench_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind(bench_csv_header(), 0) != 0)
    throw std::invalid_argument("bench CSV must start with the header '" + bench_csv_header() + "'");
  std::vector<BenchResult> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line.rfind(bench_csv_header(), 0) == 0) continue;
    std::istringstream fields(line);
    std::string n, method, seconds, threads;
    if (!std::getline(fields, n, ',') || !std::getline(fields, method, ',') || !std::getline(fields, seconds, ',') ||
        !std::getline(fields, threads, ','))
      throw std::invalid_argument("malformed bench row: " + line);
    try {
      rows.push_back(BenchResult{std::stoi(n), parse_method(method), std::stod(seconds), std::stoi(threads), 1});
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed bench row: " + line);
    }
  }
  return rows;
}

std::string rounded_ratio(long long a, long long b, int places) {
  if (b == 0) throw std::invalid_argument("ratio with zero denominator");
  Rat q(Int(std::to_string(a)), Int(std::to_string(b)));
  q.canonicalize();
  Int scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  Rat scaled = abs(q) * Rat(scale);
  Int whole = scaled.get_num() / scaled.get_den();
  if (Rat(whole) + Rat(1, 2) <= scaled) whole += 1;
  std::string digits = whole.get_str();
  if (static_cast<int>(digits.size()) <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - places);
  if (places > 0) out += "." + digits.substr(digits.size() - places);
  return (sgn(q) < 0 ? "-" : "") + out;
}

std::string counts_table_csv(int first, int last) {
  std::ostringstream os;
  os << "n,t_yhz,t_qxy,ratio\n";
  for (int n = first; n <= last; ++n) os << n << "," << t_yhz(n) << "," << t_qxy(n) << "," << rounded_ratio(t_yhz(n), t_qxy(n)) << "\n";
  return os.str();
}

std::string maxdeg_table_csv(int first, int last, std::optional<std::chrono::milliseconds> budget) {
  std::ostringstream os;
  os << "n,d_yhz_measured,d_qxy_measured,d_qxy_formula\n";
  GenerateOptions opt;
  opt.timeout = budget;
  for (int n = first; n <= last; ++n) {
    os << n << ",";
    for (Method m : {Method::Yhz, Method::Qxy}) {
      try {
        os << measure(generate(n, m, opt)).max_param_degree;
      } catch (const GenerationTimeout&) {
        // left empty: unmeasured within the budget
      }
      os << ",";
    }
    os << d_qxy(n) << "\n";
  }
  return os.str();
}

std::string timing_table_csv(const std::vector<BenchResult>& rows) {
  std::map<int, std::map<Method, std::vector<double>>> grouped;
  for (const auto& r : rows) grouped[r.n][r.method].push_back(r.seconds);
  auto median = [](std::vector<double> v) -> std::optional<double> {
    if (v.empty()) return std::nullopt;
    std::sort(v.begin(), v.end());
    return v.size() % 2 ? v[v.size() / 2] : (v[v.size() / 2 - 1] + v[v.size() / 2]) / 2;
  };
  std::ostringstream os;
  os << "n,t_yhz,t_qxy,ratio\n";
  char buf[64];
  for (auto& [n, by_method] : grouped) {
    auto y = median(by_method[Method::Yhz]);
    auto q = median(by_method[Method::Qxy]);
    os << n << ",";
    if (y) std::snprintf(buf, sizeof buf, "%.6f", *y), os << buf;
    os << ",";
    if (q) std::snprintf(buf, sizeof buf, "%.6f", *q), os << buf;
    os << ",";
    if (y && q && *q > 0) std::snprintf(buf, sizeof buf, "%.3f", *y / *q), os << buf;
    os << "\n";
  }
  return os.str();
}

}  // namespace cmult
