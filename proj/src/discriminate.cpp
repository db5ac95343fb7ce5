#include "cmult/discriminate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include <json.hpp>

namespace cmult {

using nlohmann::json;

const RegistryEntry& PolyRegistry::at(const std::string& key) const {
  auto it = entries.find(key);
  if (it == entries.end()) throw std::out_of_range("registry has no key " + key);
  return it->second;
}

namespace {

std::string joined(const Shifts& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

int sum_of(const Shifts& s) { return std::accumulate(s.begin(), s.end(), 0); }

}  // namespace

std::string r_key(const Shifts& delta) { return "R(" + joined(trim_shifts(delta)) + ")"; }
std::string d_key(const Shifts& base, int j) { return "D(" + joined(trim_shifts(base)) + ";" + std::to_string(j) + ")"; }
std::string rt_key(const Shifts& chain) { return "Rt(" + joined(chain) + ")"; }
std::string dt_key(const Shifts& chain, int j) { return "Dt(" + joined(chain) + ";" + std::to_string(j) + ")"; }

std::string to_string(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::EqZero:
      return a.keys.at(0) + " = 0";
    case Atom::Kind::NeqZero:
      return a.keys.at(0) + " != 0";
    case Atom::Kind::VarEq: {
      std::string out = "Var[";
      for (std::size_t i = 0; i < a.keys.size(); ++i) out += (i ? ", " : "") + a.keys[i];
      return out + "] = " + std::to_string(a.target);
    }
  }
  return {};
}

std::string method_name(Method m) { return m == Method::Qxy ? "qxy" : "yhz"; }

Method parse_method(const std::string& s) {
  if (s == "qxy") return Method::Qxy;
  if (s == "yhz") return Method::Yhz;
  throw std::invalid_argument("unknown method '" + s + "' (expected qxy or yhz)");
}

const LabeledCondition* ConditionSet::find(const CompletePartition& mu_c) const {
  for (const auto& item : items)
    if (item.mu_c == mu_c) return &item;
  return nullptr;
}

SymPoly generic_polynomial(int n, const GenerateOptions& opt) {
  if (n < 1) throw std::invalid_argument("degree must be at least 1");
  if (n + 1 > kMaxVars) throw std::invalid_argument("degree too large for the parameter ring");
  std::vector<ParamPoly> coeffs(n + 1);
  for (int i = 0; i <= n; ++i) coeffs[i] = ParamPoly::variable(i);
  for (int k : opt.drop_coeffs) {
    if (k < 0 || k >= n) throw std::invalid_argument("dropped coefficient index must lie in 0..n-1");
    coeffs[k] = ParamPoly();
  }
  if (opt.monic) coeffs[n] = ParamPoly(1);
  return SymPoly(std::move(coeffs));
}

namespace {

// Keys a set of conditions depends on, in structural form.
struct Needs {
  std::set<Shifts> plain;         // R / Rt keys referenced directly
  std::map<Shifts, int> seq_top;  // base -> largest discriminant index
};

Atom eq_zero(std::string k) { return {Atom::Kind::EqZero, {std::move(k)}, 0}; }
Atom neq_zero(std::string k) { return {Atom::Kind::NeqZero, {std::move(k)}, 0}; }

int half_of(int v) {
  if (v % 2 != 0) throw std::logic_error("imaginary conjugate entry is odd");
  return v / 2;
}

void note_seq(Needs* needs, const Shifts& base, int j) {
  if (!needs) return;
  int& top = needs->seq_top[base];
  top = std::max(top, j);
}

Condition qxy_condition(int n, const CompletePartition& mu_c, Needs* needs) {
  const Partition mu = merged(mu_c);
  if (sum_of(mu) != n) throw std::invalid_argument("structure " + to_string(mu_c) + " is not of degree " + std::to_string(n));
  const std::vector<int> bar = conjugate(mu, n);
  const std::vector<int> bar_imag = conjugate(mu_c.imag, n);
  Condition c;
  for (const Partition& gamma : enumerate_partitions(n)) {
    if (!lex_greater(gamma, bar)) continue;
    c.atoms.push_back(eq_zero(r_key(gamma)));
    if (needs) needs->plain.insert(gamma);
  }
  const Shifts top = trim_shifts(bar);
  c.atoms.push_back(neq_zero(r_key(top)));
  if (needs) needs->plain.insert(top);
  for (int i = 0; i < mu[0]; ++i) {
    Shifts prefix(bar.begin(), bar.begin() + i);
    Atom var{Atom::Kind::VarEq, {}, half_of(bar_imag[i])};
    if (n - sum_of(prefix) >= 2) {
      for (int j = 1; j <= bar[i]; ++j) var.keys.push_back(d_key(prefix, j));
      note_seq(needs, prefix, bar[i]);
    }
    c.atoms.push_back(std::move(var));
  }
  return c;
}

Condition yhz_condition(int n, const CompletePartition& mu_c, Needs* needs) {
  const Partition mu = merged(mu_c);
  if (sum_of(mu) != n) throw std::invalid_argument("structure " + to_string(mu_c) + " is not of degree " + std::to_string(n));
  const std::vector<int> bar = conjugate(mu, n);
  const std::vector<int> bar_imag = conjugate(mu_c.imag, n);
  const int levels = mu[0];
  auto chain = [&](int i) { return Shifts(bar.begin(), bar.begin() + i); };
  auto node_degree = [&](int i) { return n - sum_of(chain(i)); };
  Condition c;
  for (int i = 0; i + 1 < levels; ++i) {
    for (int j = bar[i] + 1; j <= node_degree(i); ++j) c.atoms.push_back(eq_zero(dt_key(chain(i), j)));
    note_seq(needs, chain(i), node_degree(i));
  }
  const int last = levels - 1;
  c.atoms.push_back(neq_zero(dt_key(chain(last), node_degree(last))));
  note_seq(needs, chain(last), node_degree(last));
  for (int i = 0; i < levels; ++i) {
    Atom var{Atom::Kind::VarEq, {}, half_of(bar_imag[i])};
    if (node_degree(i) >= 2) {
      for (int j = 1; j <= bar[i]; ++j) var.keys.push_back(dt_key(chain(i), j));
      note_seq(needs, chain(i), bar[i]);
    }
    c.atoms.push_back(std::move(var));
  }
  return c;
}

using Clock = std::chrono::steady_clock;

class Deadline {
 public:
  explicit Deadline(const std::optional<std::chrono::milliseconds>& budget) {
    if (budget) end_ = Clock::now() + *budget;
  }
  void check() const {
    if (end_ && Clock::now() > *end_) throw GenerationTimeout("generation exceeded its time budget");
  }

 private:
  std::optional<Clock::time_point> end_;
};

// Runs task(0..count-1) on up to `threads` workers; the first exception
// stops further scheduling and is rethrown.
template <class Task>
void run_tasks(std::size_t count, int threads, const Deadline& deadline, Task task) {
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        deadline.check();
        task(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
        return;
      }
    }
  };
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

// Fills D(base; 1..top) for every needed base whose value is already in the
// registry. Indices beyond the base's actual degree are recorded as zero.
template <class KeyOf>
void fill_sequences(PolyRegistry& reg, const std::map<Shifts, int>& seq_top, const std::vector<std::string>& base_keys,
                    KeyOf key_of, int threads, const Deadline& deadline) {
  std::vector<std::pair<Shifts, int>> work(seq_top.begin(), seq_top.end());
  std::vector<std::vector<ParamPoly>> results(work.size());
  run_tasks(work.size(), threads, deadline, [&](std::size_t i) {
    const SymPoly& base = reg.at(base_keys[i]).value;
    const int upto = std::min(work[i].second, base.degree());
    if (upto >= 1) results[i] = discriminant_sequence(base, upto);
  });
  for (std::size_t i = 0; i < work.size(); ++i) {
    const RegistryEntry& base = reg.at(base_keys[i]);
    for (int j = 1; j <= work[i].second; ++j) {
      SymPoly value = j <= static_cast<int>(results[i].size()) ? SymPoly::constant(results[i][j - 1]) : SymPoly();
      reg.entries[key_of(work[i].first, j)] = RegistryEntry{std::move(value), base.depth + 1, base_keys[i]};
    }
  }
}

}  // namespace

Condition build_condition(int n, const CompletePartition& mu_c) { return qxy_condition(n, mu_c, nullptr); }

Condition yhz_build_condition(int n, const CompletePartition& mu_c) { return yhz_condition(n, mu_c, nullptr); }

ConditionSet generate_all(int n, const GenerateOptions& opt) {
  if (n < 2) throw std::invalid_argument("degree must be at least 2");
  const Deadline deadline(opt.timeout);
  ConditionSet cs;
  cs.degree = n;
  cs.method = Method::Qxy;
  cs.options = opt;
  Needs needs;
  for (const auto& mu_c : enumerate_all_complete(n)) cs.items.push_back({mu_c, qxy_condition(n, mu_c, &needs)});

  const SymPoly p = generic_polynomial(n, opt);
  const std::vector<SymPoly> tower = derivative_tower(p, opt.scaled);

  // Subresultants of the tower: the sweep set M(n) plus every gcd candidate.
  std::set<Shifts> all = needs.plain;
  for (const auto& [base, top] : needs.seq_top) all.insert(base);
  std::vector<Shifts> deltas(all.begin(), all.end());
  std::vector<SymPoly> values(deltas.size());
  run_tasks(deltas.size(), opt.threads, deadline, [&](std::size_t i) {
    values[i] = deltas[i].empty() ? p : subresultant(tower, deltas[i]);
  });
  for (std::size_t i = 0; i < deltas.size(); ++i)
    cs.registry.entries[r_key(deltas[i])] = RegistryEntry{std::move(values[i]), deltas[i].empty() ? 0 : 1, ""};

  std::vector<std::string> base_keys;
  for (const auto& [base, top] : needs.seq_top) base_keys.push_back(r_key(base));
  fill_sequences(cs.registry, needs.seq_top, base_keys, d_key, opt.threads, deadline);
  return cs;
}

ConditionSet yhz_generate_all(int n, const GenerateOptions& opt) {
  if (n < 2) throw std::invalid_argument("degree must be at least 2");
  const Deadline deadline(opt.timeout);
  ConditionSet cs;
  cs.degree = n;
  cs.method = Method::Yhz;
  cs.options = opt;
  Needs needs;
  for (const auto& mu_c : enumerate_all_complete(n)) cs.items.push_back({mu_c, yhz_condition(n, mu_c, &needs)});

  // Chain nodes level by level; each node needs its parent.
  std::set<Shifts> nodes;
  for (const auto& [chain, top] : needs.seq_top)
    for (std::size_t len = 0; len <= chain.size(); ++len) nodes.insert(Shifts(chain.begin(), chain.begin() + len));
  std::size_t depth = 0;
  for (const auto& c : nodes) depth = std::max(depth, c.size());

  cs.registry.entries[rt_key({})] = RegistryEntry{generic_polynomial(n, opt), 0, ""};
  for (std::size_t level = 1; level <= depth; ++level) {
    std::vector<Shifts> batch;
    for (const auto& c : nodes)
      if (c.size() == level) batch.push_back(c);
    std::vector<SymPoly> values(batch.size());
    run_tasks(batch.size(), opt.threads, deadline, [&](std::size_t i) {
      Shifts parent(batch[i].begin(), batch[i].end() - 1);
      const SymPoly& g = cs.registry.at(rt_key(parent)).value;
      values[i] = subresultant(std::vector<SymPoly>{g, derivative(g, 1)}, Shifts{batch[i].back()});
    });
    for (std::size_t i = 0; i < batch.size(); ++i) {
      Shifts parent(batch[i].begin(), batch[i].end() - 1);
      cs.registry.entries[rt_key(batch[i])] =
          RegistryEntry{std::move(values[i]), static_cast<int>(level), rt_key(parent)};
    }
  }

  std::vector<std::string> base_keys;
  for (const auto& [chain, top] : needs.seq_top) base_keys.push_back(rt_key(chain));
  fill_sequences(cs.registry, needs.seq_top, base_keys, dt_key, opt.threads, deadline);
  return cs;
}

ConditionSet generate(int n, Method method, const GenerateOptions& opt) {
  return method == Method::Qxy ? generate_all(n, opt) : yhz_generate_all(n, opt);
}

// ---------------------------------------------------------------------------
// JSON

namespace {

json poly_json(const ParamPoly& c, int nvars) {
  json terms = json::array();
  for (const Term& t : c.terms()) terms.push_back(json::array({t.mono.exponents(nvars), t.coeff.get_str()}));
  return terms;
}

ParamPoly poly_from_json(const json& j) {
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw std::invalid_argument("malformed term");
    std::vector<unsigned> exps = t[0].get<std::vector<unsigned>>();
    if (exps.size() > static_cast<std::size_t>(kMaxVars)) throw std::invalid_argument("too many parameters");
    for (unsigned e : exps)
      if (e > kMaxExponent) throw std::invalid_argument("exponent out of range");
    Int coeff;
    if (coeff.set_str(t[1].get<std::string>(), 10) != 0) throw std::invalid_argument("malformed integer");
    terms.push_back({Monomial::from_exponents(exps), coeff});
  }
  return ParamPoly::from_terms(std::move(terms));
}

json partition_json(const Partition& p) { return json(p); }

const char* kind_name(Atom::Kind k) {
  switch (k) {
    case Atom::Kind::EqZero:
      return "eq0";
    case Atom::Kind::NeqZero:
      return "ne0";
    case Atom::Kind::VarEq:
      return "var";
  }
  return "";
}

Atom::Kind kind_from(const std::string& s) {
  if (s == "eq0") return Atom::Kind::EqZero;
  if (s == "ne0") return Atom::Kind::NeqZero;
  if (s == "var") return Atom::Kind::VarEq;
  throw std::invalid_argument("unknown atom kind " + s);
}

}  // namespace

std::string to_json(const ConditionSet& cs, int indent) {
  const int nvars = cs.degree + 1;
  json root;
  root["degree"] = cs.degree;
  root["method"] = method_name(cs.method);
  root["options"] = {{"scaled", cs.options.scaled}, {"monic", cs.options.monic}, {"drop_coeffs", cs.options.drop_coeffs}};
  json reg = json::object();
  for (const auto& [key, e] : cs.registry.entries) {
    json coeffs = json::array();
    for (const auto& c : e.value.coeffs()) coeffs.push_back(poly_json(c, nvars));
    reg[key] = {{"xdeg", e.value.degree()}, {"depth", e.depth}, {"base", e.base}, {"coeffs", coeffs}};
  }
  root["registry"] = std::move(reg);
  json items = json::array();
  for (const auto& item : cs.items) {
    json atoms = json::array();
    for (const auto& a : item.condition.atoms) {
      json ja = {{"kind", kind_name(a.kind)}};
      if (a.kind == Atom::Kind::VarEq) {
        ja["keys"] = a.keys;
        ja["target"] = a.target;
      } else {
        ja["key"] = a.keys.at(0);
      }
      atoms.push_back(std::move(ja));
    }
    items.push_back({{"mu_c", {{"real", partition_json(item.mu_c.real)}, {"imag", partition_json(item.mu_c.imag)}}},
                     {"atoms", std::move(atoms)}});
  }
  root["conditions"] = std::move(items);
  return root.dump(indent);
}

ConditionSet from_json(const std::string& text) {
  try {
    json root = json::parse(text);
    ConditionSet cs;
    cs.degree = root.at("degree").get<int>();
    if (cs.degree < 2 || cs.degree + 1 > kMaxVars) throw std::invalid_argument("degree out of range");
    cs.method = parse_method(root.at("method").get<std::string>());
    if (root.contains("options")) {
      const json& o = root["options"];
      cs.options.scaled = o.value("scaled", false);
      cs.options.monic = o.value("monic", false);
      cs.options.drop_coeffs = o.value("drop_coeffs", std::vector<int>{});
    }
    for (const auto& [key, e] : root.at("registry").items()) {
      std::vector<ParamPoly> coeffs;
      for (const auto& c : e.at("coeffs")) coeffs.push_back(poly_from_json(c));
      RegistryEntry entry{SymPoly(std::move(coeffs)), e.value("depth", 0), e.value("base", std::string())};
      if (entry.value.degree() != e.at("xdeg").get<int>()) throw std::invalid_argument("xdeg mismatch for " + key);
      cs.registry.entries[key] = std::move(entry);
    }
    for (const auto& item : root.at("conditions")) {
      LabeledCondition lc;
      lc.mu_c.real = item.at("mu_c").at("real").get<Partition>();
      lc.mu_c.imag = item.at("mu_c").at("imag").get<Partition>();
      for (const auto& ja : item.at("atoms")) {
        Atom a;
        a.kind = kind_from(ja.at("kind").get<std::string>());
        if (a.kind == Atom::Kind::VarEq) {
          a.keys = ja.at("keys").get<std::vector<std::string>>();
          a.target = ja.at("target").get<int>();
          if (a.target < 0) throw std::invalid_argument("negative Var target");
        } else {
          a.keys = {ja.at("key").get<std::string>()};
        }
        for (const auto& k : a.keys)
          if (!cs.registry.contains(k)) throw std::invalid_argument("condition references unknown key " + k);
        lc.condition.atoms.push_back(std::move(a));
      }
      cs.items.push_back(std::move(lc));
    }
    return cs;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed condition set: ") + e.what());
  }
}

}  // namespace cmult
