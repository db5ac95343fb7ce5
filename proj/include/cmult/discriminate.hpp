#pragma once

// Condition sets that decide the complete multiplicity structure of a
// generic degree-n polynomial: the incremental-gcd method ("qxy") and the
// nested repeated-gcd baseline ("yhz").

#include <chrono>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmult/partitions.hpp"
#include "cmult/sylvester.hpp"

namespace cmult {

struct RegistryEntry {
  SymPoly value;
  /// 1 for a subresultant of the derivative tower, +1 for each further
  /// level of nesting (a discriminant sequence of a depth-k base has depth
  /// k+1; P itself has depth 0).
  int depth = 0;
  /// Key of the polynomial this one was derived from, empty for P.
  std::string base;
};

/// Structural keys, never identified by polynomial equality. Key syntax:
///   "R(d1,d2,...)"       subresultant of the derivative tower
///   "D(d1,...;j)"        j-th discriminant-sequence entry of that base
///                        ("D(;j)" is based on P)
///   "Rt(k1,...)"         node of the repeated-gcd chain
///   "Dt(k1,...;j)"       j-th discriminant-sequence entry of that node
struct PolyRegistry {
  std::map<std::string, RegistryEntry> entries;

  bool contains(const std::string& key) const { return entries.count(key) != 0; }
  const RegistryEntry& at(const std::string& key) const;
};

std::string r_key(const Shifts& delta);
std::string d_key(const Shifts& base, int j);
std::string rt_key(const Shifts& chain);
std::string dt_key(const Shifts& chain, int j);

struct Atom {
  enum class Kind { EqZero, NeqZero, VarEq };
  Kind kind = Kind::EqZero;
  /// One key for EqZero/NeqZero; an ordered (possibly empty) list for VarEq.
  std::vector<std::string> keys;
  int target = 0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

std::string to_string(const Atom& a);

struct Condition {
  std::vector<Atom> atoms;
  friend bool operator==(const Condition&, const Condition&) = default;
};

struct LabeledCondition {
  CompletePartition mu_c;
  Condition condition;
};

enum class Method { Qxy, Yhz };
std::string method_name(Method m);
Method parse_method(const std::string& s);

struct GenerateOptions {
  /// Use P^(k)/k! in the derivative tower instead of P^(k).
  bool scaled = false;
  /// Fix a_n = 1.
  bool monic = false;
  /// Coefficient indices fixed to zero (never n).
  std::vector<int> drop_coeffs;
  /// Worker threads for the registry fill; 1 runs inline.
  int threads = 1;
  /// Abort with GenerationTimeout once this much wall time has passed.
  /// Checked between registry tasks.
  std::optional<std::chrono::milliseconds> timeout;
};

struct GenerationTimeout : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConditionSet {
  int degree = 0;
  Method method = Method::Qxy;
  GenerateOptions options;
  PolyRegistry registry;
  std::vector<LabeledCondition> items;

  const LabeledCondition* find(const CompletePartition& mu_c) const;
};

/// a_n x^n + ... + a_0 with parameter a_i as variable i, after applying the
/// monic and drop options.
SymPoly generic_polynomial(int n, const GenerateOptions& opt = {});

/// G_0 = P and G_i = R_(mubar_1..mubar_i)(F) for i = 1..mu_1 - 1.
template <class C>
std::vector<XPoly<C>> gcd_candidates(const std::vector<XPoly<C>>& tower, const Partition& mu) {
  const int n = tower.at(0).degree();
  std::vector<int> bar = conjugate(mu, n);
  const int top = mu.empty() ? 0 : mu[0];
  std::vector<XPoly<C>> out{tower[0]};
  for (int i = 1; i < top; ++i) out.push_back(subresultant(tower, Shifts(bar.begin(), bar.begin() + i)));
  return out;
}

/// Incremental-gcd condition for one structure, referencing keys of a
/// registry filled by generate_all. Throws std::logic_error on an odd
/// imaginary conjugate entry.
Condition build_condition(int n, const CompletePartition& mu_c);

/// Repeated-gcd condition for one structure.
Condition yhz_build_condition(int n, const CompletePartition& mu_c);

ConditionSet generate_all(int n, const GenerateOptions& opt = {});
ConditionSet yhz_generate_all(int n, const GenerateOptions& opt = {});
ConditionSet generate(int n, Method method, const GenerateOptions& opt = {});

/// JSON text with arbitrary-precision integers as decimal strings. Output
/// is a pure function of the set (sorted keys, fixed item order).
std::string to_json(const ConditionSet& cs, int indent = -1);
/// Throws std::invalid_argument on malformed input.
ConditionSet from_json(const std::string& text);

}  // namespace cmult
