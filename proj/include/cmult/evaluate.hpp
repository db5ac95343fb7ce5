#pragma once

// Evaluating conditions at rational parameter points, and classifying
// concrete polynomials.

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cmult/discriminate.hpp"
#include "cmult/signlists.hpp"

namespace cmult {

/// Outcome of one evaluated atom. `observed` is the sign-change count for
/// Var atoms and 1/0 (nonzero/zero) for the zero tests.
struct AtomResult {
  Atom atom;
  bool holds = false;
  int observed = 0;
};

struct Verdict {
  CompletePartition mu_c;
  /// Atoms of the matched condition, in order; empty on the fast path.
  std::vector<AtomResult> trace;
};

/// Caches what a condition needs to know about each registry polynomial at
/// one point: whether it vanishes identically in x and, for x-free values,
/// its sign.
class PointEvaluator {
 public:
  /// `point` holds a_0..a_n and must assign a_n != 0 (unless the set is
  /// monic, in which case a_n is ignored).
  PointEvaluator(const ConditionSet& cs, std::span<const Rat> point);

  bool vanishes(const std::string& key) { return info(key).zero; }
  /// Throws std::logic_error if the value still depends on x.
  int sign(const std::string& key);

 private:
  struct Info {
    bool zero = true;
    bool constant = true;
    int sign = 0;
  };
  const Info& info(const std::string& key);

  const PolyRegistry& registry_;
  bool integral_ = false;
  std::vector<Int> int_point_;
  std::vector<Rat> rat_point_;
  std::unordered_map<std::string, Info> cache_;
};

/// Short-circuits at the first false atom; `trace` receives every atom
/// evaluated up to and including that one.
bool eval_condition(const Condition& c, PointEvaluator& at, std::vector<AtomResult>* trace = nullptr);
bool eval_condition(const Condition& c, const ConditionSet& cs, std::span<const Rat> point,
                    std::vector<AtomResult>* trace = nullptr);

/// Parameter point a_0..a_n of a concrete polynomial for this set. A monic
/// set divides by the leading coefficient; a set with dropped coefficients
/// rejects polynomials where they are nonzero.
std::vector<Rat> parameter_point(const ConditionSet& cs, const NumPoly& p);

/// Numeric pipeline: largest nonvanishing subresultant index, then
/// discriminant-sequence sign counts of each gcd candidate.
Verdict classify(const NumPoly& p);

/// Evaluates every condition of `cs`; throws std::logic_error unless exactly
/// one holds.
Verdict classify_with(const ConditionSet& cs, const NumPoly& p);

}  // namespace cmult
