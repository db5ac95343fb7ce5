#include "cmult/evaluate.hpp"

#include <algorithm>

namespace cmult {

PointEvaluator::PointEvaluator(const ConditionSet& cs, std::span<const Rat> point) : registry_(cs.registry) {
  const int n = cs.degree;
  if (static_cast<int>(point.size()) != n + 1)
    throw std::invalid_argument("point must assign a_0..a_" + std::to_string(n));
  rat_point_.assign(point.begin(), point.end());
  if (cs.options.monic) rat_point_[n] = 1;
  if (sgn(rat_point_[n]) == 0) throw std::invalid_argument("leading parameter must be nonzero");
  for (int k : cs.options.drop_coeffs) rat_point_[k] = 0;

  // Without the monic specialization every registry value is homogeneous in
  // a_0..a_n, so clearing denominators by a positive factor keeps all zero
  // tests and signs.
  Int den = 1;
  for (const auto& q : rat_point_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  if (!cs.options.monic || den == 1) {
    integral_ = true;
    for (const auto& q : rat_point_) int_point_.push_back(Int(q.get_num() * (den / q.get_den())));
  }
}

const PointEvaluator::Info& PointEvaluator::info(const std::string& key) {
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const SymPoly& value = registry_.at(key).value;
  Info out;
  // The instantiated value may drop in degree, so every power is checked.
  for (int k = value.degree(); k >= 0; --k) {
    const ParamPoly& c = value.coeffs()[k];
    int s = integral_ ? sgn(c.evaluate(std::span<const Int>(int_point_))) : sgn(c.evaluate(std::span<const Rat>(rat_point_)));
    if (s == 0) continue;
    out.zero = false;
    if (k > 0) out.constant = false;
    else out.sign = s;
  }
  if (!out.constant) out.sign = 0;
  return cache_.emplace(key, out).first->second;
}

int PointEvaluator::sign(const std::string& key) {
  const Info& i = info(key);
  if (!i.constant) throw std::logic_error("sign requested for " + key + ", which depends on x");
  return i.sign;
}

bool eval_condition(const Condition& c, PointEvaluator& at, std::vector<AtomResult>* trace) {
  for (const Atom& a : c.atoms) {
    AtomResult r{a, false, 0};
    switch (a.kind) {
      case Atom::Kind::EqZero:
        r.observed = at.vanishes(a.keys[0]) ? 0 : 1;
        r.holds = r.observed == 0;
        break;
      case Atom::Kind::NeqZero:
        r.observed = at.vanishes(a.keys[0]) ? 0 : 1;
        r.holds = r.observed == 1;
        break;
      case Atom::Kind::VarEq: {
        SignList signs;
        for (const auto& k : a.keys) signs.push_back(at.sign(k));
        r.observed = var(revise(signs));
        r.holds = r.observed == a.target;
        break;
      }
    }
    if (trace) trace->push_back(r);
    if (!r.holds) return false;
  }
  return true;
}

bool eval_condition(const Condition& c, const ConditionSet& cs, std::span<const Rat> point, std::vector<AtomResult>* trace) {
  PointEvaluator at(cs, point);
  return eval_condition(c, at, trace);
}

std::vector<Rat> parameter_point(const ConditionSet& cs, const NumPoly& p) {
  const int n = cs.degree;
  if (p.degree() != n)
    throw std::invalid_argument("polynomial has degree " + std::to_string(p.degree()) + ", condition set has degree " +
                                std::to_string(n));
  NumPoly q = cs.options.monic ? make_monic(p) : p;
  for (int k : cs.options.drop_coeffs)
    if (sgn(q.coeff(k)) != 0)
      throw std::invalid_argument("coefficient a" + std::to_string(k) + " is fixed to zero by this condition set");
  std::vector<Rat> point(n + 1);
  for (int i = 0; i <= n; ++i) point[i] = q.coeff(i);
  return point;
}

namespace {

Partition trimmed_partition(const std::vector<int>& v) {
  Partition p;
  for (int x : v)
    if (x > 0) p.push_back(x);
  return p;
}

}  // namespace

Verdict classify(const NumPoly& p) {
  const int n = p.degree();
  if (n < 2) throw std::invalid_argument("classification needs degree >= 2");
  const std::vector<NumPoly> tower = derivative_tower(p, false);

  std::vector<int> bar;
  for (const Partition& gamma : enumerate_partitions(n)) {
    if (!subresultant(tower, gamma).is_zero()) {
      bar = gamma;
      break;
    }
  }
  if (bar.empty()) throw std::logic_error("every subresultant of the derivative tower vanished");
  const Partition mu = conjugate(bar, bar[0]);
  bar = conjugate(mu, n);

  std::vector<int> bar_imag(n, 0);
  for (int i = 0; i < mu[0]; ++i) {
    Shifts prefix(bar.begin(), bar.begin() + i);
    NumPoly g = i == 0 ? p : subresultant(tower, prefix);
    int expected = n;
    for (int s : prefix) expected -= s;
    if (g.degree() != expected) throw std::logic_error("gcd candidate has unexpected degree");
    if (expected < 2) continue;
    std::vector<Rat> d = discriminant_sequence(g, bar[i]);
    bar_imag[i] = 2 * var(revise(signs_of(d.begin(), d.end())));
  }
  std::vector<int> bar_real(n);
  for (int i = 0; i < n; ++i) bar_real[i] = bar[i] - bar_imag[i];
  Verdict v;
  v.mu_c.real = trimmed_partition(conjugate(trimmed_partition(bar_real), n));
  v.mu_c.imag = trimmed_partition(conjugate(trimmed_partition(bar_imag), n));
  if (merged(v.mu_c) != mu) throw std::logic_error("real and imaginary parts do not recombine to the multiplicity");
  return v;
}

Verdict classify_with(const ConditionSet& cs, const NumPoly& p) {
  const std::vector<Rat> point = parameter_point(cs, p);
  PointEvaluator at(cs, point);
  const LabeledCondition* match = nullptr;
  std::vector<AtomResult> trace;
  for (const auto& item : cs.items) {
    std::vector<AtomResult> t;
    if (!eval_condition(item.condition, at, &t)) continue;
    if (match)
      throw std::logic_error("conditions for " + to_string(match->mu_c) + " and " + to_string(item.mu_c) +
                             " both hold at " + to_string(p));
    match = &item;
    trace = std::move(t);
  }
  if (!match) throw std::logic_error("no condition holds at " + to_string(p));
  return Verdict{match->mu_c, std::move(trace)};
}

}  // namespace cmult
