#include "cmult/oracle.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <set>

#include "cmult/evaluate.hpp"

namespace cmult {

Witness construct_witness(const std::vector<RootSpec>& roots, const std::vector<QuadraticSpec>& quadratics,
                          const Rat& lead) {
  if (sgn(lead) == 0) throw std::invalid_argument("leading coefficient must be nonzero");
  NumPoly p = NumPoly::constant(lead);
  Witness w;
  std::set<Rat> seen_roots;
  for (const auto& r : roots) {
    if (r.multiplicity < 1) throw std::invalid_argument("root multiplicity must be positive");
    if (!seen_roots.insert(r.root).second) throw std::invalid_argument("repeated root " + r.root.get_str());
    NumPoly factor(std::vector<Rat>{-r.root, Rat(1)});
    for (int k = 0; k < r.multiplicity; ++k) p = p * factor;
    w.mu_c.real.push_back(r.multiplicity);
  }
  std::set<std::pair<Rat, Rat>> seen_quads;
  for (const auto& q : quadratics) {
    if (q.multiplicity < 1) throw std::invalid_argument("quadratic multiplicity must be positive");
    if (q.quadratic.degree() != 2 || q.quadratic.leading() != 1) throw std::invalid_argument("quadratic must be monic of degree 2");
    const Rat& b = q.quadratic.coeffs()[1];
    const Rat& c = q.quadratic.coeffs()[0];
    if (sgn(b * b - 4 * c) >= 0) throw std::invalid_argument("quadratic " + to_string(q.quadratic) + " has real roots");
    if (!seen_quads.insert({b, c}).second) throw std::invalid_argument("repeated quadratic " + to_string(q.quadratic));
    for (int k = 0; k < q.multiplicity; ++k) p = p * q.quadratic;
    w.mu_c.imag.push_back(q.multiplicity);
    w.mu_c.imag.push_back(q.multiplicity);
  }
  std::sort(w.mu_c.real.rbegin(), w.mu_c.real.rend());
  std::sort(w.mu_c.imag.rbegin(), w.mu_c.imag.rend());
  w.poly = std::move(p);
  return w;
}

std::vector<NumPoly> euclid_gcd_chain(const NumPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("gcd chain of the zero polynomial");
  std::vector<NumPoly> chain{make_monic(p)};
  for (int i = 1; chain.back().degree() > 0; ++i) chain.push_back(gcd(chain.back(), derivative(p, i)));
  return chain;
}

std::vector<NumPoly> repeated_gcd_chain(const NumPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("gcd chain of the zero polynomial");
  std::vector<NumPoly> chain{make_monic(p)};
  while (chain.back().degree() > 0) chain.push_back(gcd(chain.back(), derivative(chain.back(), 1)));
  return chain;
}

NumMatrix confluent_vandermonde_matrix(const std::vector<Rat>& xs, const std::vector<int>& taus) {
  if (xs.size() != taus.size()) throw std::invalid_argument("xs and taus differ in length");
  int k = 0;
  for (int t : taus) {
    if (t < 1) throw std::invalid_argument("tau entries must be positive");
    k += t;
  }
  NumMatrix m(k, k);
  int col = 0;
  for (std::size_t b = 0; b < xs.size(); ++b) {
    for (int j = 0; j < taus[b]; ++j, ++col) {
      for (int i = j; i < k; ++i) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(j));
        Rat power = 1;
        for (int e = 0; e < i - j; ++e) power *= xs[b];
        m.at(i, col) = Rat(binom) * power;
      }
    }
  }
  return m;
}

VandermondeCheck confluent_vandermonde_det(const std::vector<Rat>& xs, const std::vector<int>& taus) {
  VandermondeCheck out;
  out.determinant = bareiss_determinant(confluent_vandermonde_matrix(xs, taus));
  out.closed_form = 1;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      Rat diff = xs[j] - xs[i];
      for (int e = 0; e < taus[i] * taus[j]; ++e) out.closed_form *= diff;
    }
  return out;
}

namespace {

// Sign of p at +inf (or -inf when `negative`).
int sign_at_infinity(const NumPoly& p, bool negative) {
  int s = sgn(p.leading());
  return negative && p.degree() % 2 != 0 ? -s : s;
}

int variations(const std::vector<NumPoly>& seq, bool negative) {
  int count = 0, last = 0;
  for (const auto& q : seq) {
    int s = sign_at_infinity(q, negative);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int sturm_real_root_count(const NumPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm count of the zero polynomial");
  if (p.degree() == 0) return 0;
  NumPoly squarefree = divide(p, gcd(p, derivative(p, 1))).first;
  std::vector<NumPoly> seq{squarefree, derivative(squarefree, 1)};
  while (seq.back().degree() > 0) {
    NumPoly r = divide(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  return variations(seq, true) - variations(seq, false);
}

RootCounts ground_truth_counts(const CompletePartition& mu_c) {
  return RootCounts{static_cast<int>(mu_c.real.size()), static_cast<int>(mu_c.imag.size() / 2)};
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int WitnessGenerator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

Rat WitnessGenerator::small_rational(int num_bound, int den_bound) {
  Rat q(uniform(-num_bound, num_bound), uniform(1, den_bound));
  q.canonicalize();
  return q;
}

Rat WitnessGenerator::nonzero_rational(int num_bound, int den_bound) {
  int num = uniform(1, num_bound) * (uniform(0, 1) ? 1 : -1);
  Rat q(num, uniform(1, den_bound));
  q.canonicalize();
  return q;
}

Witness WitnessGenerator::for_structure(const CompletePartition& mu_c) {
  std::vector<RootSpec> roots;
  std::set<Rat> used;
  for (int m : mu_c.real) {
    Rat r;
    do r = small_rational(6, 3);
    while (used.count(r));
    used.insert(r);
    roots.push_back({r, m});
  }
  std::vector<QuadraticSpec> quads;
  std::set<std::pair<Rat, Rat>> used_quads;
  for (std::size_t i = 0; i + 1 < mu_c.imag.size(); i += 2) {
    if (mu_c.imag[i] != mu_c.imag[i + 1]) throw std::invalid_argument("imaginary parts must come in equal pairs");
    Rat b, c;
    do {
      b = small_rational(4, 2);
      Rat gap(uniform(1, 9), uniform(1, 3));
      gap.canonicalize();
      c = b * b / 4 + gap;
    } while (used_quads.count({b, c}));
    used_quads.insert({b, c});
    quads.push_back({NumPoly(std::vector<Rat>{c, b, Rat(1)}), mu_c.imag[i]});
  }
  Witness w = construct_witness(roots, quads, nonzero_rational(5, 3));
  if (w.mu_c != mu_c) throw std::logic_error("constructed structure differs from the request");
  return w;
}

Witness WitnessGenerator::random(int degree) {
  std::vector<CompletePartition> all = enumerate_all_complete(degree);
  return for_structure(all[uniform(0, static_cast<int>(all.size()) - 1)]);
}

// ---------------------------------------------------------------------------
// Suites

namespace {

using Trial = std::function<void(WitnessGenerator&, std::uint64_t, std::string&)>;

void require(bool ok, std::string& why, const std::string& message) {
  if (!ok && why.empty()) why = message;
}

std::vector<Shifts> conjugate_prefixes(const Partition& mu, int n) {
  std::vector<int> bar = conjugate(mu, n);
  std::vector<Shifts> out;
  for (int i = 1; i < mu[0]; ++i) out.emplace_back(bar.begin(), bar.begin() + i);
  return out;
}

void icgcd_trial(WitnessGenerator& gen, std::uint64_t t, std::string& why) {
  const int n = 4 + static_cast<int>(t % 4);
  Witness w = gen.random(n);
  const Partition mu = merged(w.mu_c);
  const auto tower = derivative_tower(w.poly, false);
  const auto euclid = euclid_gcd_chain(w.poly);
  const auto prefixes = conjugate_prefixes(mu, n);
  for (std::size_t i = 1; i <= prefixes.size(); ++i) {
    NumPoly via_subresultant = subresultant(tower, prefixes[i - 1]);
    require(!via_subresultant.is_zero() && normalize_assoc(via_subresultant) == normalize_assoc(euclid.at(i)), why,
            "G_" + std::to_string(i) + " differs for " + to_string(w.poly));
  }
}

void appendix_b_trial(WitnessGenerator& gen, std::uint64_t t, std::string& why) {
  const int n = 2 + static_cast<int>(t % 7);
  Witness w = gen.random(n);
  const auto a = euclid_gcd_chain(w.poly);
  const auto b = repeated_gcd_chain(w.poly);
  require(a.size() == b.size(), why, "chain lengths differ for " + to_string(w.poly));
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    require(normalize_assoc(a[i]) == normalize_assoc(b[i]), why,
            "chains differ at " + std::to_string(i) + " for " + to_string(w.poly));
}

void prem_trial(WitnessGenerator& gen, std::uint64_t t, std::string& why) {
  const int n = 3 + static_cast<int>(t % 5);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Rat> coeffs(n + 1);
    for (auto& c : coeffs) c = gen.small_rational(9, 1);
    coeffs[n] = gen.nonzero_rational(9, 1);
    NumPoly p(coeffs);
    const bool scaled = gen.uniform(0, 1) == 1;
    const auto tower = derivative_tower(p, scaled);
    const int len = gen.uniform(2, std::min(n, 4));
    Shifts delta;
    int budget = n;
    for (int i = 0; i < len; ++i) {
      int cap = std::min(budget - (len - 1 - i), delta.empty() ? n : delta.back());
      if (cap < 1) break;
      delta.push_back(gen.uniform(1, cap));
      budget -= delta.back();
    }
    if (static_cast<int>(delta.size()) != len || !prem_split_index(delta)) continue;
    NumPoly via_prem;
    try {
      via_prem = subresultant_via_prem(tower, delta);
    } catch (const std::domain_error&) {
      continue;
    }
    require(via_prem == subresultant(tower, delta), why,
            "prem route differs for " + to_string(p) + " at " + shifts_to_string(delta));
    return;
  }
  why = "no admissible prem instance found";
}

void vandermonde_trial(WitnessGenerator& gen, std::uint64_t, std::string& why) {
  const int ell = gen.uniform(1, 5);
  std::vector<int> taus;
  int left = 9;
  for (int i = 0; i < ell && left - (ell - 1 - i) >= 1; ++i) {
    taus.push_back(gen.uniform(1, std::min(4, left - (ell - 1 - i))));
    left -= taus.back();
  }
  std::vector<Rat> xs;
  std::set<Rat> used;
  while (xs.size() < taus.size()) {
    Rat x = gen.small_rational(7, 4);
    if (used.insert(x).second) xs.push_back(x);
  }
  VandermondeCheck c = confluent_vandermonde_det(xs, taus);
  require(c.agrees(), why, "determinant " + c.determinant.get_str() + " != closed form " + c.closed_form.get_str());
}

void yhz_roots_trial(WitnessGenerator& gen, std::uint64_t t, std::string& why) {
  const int n = 2 + static_cast<int>(t % 7);
  Witness w = gen.random(n);
  RootCounts counted = count_roots(w.poly);
  require(counted == ground_truth_counts(w.mu_c), why, "count_roots disagrees with the construction for " + to_string(w.poly));
  require(sturm_real_root_count(w.poly) == counted.distinct_real, why, "Sturm count disagrees for " + to_string(w.poly));
  // Each level of the repeated-gcd chain keeps the roots of multiplicity > i.
  const auto chain = repeated_gcd_chain(w.poly);
  for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
    CompletePartition level;
    for (int m : w.mu_c.real)
      if (m > static_cast<int>(i)) level.real.push_back(m - static_cast<int>(i));
    for (int m : w.mu_c.imag)
      if (m > static_cast<int>(i)) level.imag.push_back(m - static_cast<int>(i));
    require(count_roots(chain[i]) == ground_truth_counts(level), why,
            "count_roots disagrees on chain level " + std::to_string(i) + " of " + to_string(w.poly));
  }
}

const ConditionSet& cached_set(int n, Method m) {
  static std::mutex mutex;
  static std::map<std::pair<int, Method>, ConditionSet> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find({n, m});
  if (it == cache.end()) it = cache.emplace(std::make_pair(n, m), generate(n, m)).first;
  return it->second;
}

void cross_method_trial(WitnessGenerator& gen, std::uint64_t t, std::string& why) {
  const int n = 3 + static_cast<int>(t % 3);
  Witness w = gen.random(n);
  const Verdict qxy = classify_with(cached_set(n, Method::Qxy), w.poly);
  const Verdict yhz = classify_with(cached_set(n, Method::Yhz), w.poly);
  require(qxy.mu_c == yhz.mu_c, why,
          "methods disagree on " + to_string(w.poly) + ": " + to_string(qxy.mu_c) + " vs " + to_string(yhz.mu_c));
  require(qxy.mu_c == w.mu_c, why, "qxy misclassifies " + to_string(w.poly));
  require(classify(w.poly).mu_c == w.mu_c, why, "numeric pipeline misclassifies " + to_string(w.poly));
}

const std::map<std::string, Trial>& suites() {
  static const std::map<std::string, Trial> table{
      {"icgcd", icgcd_trial},           {"appendixB", appendix_b_trial},      {"prem", prem_trial},
      {"vandermonde", vandermonde_trial}, {"yhz-roots", yhz_roots_trial}, {"cross-method", cross_method_trial},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"icgcd", "appendixB", "prem", "vandermonde", "yhz-roots", "cross-method"};
  return names;
}

SuiteReport run_suite(const std::string& name, int trials, std::uint64_t seed) {
  auto it = suites().find(name);
  if (it == suites().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  if (trials < 0) throw std::invalid_argument("trial count must be non-negative");
  SuiteReport report;
  report.name = name;
  report.trials = trials;
  const auto start = std::chrono::steady_clock::now();
  for (int t = 0; t < trials; ++t) {
    WitnessGenerator gen(trial_seed(seed, static_cast<std::uint64_t>(t)));
    std::string why;
    try {
      it->second(gen, static_cast<std::uint64_t>(t), why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (why.empty())
      ++report.passed;
    else
      report.failures.push_back("trial " + std::to_string(t) + ": " + why);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cmult
