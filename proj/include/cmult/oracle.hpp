#pragma once

// Independent ground truth: polynomials built from prescribed roots,
// Euclidean gcd chains, Sturm counts, the confluent Vandermonde identity,
// and named randomized verification suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cmult/matrix.hpp"
#include "cmult/partitions.hpp"
#include "cmult/signlists.hpp"

namespace cmult {

struct RootSpec {
  Rat root;
  int multiplicity = 1;
};

struct QuadraticSpec {
  /// Monic x^2 + b x + c with b^2 - 4c < 0.
  NumPoly quadratic;
  int multiplicity = 1;
};

struct Witness {
  NumPoly poly;
  CompletePartition mu_c;
};

/// lead * prod (x - r)^m * prod q^m. Throws std::invalid_argument on a
/// repeated root, a repeated quadratic, a quadratic that is not monic of
/// degree 2, a quadratic with real roots, or a nonpositive multiplicity.
Witness construct_witness(const std::vector<RootSpec>& roots, const std::vector<QuadraticSpec>& quadratics,
                          const Rat& lead = 1);

/// Monic G_0 = P, G_i = gcd(G_{i-1}, P^(i)), ending at the first constant.
std::vector<NumPoly> euclid_gcd_chain(const NumPoly& p);

/// Monic G~_0 = P, G~_i = gcd(G~_{i-1}, G~'_{i-1}), ending at the first
/// constant.
std::vector<NumPoly> repeated_gcd_chain(const NumPoly& p);

/// Block matrix [U(x_1; k, tau_1) ... U(x_l; k, tau_l)], k = sum tau,
/// with U entries binom(i, j) x^(i-j) (0-based).
NumMatrix confluent_vandermonde_matrix(const std::vector<Rat>& xs, const std::vector<int>& taus);

struct VandermondeCheck {
  Rat determinant;
  Rat closed_form;
  bool agrees() const { return determinant == closed_form; }
};

VandermondeCheck confluent_vandermonde_det(const std::vector<Rat>& xs, const std::vector<int>& taus);

/// Distinct real roots via the Sturm sequence of the squarefree part.
int sturm_real_root_count(const NumPoly& p);

/// Distinct-root counts known from the construction.
RootCounts ground_truth_counts(const CompletePartition& mu_c);

/// Per-trial seed derived from a master seed (splitmix64 mixing).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

/// Random witnesses: rational roots from a small grid, quadratics
/// x^2 + b x + c with c chosen above b^2/4, nonzero rational lead.
class WitnessGenerator {
 public:
  explicit WitnessGenerator(std::uint64_t seed) : rng_(seed) {}

  Witness for_structure(const CompletePartition& mu_c);
  /// Structure drawn uniformly from all complete structures of `degree`.
  Witness random(int degree);

  Rat small_rational(int num_bound, int den_bound);
  Rat nonzero_rational(int num_bound, int den_bound);
  int uniform(int lo, int hi);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct SuiteReport {
  std::string name;
  int trials = 0;
  int passed = 0;
  std::vector<std::string> failures;
  double seconds = 0;
  bool ok() const { return trials == passed; }
};

/// icgcd, appendixB, prem, vandermonde, yhz-roots, cross-method.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name. Trials are independent
/// and reproducible from (seed, trial index).
SuiteReport run_suite(const std::string& name, int trials, std::uint64_t seed);

}  // namespace cmult
