#pragma once

// Revised sign lists and sign-change counts over discriminant sequences.

#include <vector>

#include "cmult/xpoly.hpp"

namespace cmult {

using SignList = std::vector<int>;

template <class It>
SignList signs_of(It first, It last) {
  SignList out;
  for (; first != last; ++first) out.push_back(sgn(*first));
  return out;
}

/// Replaces each interior zero run after a nonzero s by -s, -s, s, s, -s, ...
/// Leading and trailing zeros are kept.
SignList revise(const SignList& sigma);

/// Sign changes between consecutive nonzero entries of the revised list.
int var(const SignList& sigma);

/// Nonzero entries of the revised list.
int nonzero_count(const SignList& sigma);

struct RootCounts {
  int distinct_real = 0;
  int imaginary_pairs = 0;
  friend bool operator==(const RootCounts&, const RootCounts&) = default;
};

/// Root counts read off the signs of D_1..D_n.
RootCounts count_roots_from_signs(const SignList& sigma);

/// Distinct real roots and distinct conjugate pairs of a rational polynomial.
RootCounts count_roots(const NumPoly& p);

}  // namespace cmult
