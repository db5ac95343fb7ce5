#include "cmult/signlists.hpp"

#include <stdexcept>

#include "cmult/sylvester.hpp"

namespace cmult {

SignList revise(const SignList& sigma) {
  SignList out = sigma;
  const int len = static_cast<int>(sigma.size());
  int i = 0;
  while (i < len) {
    if (out[i] == 0) {
      ++i;
      continue;
    }
    int j = i + 1;
    while (j < len && sigma[j] == 0) ++j;
    if (j < len) {
      // Zero run strictly between positions i and j.
      for (int k = 1; i + k < j; ++k) out[i + k] = ((k + 1) / 2) % 2 == 1 ? -out[i] : out[i];
    }
    i = j;
  }
  return out;
}

int var(const SignList& sigma) {
  int changes = 0, last = 0;
  for (int s : revise(sigma)) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int nonzero_count(const SignList& sigma) {
  int count = 0;
  for (int s : revise(sigma))
    if (s != 0) ++count;
  return count;
}

RootCounts count_roots_from_signs(const SignList& sigma) {
  int nu = var(sigma);
  return {nonzero_count(sigma) - 2 * nu, nu};
}

RootCounts count_roots(const NumPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("root counting needs degree >= 1");
  auto d = discriminant_sequence(p);
  return count_roots_from_signs(signs_of(d.begin(), d.end()));
}

}  // namespace cmult
