#include "cmult/sylvester.hpp"

#include <numeric>

namespace cmult {

Shifts trim_shifts(const Shifts& delta) {
  Shifts out = delta;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

int leading_shift(const std::vector<int>& degrees, const Shifts& delta) {
  int best = -1;
  for (std::size_t i = 0; i < delta.size(); ++i)
    if (delta[i] != 0) best = std::max(best, degrees.at(i + 1) + delta[i]);
  return best >= degrees.at(0) ? best - degrees[0] : 1;
}

int subresultant_formal_degree(int d0, const Shifts& delta) {
  return d0 - std::accumulate(delta.begin(), delta.end(), 0);
}

std::string shifts_to_string(const Shifts& delta) {
  std::string out = "(";
  for (std::size_t i = 0; i < delta.size(); ++i) out += (i ? "," : "") + std::to_string(delta[i]);
  return out + ")";
}

std::optional<int> prem_split_index(const Shifts& delta) {
  for (std::size_t j = 0; j + 1 < delta.size(); ++j)
    if (delta[j] > delta[j + 1]) return static_cast<int>(j);
  return std::nullopt;
}

namespace {

std::vector<int> even_orders(int n, int upto) {
  if (upto < 0 || upto > n) upto = n;
  std::vector<int> orders;
  for (int j = 1; j <= upto; ++j) orders.push_back(2 * j);
  return orders;
}

}  // namespace

std::vector<ParamPoly> discriminant_sequence(const SymPoly& p, int upto) {
  return expansion_leading_minors(discrimination_matrix(p), even_orders(p.degree(), upto));
}

std::vector<Rat> discriminant_sequence(const NumPoly& p, int upto) {
  return leading_minors(discrimination_matrix(p), even_orders(p.degree(), upto));
}

}  // namespace cmult
