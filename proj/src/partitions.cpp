#include "cmult/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace cmult {

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions of a negative integer");
  std::vector<Partition> out;
  Partition cur;
  // Largest first part first gives descending lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      cur.push_back(part);
      rec(remaining - part, part);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> enumerate_smaller_partitions(int n) {
  std::vector<Partition> out;
  for (int i = 0; i < n; ++i) {
    auto block = enumerate_partitions(i);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

long long partition_count(int n) {
  if (n < 0) return 0;
  std::vector<long long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[s] += p[s - part];
  return p[n];
}

std::vector<int> conjugate(const Partition& mu, int length) {
  std::vector<int> out(std::max(length, 0), 0);
  for (int i = 1; i <= length; ++i)
    out[i - 1] = static_cast<int>(std::count_if(mu.begin(), mu.end(), [i](int part) { return part >= i; }));
  return out;
}

bool lex_greater(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    if (x != y) return x > y;
  }
  return false;
}

std::vector<CompletePartition> enumerate_complete(const Partition& mu) {
  std::map<int, int, std::greater<>> counts;
  for (int part : mu) {
    if (part <= 0) throw std::invalid_argument("partition parts must be positive");
    ++counts[part];
  }
  std::vector<std::pair<int, int>> values(counts.begin(), counts.end());
  std::set<CompletePartition> found;
  CompletePartition cur;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == values.size()) {
      CompletePartition c = cur;
      std::sort(c.real.begin(), c.real.end(), std::greater<>());
      std::sort(c.imag.begin(), c.imag.end(), std::greater<>());
      found.insert(c);
      return;
    }
    auto [value, count] = values[idx];
    for (int pairs = 0; 2 * pairs <= count; ++pairs) {
      std::size_t real_before = cur.real.size(), imag_before = cur.imag.size();
      cur.imag.insert(cur.imag.end(), 2 * pairs, value);
      cur.real.insert(cur.real.end(), count - 2 * pairs, value);
      rec(idx + 1);
      cur.real.resize(real_before);
      cur.imag.resize(imag_before);
    }
  };
  rec(0);
  // Most real parts first.
  std::vector<CompletePartition> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const CompletePartition& a, const CompletePartition& b) {
    if (a.imag.size() != b.imag.size()) return a.imag.size() < b.imag.size();
    return lex_greater(a.imag, b.imag) || (a.imag == b.imag && lex_greater(a.real, b.real));
  });
  return out;
}

std::vector<CompletePartition> enumerate_all_complete(int n) {
  std::vector<CompletePartition> out;
  for (const auto& mu : enumerate_partitions(n)) {
    auto block = enumerate_complete(mu);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

Partition merged(const CompletePartition& c) {
  Partition out = c.real;
  out.insert(out.end(), c.imag.begin(), c.imag.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + ")";
}

std::string to_string(const CompletePartition& c) { return "(" + to_string(c.real) + ";" + to_string(c.imag) + ")"; }

}  // namespace cmult
