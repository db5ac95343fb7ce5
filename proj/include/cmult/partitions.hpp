#pragma once

// Integer partitions, conjugates, and splits of a partition into real and
// imaginary multiplicity parts.

#include <string>
#include <vector>

namespace cmult {

/// Weakly decreasing positive parts.
using Partition = std::vector<int>;

struct CompletePartition {
  Partition real;
  /// Parts come in equal adjacent pairs, one pair per conjugate root pair.
  Partition imag;

  friend bool operator==(const CompletePartition&, const CompletePartition&) = default;
  friend auto operator<=>(const CompletePartition&, const CompletePartition&) = default;
};

/// All partitions of n in descending lexicographic order; M(0) = {()}.
std::vector<Partition> enumerate_partitions(int n);

/// Partitions of 0..n-1, each block in descending lexicographic order,
/// blocks by increasing size.
std::vector<Partition> enumerate_smaller_partitions(int n);

/// Number of partitions of n.
long long partition_count(int n);

/// Conjugate, zero padded (or truncated of trailing zeros) to `length`.
std::vector<int> conjugate(const Partition& mu, int length);

/// Strict lexicographic comparison a > b; the shorter list is padded with
/// zeros.
bool lex_greater(const std::vector<int>& a, const std::vector<int>& b);

/// Every way to split the parts of mu into a real part and paired imaginary
/// part. Output is sorted and duplicate free.
std::vector<CompletePartition> enumerate_complete(const Partition& mu);

/// Union of enumerate_complete over all partitions of n, in the order the
/// partitions are enumerated.
std::vector<CompletePartition> enumerate_all_complete(int n);

/// Merged multiplicity vector, sorted weakly decreasing.
Partition merged(const CompletePartition& c);

std::string to_string(const Partition& p);
std::string to_string(const CompletePartition& c);

}  // namespace cmult
