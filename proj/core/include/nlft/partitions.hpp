#ifndef NLFT_PARTITIONS_HPP
#define NLFT_PARTITIONS_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nlft {

using BigInt = boost::multiprecision::cpp_int;

/// Binomial coefficient with C(a, b) = 0 for negative a, negative b or b > a.
BigInt binomial(long long top, long long bottom);

/// Multiplicity vector k = (k_0, ..., k_{N-1}) of non-negative integers.
/// It encodes the weakly decreasing tuple in which index j appears k_j times.
class MultiIndex {
 public:
  /// Throws std::invalid_argument on a negative component.
  explicit MultiIndex(std::vector<int> counts);

  std::size_t size() const { return counts_.size(); }
  int operator[](std::size_t j) const { return counts_[j]; }
  std::span<const int> counts() const { return counts_; }
  long long norm1() const;

 private:
  std::vector<int> counts_;
};

/// k mod 2.
int parity(long long k);

/// Number of odd components of k.
int odd_count(const MultiIndex& k);

/// Alternating sum of the expanded tuple, highest index first.
long long alt(const MultiIndex& k);

/// The same quantity through the nested sign formula (sign flips after
/// every odd multiplicity). Kept as an independent route for tests.
long long alt_nested(const MultiIndex& k);

/// Calls `visit` once for every k in Z_{>=0}^size with |k|_1 = total,
/// in lexicographically decreasing order of k.
void for_each_composition(std::size_t size, int total,
                          const std::function<void(const MultiIndex&)>& visit);

enum class PartitionKind { distinct, non_distinct };

/// Counts for one (N, d) over l = 0..N-1.
struct PartitionTable {
  int grid_size = 0;
  int parts = 0;
  PartitionKind kind = PartitionKind::distinct;
  std::vector<BigInt> counts;

  BigInt total() const;
  /// C(N, d) for distinct parts, C(N + d - 1, d) otherwise.
  BigInt expected_total() const;
};

/// Strictly decreasing d-tuples N-1 >= l_1 > ... > l_d >= 0 with
/// alternating sum l, by pruned enumeration. Requires 1 <= d <= N, 0 <= l < N.
BigInt aq_brute(int grid_size, int shift, int parts);

/// Closed binomial form of the same count.
BigInt aq_closed(int grid_size, int shift, int parts);

/// Tuples N >= l_1 > ... > l_d >= 1 with alternating sum l (enumeration).
/// Defined for N >= 0, d >= 0 and any integer l; d = 0 counts the empty tuple.
BigInt aq_hat(int grid_size, long long shift, int parts);

/// Weakly decreasing d-tuples N-1 >= l_1 >= ... >= l_d >= 0 with
/// alternating sum l. Requires d >= 1, 0 <= l < N.
BigInt ap_brute(int grid_size, int shift, int parts);

/// Number of multiplicity vectors with |k|_1 = d and alt(k) = l.
BigInt ap_via_alt(int grid_size, int shift, int parts);
/// ap_via_alt for every l from one pass over the multiplicity vectors.
std::vector<BigInt> ap_via_alt_all(int grid_size, int parts);

PartitionTable aq_table(int grid_size, int parts);
PartitionTable ap_table(int grid_size, int parts);

}  // namespace nlft

#endif  // NLFT_PARTITIONS_HPP
