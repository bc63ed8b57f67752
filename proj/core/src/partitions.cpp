#include "nlft/partitions.hpp"

#include <stdexcept>
#include <string>

namespace nlft {
namespace {

void check_bounds(int grid_size, int shift, int parts, bool distinct) {
  if (grid_size < 1) throw std::invalid_argument("grid size must be >= 1");
  if (parts < 1) throw std::invalid_argument("part count must be >= 1");
  if (distinct && parts > grid_size) {
    throw std::invalid_argument("distinct parts: d = " + std::to_string(parts) +
                                " exceeds N = " + std::to_string(grid_size));
  }
  if (shift < 0 || shift >= grid_size) {
    throw std::out_of_range("shift l = " + std::to_string(shift) + " outside 0..N-1");
  }
}

// Depth-first descent over decreasing tuples. `sign` is the sign of the next
// part; the remaining alternating sum of parts bounded by `bound` lies in
// [0, bound] when the next sign is + and in [-bound, 0] when it is -.
struct TupleCounter {
  long long target;
  bool strict;

  long long count(int remaining, long long partial, int sign, long long max_part,
                  long long min_part) const {
    if (remaining == 0) return partial == target ? 1 : 0;
    if (max_part < min_part) return 0;
    const long long lo = sign > 0 ? partial : partial - max_part;
    const long long hi = sign > 0 ? partial + max_part : partial;
    if (target < lo || target > hi) return 0;
    long long total = 0;
    for (long long part = max_part; part >= min_part; --part) {
      const long long next_max = strict ? part - 1 : part;
      if (strict && remaining - 1 > part - min_part) break;
      total += count(remaining - 1, partial + sign * part, -sign, next_max, min_part);
    }
    return total;
  }
};

}  // namespace

BigInt binomial(long long top, long long bottom) {
  if (top < 0 || bottom < 0 || bottom > top) return 0;
  if (bottom > top - bottom) bottom = top - bottom;
  BigInt result = 1;
  for (long long i = 1; i <= bottom; ++i) {
    result *= top - bottom + i;
    result /= i;
  }
  return result;
}

MultiIndex::MultiIndex(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw std::invalid_argument("MultiIndex: negative multiplicity");
  }
}

long long MultiIndex::norm1() const {
  long long s = 0;
  for (int c : counts_) s += c;
  return s;
}

int parity(long long k) { return static_cast<int>(((k % 2) + 2) % 2); }

int odd_count(const MultiIndex& k) {
  int odd = 0;
  for (int c : k.counts()) odd += parity(c);
  return odd;
}

long long alt(const MultiIndex& k) {
  long long sum = 0;
  int sign = 1;
  for (std::size_t j = k.size(); j-- > 0;) {
    for (int i = 0; i < k[j]; ++i) {
      sum += sign * static_cast<long long>(j);
      sign = -sign;
    }
  }
  return sum;
}

long long alt_nested(const MultiIndex& k) {
  long long sum = 0;
  int parity_so_far = 0;
  for (std::size_t j = k.size(); j-- > 0;) {
    long long inner = 0;
    for (int i = 1; i <= k[j]; ++i) inner += (i % 2 == 1 ? 1 : -1) * static_cast<long long>(j);
    sum += (parity_so_far % 2 == 0 ? 1 : -1) * inner;
    parity_so_far += parity(k[j]);
  }
  return sum;
}

void for_each_composition(std::size_t size, int total,
                          const std::function<void(const MultiIndex&)>& visit) {
  if (size == 0) throw std::invalid_argument("for_each_composition: empty index set");
  if (total < 0) throw std::invalid_argument("for_each_composition: negative total");
  std::vector<int> k(size, 0);
  std::function<void(std::size_t, int)> place = [&](std::size_t pos, int left) {
    if (pos + 1 == size) {
      k[pos] = left;
      visit(MultiIndex(k));
      return;
    }
    for (int c = left; c >= 0; --c) {
      k[pos] = c;
      place(pos + 1, left - c);
    }
  };
  place(0, total);
}

BigInt PartitionTable::total() const {
  BigInt s = 0;
  for (const auto& c : counts) s += c;
  return s;
}

BigInt PartitionTable::expected_total() const {
  return kind == PartitionKind::distinct ? binomial(grid_size, parts)
                                         : binomial(grid_size + parts - 1, parts);
}

BigInt aq_brute(int grid_size, int shift, int parts) {
  check_bounds(grid_size, shift, parts, true);
  const TupleCounter counter{shift, true};
  return counter.count(parts, 0, 1, grid_size - 1, 0);
}

BigInt aq_closed(int grid_size, int shift, int parts) {
  check_bounds(grid_size, shift, parts, true);
  const long long lower = (parts - 1) / 2;
  const long long upper = parts / 2;
  if (parts % 2 == 0) {
    return binomial(shift - 1, lower) * binomial(grid_size - shift, upper);
  }
  return binomial(shift, lower) * binomial(grid_size - shift - 1, upper);
}

BigInt aq_hat(int grid_size, long long shift, int parts) {
  if (grid_size < 0 || parts < 0) throw std::invalid_argument("aq_hat: negative size");
  if (parts == 0) return shift == 0 ? 1 : 0;
  const TupleCounter counter{shift, true};
  return counter.count(parts, 0, 1, grid_size, 1);
}

BigInt ap_brute(int grid_size, int shift, int parts) {
  check_bounds(grid_size, shift, parts, false);
  const TupleCounter counter{shift, false};
  return counter.count(parts, 0, 1, grid_size - 1, 0);
}

BigInt ap_via_alt(int grid_size, int shift, int parts) {
  check_bounds(grid_size, shift, parts, false);
  long long hits = 0;
  for_each_composition(static_cast<std::size_t>(grid_size), parts, [&](const MultiIndex& k) {
    if (alt(k) == shift) ++hits;
  });
  return hits;
}

std::vector<BigInt> ap_via_alt_all(int grid_size, int parts) {
  check_bounds(grid_size, 0, parts, false);
  std::vector<long long> hits(static_cast<std::size_t>(grid_size), 0);
  for_each_composition(static_cast<std::size_t>(grid_size), parts,
                       [&](const MultiIndex& k) { ++hits[static_cast<std::size_t>(alt(k))]; });
  return {hits.begin(), hits.end()};
}

PartitionTable aq_table(int grid_size, int parts) {
  PartitionTable table{grid_size, parts, PartitionKind::distinct, {}};
  for (int l = 0; l < grid_size; ++l) table.counts.push_back(aq_closed(grid_size, l, parts));
  return table;
}

PartitionTable ap_table(int grid_size, int parts) {
  PartitionTable table{grid_size, parts, PartitionKind::non_distinct, {}};
  for (int l = 0; l < grid_size; ++l) table.counts.push_back(ap_brute(grid_size, l, parts));
  return table;
}

}  // namespace nlft
