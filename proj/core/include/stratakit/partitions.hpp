#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace stratakit {

// Integer partition stored as weakly decreasing positive parts. Zero parts are
// never stored, so structural equality is partition equality.
class Partition {
 public:
  Partition() = default;

  // Throws DomainError unless `parts` is weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  // Sorts into decreasing order and drops zeros. Negative entries throw.
  static Partition from_unsorted(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  // i-th part (0-based), zero past the end.
  int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  // "(3,2)"; the empty partition prints as "()".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

Partition conjugate(const Partition& lambda);

// Dominance order: every prefix sum of `lambda` is at most the corresponding
// prefix sum of `mu`. Partitions of different weights are rejected with
// DomainError("incomparable weights").
bool dominance_leq(const Partition& lambda, const Partition& mu);

// Componentwise sum after zero padding.
Partition add(const Partition& lambda, const Partition& mu);

// Simple-root indices on which the degenerate Whittaker character attached to
// `lambda` is nontrivial: {1..n} minus the partial sums
// lambda_r, lambda_r + lambda_{r-1}, ..., n taken from the smallest part up.
// Returned in increasing order.
std::vector<int> whittaker_support(const Partition& lambda);

inline constexpr int kDefaultPartitionBound = 40;

// All partitions of n in decreasing lexicographic order.
std::vector<Partition> enumerate_partitions(int n, int bound = kDefaultPartitionBound);

// Total order used for deterministic listings: decreasing lexicographic.
inline bool lex_greater(const Partition& a, const Partition& b) { return b < a; }

}  // namespace stratakit
