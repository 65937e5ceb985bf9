#include "stratakit/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "stratakit/error.hpp"

namespace stratakit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p < 0; }))
    throw DomainError("partition parts must be nonnegative");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> out(static_cast<std::size_t>(lambda.part(0)), 0);
  for (int p : lambda.parts())
    for (int i = 0; i < p; ++i) ++out[static_cast<std::size_t>(i)];
  return Partition(std::move(out));
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight()) throw DomainError("incomparable weights");
  const auto len = static_cast<std::size_t>(std::max(lambda.length(), mu.length()));
  int lhs = 0;
  int rhs = 0;
  for (std::size_t i = 0; i < len; ++i) {
    lhs += lambda.part(i);
    rhs += mu.part(i);
    if (lhs > rhs) return false;
  }
  return true;
}

Partition add(const Partition& lambda, const Partition& mu) {
  const auto len = static_cast<std::size_t>(std::max(lambda.length(), mu.length()));
  std::vector<int> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = lambda.part(i) + mu.part(i);
  return Partition(std::move(out));
}

std::vector<int> whittaker_support(const Partition& lambda) {
  if (lambda.empty()) throw DomainError("whittaker support undefined for weight 0");
  const int n = lambda.weight();
  std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
  int partial = 0;
  for (auto it = lambda.parts().rbegin(); it != lambda.parts().rend(); ++it) {
    partial += *it;
    removed[static_cast<std::size_t>(partial)] = true;
  }
  std::vector<int> out;
  for (int i = 1; i <= n; ++i)
    if (!removed[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    partitions_rec(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, int bound) {
  if (n < 0) throw DomainError("cannot enumerate partitions of a negative integer");
  if (n > bound) throw BudgetExceeded("partition enumeration bound exceeded: " + std::to_string(n) + " > " + std::to_string(bound));
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

}  // namespace stratakit
