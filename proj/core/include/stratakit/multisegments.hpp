#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stratakit/partitions.hpp"
#include "stratakit/segments.hpp"

namespace stratakit {

// Multiset of nonempty segments, kept sorted by canonical_less so that
// multiset equality is structural equality.
class Multisegment {
 public:
  Multisegment() = default;

  // Throws DomainError on an empty member or on two lines sharing an id but
  // disagreeing on dim/period.
  explicit Multisegment(std::vector<Segment> segments);

  std::span<const Segment> segments() const noexcept { return segments_; }
  std::size_t size() const noexcept { return segments_.size(); }
  bool empty() const noexcept { return segments_.empty(); }

  // Multiset union.
  Multisegment operator+(const Multisegment& other) const;

  // "{[1,1],[0,0]}"; the empty multisegment is "{}".
  std::string to_string() const;

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  friend auto operator<=>(const Multisegment&, const Multisegment&) = default;

 private:
  std::vector<Segment> segments_;
};

int degree(const Multisegment& m);

// lambda_i = sum of cuspidal dims over segments of length >= i.
Partition lambda_of(const Multisegment& m);

// Segments ordered so that no segment precedes a later one and contained
// segments come first. Unrelated lines are grouped by line id. Throws for
// finite-period lines.
std::vector<Segment> canonical_order(const Multisegment& m);

// Every multisegment obtained by replacing one linked pair by its union and
// intersection. Sorted by to_string, no duplicates.
std::vector<Multisegment> elementary_reductions(const Multisegment& m);

inline constexpr std::size_t kDefaultDownsetBound = 100000;

// Reflexive-transitive closure of elementary_reductions. Nodes are sorted by
// canonical string; edges are (from, to) index pairs for single reductions.
struct Poset {
  std::vector<Multisegment> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  // Graphviz rendering; nodes labeled by multisegment and its lambda.
  std::string to_dot() const;
};

// Throws BudgetExceeded once more than `bound` nodes are reached.
Poset downset(const Multisegment& m, std::size_t bound = kDefaultDownsetBound);

// Zelevinsky involution via the Moeglin-Waldspurger chain-peeling algorithm,
// applied independently on each cuspidal line.
Multisegment mw_dual(const Multisegment& m);

// Multisegment up to unramified twist of each segment.
struct InertialClass {
  // Each segment moved to start at twist 0 on its line.
  Multisegment representative;
  // Distinct representative segments with their multiplicities n_Delta, in
  // canonical order.
  std::vector<std::pair<Segment, int>> orbits;

  int degree() const { return stratakit::degree(representative); }
  Partition lambda() const { return lambda_of(representative); }
  // |W| = product of n_Delta!
  std::uint64_t weyl_order() const;

  friend bool operator==(const InertialClass&, const InertialClass&) = default;
};

InertialClass inertial_class(const Multisegment& m);

// Rebuilds the orbit data from a representative (segments already anchored).
InertialClass inertial_class_of_representative(const Multisegment& representative);

inline constexpr std::size_t kDefaultSupportBound = 10;

// One cuspidal point of a support multiset (repeat entries for multiplicity).
struct SupportEntry {
  CuspidalLine line;
  int twist = 0;
};

// All multisegments whose support equals the given multiset. Deterministic,
// duplicate free. Throws BudgetExceeded when the support is larger than
// `bound`, DomainError on finite-period lines.
std::vector<Multisegment> enumerate_with_support(std::span<const SupportEntry> support,
                                                 std::size_t bound = kDefaultSupportBound);

// Total support multiset of a multisegment.
Support support(const Multisegment& m);

}  // namespace stratakit
