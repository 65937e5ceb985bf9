#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace stratakit {

// An inertial cuspidal line: the unramified twists nu^t rho_0 of a fixed
// cuspidal rho_0 of G_dim. With a finite period e (order of nu mod l on the
// line) twist exponents live in Z/e.
struct CuspidalLine {
  std::string id = "rho";
  int dim = 1;
  std::optional<int> period;  // nullopt: characteristic zero, no wraparound

  bool finite() const noexcept { return period.has_value(); }
  int reduce(int twist) const noexcept;

  friend bool operator==(const CuspidalLine&, const CuspidalLine&) = default;
  friend auto operator<=>(const CuspidalLine&, const CuspidalLine&) = default;
};

// Zelevinsky segment [a,b] on a cuspidal line, or the empty segment.
//
// Twists are folded into the endpoints: `a` and `b` are absolute twist
// exponents relative to the line's base point, so equivalent segments are
// structurally equal. On a finite-period line `a` is reduced into [0,e) and
// `b - a` keeps the length.
class Segment {
 public:
  // The empty segment; d = 0, stands for the trivial group's representation.
  Segment() = default;

  // Throws DomainError if b < a, dim < 1 or period < 1.
  Segment(CuspidalLine line, int a, int b);

  static Segment empty() { return {}; }

  bool is_empty() const noexcept { return empty_; }
  const CuspidalLine& line() const noexcept { return line_; }
  int start() const noexcept { return a_; }
  int end() const noexcept { return b_; }
  int length() const noexcept { return empty_ ? 0 : b_ - a_ + 1; }
  int cuspidal_dim() const noexcept { return empty_ ? 0 : line_.dim; }
  int degree() const noexcept { return length() * cuspidal_dim(); }

  // Twist every cuspidal of the segment by nu^t.
  Segment shifted(int t) const;

  // "[a,b]" on the default line "rho", "[a,b;id]" otherwise, "[]" when empty.
  std::string to_string() const;

  friend bool operator==(const Segment&, const Segment&) = default;
  friend auto operator<=>(const Segment&, const Segment&) = default;

 private:
  bool empty_ = true;
  CuspidalLine line_{};
  int a_ = 0;
  int b_ = -1;
};

// Canonical order inside multisegments: line id ascending, then end twist
// descending, then start twist descending (shorter before longer).
bool canonical_less(const Segment& x, const Segment& y);

struct SegmentInvariants {
  int length = 0;
  int n = 0;
  int d = 0;
  friend bool operator==(const SegmentInvariants&, const SegmentInvariants&) = default;
};

// (l, n, n*l); (0,0,0) for the empty segment.
SegmentInvariants segment_invariants(const Segment& s);

struct SupportPoint {
  std::string line;
  int twist = 0;
  friend bool operator==(const SupportPoint&, const SupportPoint&) = default;
  friend auto operator<=>(const SupportPoint&, const SupportPoint&) = default;
};

// Multiset of cuspidals, point -> multiplicity.
using Support = std::map<SupportPoint, int>;

Support support(const Segment& s);

// Equal length and isomorphic starting cuspidal.
bool equivalent(const Segment& x, const Segment& y);

// Equal length on the same line, any twist.
bool inertially_equivalent(const Segment& x, const Segment& y);

// Relations between `x` and `y`. `precedes` reads "x precedes y".
struct Relation {
  bool same_line = false;
  bool precedes = false;
  bool preceded_by = false;
  bool linked = false;
  bool juxtaposed = false;
  bool contains = false;
  bool contained_in = false;
  bool disjoint = false;
  friend bool operator==(const Relation&, const Relation&) = default;
};

// Throws DomainError("linking undefined with wraparound") for finite-period
// segments.
Relation relate(const Segment& x, const Segment& y);

inline bool linked(const Segment& x, const Segment& y) { return relate(x, y).linked; }

// (x u y, x n y) for a linked pair; the intersection may be empty.
std::pair<Segment, Segment> union_and_intersection(const Segment& x, const Segment& y);

// Drop the top `beta` cuspidals: [a,b] -> [a,b-beta], empty once beta >= l.
Segment truncate_top(const Segment& s, int beta = 1);

// Drop the bottom cuspidal: [a,b] -> [a+1,b], empty for singletons.
Segment truncate_bottom(const Segment& s);

}  // namespace stratakit
