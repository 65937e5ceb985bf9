#include "stratakit/segments.hpp"

#include <algorithm>
#include <sstream>

#include "stratakit/error.hpp"

namespace stratakit {

int CuspidalLine::reduce(int twist) const noexcept {
  if (!period) return twist;
  const int e = *period;
  return ((twist % e) + e) % e;
}

Segment::Segment(CuspidalLine line, int a, int b) : empty_(false), line_(std::move(line)), a_(a), b_(b) {
  if (b < a) throw DomainError("segment end precedes its start");
  if (line_.dim < 1) throw DomainError("cuspidal dimension must be positive");
  if (line_.period && *line_.period < 1) throw DomainError("cuspidal period must be positive");
  if (line_.finite()) {
    a_ = line_.reduce(a);
    b_ = a_ + (b - a);
  }
}

Segment Segment::shifted(int t) const {
  if (empty_) return {};
  return Segment(line_, a_ + t, b_ + t);
}

std::string Segment::to_string() const {
  if (empty_) return "[]";
  std::ostringstream os;
  os << '[' << a_ << ',' << b_;
  if (line_.id != "rho") os << ';' << line_.id;
  os << ']';
  return os.str();
}

bool canonical_less(const Segment& x, const Segment& y) {
  if (x.is_empty() != y.is_empty()) return y.is_empty();
  if (x.line().id != y.line().id) return x.line().id < y.line().id;
  if (x.end() != y.end()) return x.end() > y.end();
  if (x.start() != y.start()) return x.start() > y.start();
  return x.line() < y.line();
}

SegmentInvariants segment_invariants(const Segment& s) {
  if (s.is_empty()) return {};
  return {s.length(), s.cuspidal_dim(), s.degree()};
}

Support support(const Segment& s) {
  Support out;
  for (int t = s.start(); t <= s.end() && !s.is_empty(); ++t) ++out[{s.line().id, s.line().reduce(t)}];
  return out;
}

bool equivalent(const Segment& x, const Segment& y) {
  if (x.is_empty() || y.is_empty()) return x.is_empty() && y.is_empty();
  return x.line().id == y.line().id && x.length() == y.length() &&
         x.line().reduce(x.start()) == y.line().reduce(y.start());
}

bool inertially_equivalent(const Segment& x, const Segment& y) {
  if (x.is_empty() || y.is_empty()) return x.is_empty() && y.is_empty();
  return x.line().id == y.line().id && x.length() == y.length();
}

Relation relate(const Segment& x, const Segment& y) {
  if (x.line().finite() || y.line().finite()) throw DomainError("linking undefined with wraparound");
  Relation r;
  if (x.is_empty() || y.is_empty() || x.line().id != y.line().id) {
    r.disjoint = true;
    return r;
  }
  r.same_line = true;
  const int a = x.start(), b = x.end();
  const int c = y.start(), d = y.end();
  r.contains = a <= c && d <= b;
  r.contained_in = c <= a && b <= d;
  r.disjoint = b < c || d < a;
  // union is a segment iff the two overlap or abut
  const bool union_is_segment = c <= b + 1 && a <= d + 1;
  r.linked = union_is_segment && !r.contains && !r.contained_in;
  r.precedes = r.linked && a < c;
  r.preceded_by = r.linked && c < a;
  r.juxtaposed = r.linked && r.disjoint;
  return r;
}

std::pair<Segment, Segment> union_and_intersection(const Segment& x, const Segment& y) {
  if (!relate(x, y).linked) throw DomainError("segments not linked");
  const Segment uni(x.line(), std::min(x.start(), y.start()), std::max(x.end(), y.end()));
  const int lo = std::max(x.start(), y.start());
  const int hi = std::min(x.end(), y.end());
  return {uni, lo <= hi ? Segment(x.line(), lo, hi) : Segment::empty()};
}

Segment truncate_top(const Segment& s, int beta) {
  if (beta < 1) throw DomainError("truncation depth must be at least 1");
  if (s.is_empty() || beta >= s.length()) return {};
  return Segment(s.line(), s.start(), s.end() - beta);
}

Segment truncate_bottom(const Segment& s) {
  if (s.is_empty() || s.length() == 1) return {};
  return Segment(s.line(), s.start() + 1, s.end());
}

}  // namespace stratakit
