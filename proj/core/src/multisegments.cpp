#include "stratakit/multisegments.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "stratakit/error.hpp"

namespace stratakit {

Multisegment::Multisegment(std::vector<Segment> segments) : segments_(std::move(segments)) {
  std::map<std::string, CuspidalLine> lines;
  for (const auto& s : segments_) {
    if (s.is_empty()) throw DomainError("multisegments cannot contain the empty segment");
    auto [it, inserted] = lines.emplace(s.line().id, s.line());
    if (!inserted && it->second != s.line())
      throw DomainError("inconsistent descriptors for cuspidal line '" + s.line().id + "'");
  }
  std::sort(segments_.begin(), segments_.end(), canonical_less);
}

Multisegment Multisegment::operator+(const Multisegment& other) const {
  std::vector<Segment> all(segments_);
  all.insert(all.end(), other.segments_.begin(), other.segments_.end());
  return Multisegment(std::move(all));
}

std::string Multisegment::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) out += ',';
    out += segments_[i].to_string();
  }
  return out + "}";
}

int degree(const Multisegment& m) {
  int d = 0;
  for (const auto& s : m.segments()) d += s.degree();
  return d;
}

Partition lambda_of(const Multisegment& m) {
  int longest = 0;
  for (const auto& s : m.segments()) longest = std::max(longest, s.length());
  std::vector<int> parts(static_cast<std::size_t>(longest), 0);
  for (const auto& s : m.segments())
    for (int i = 0; i < s.length(); ++i) parts[static_cast<std::size_t>(i)] += s.cuspidal_dim();
  return Partition(std::move(parts));
}

std::vector<Segment> canonical_order(const Multisegment& m) {
  for (const auto& s : m.segments())
    if (s.line().finite()) throw DomainError("canonical order undefined with wraparound");
  return {m.segments().begin(), m.segments().end()};
}

std::vector<Multisegment> elementary_reductions(const Multisegment& m) {
  const auto segs = m.segments();
  std::set<Multisegment> found;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (!linked(segs[i], segs[j])) continue;
      auto [uni, inter] = union_and_intersection(segs[i], segs[j]);
      std::vector<Segment> next;
      next.reserve(segs.size());
      for (std::size_t k = 0; k < segs.size(); ++k)
        if (k != i && k != j) next.push_back(segs[k]);
      next.push_back(uni);
      if (!inter.is_empty()) next.push_back(inter);
      found.insert(Multisegment(std::move(next)));
    }
  }
  std::vector<Multisegment> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(),
            [](const Multisegment& x, const Multisegment& y) { return x.to_string() < y.to_string(); });
  return out;
}

std::string Poset::to_dot() const {
  std::ostringstream os;
  os << "digraph downset {\n";
  for (std::size_t i = 0; i < nodes.size(); ++i)
    os << "  n" << i << " [label=\"" << nodes[i].to_string() << "\\n" << lambda_of(nodes[i]).to_string() << "\"];\n";
  for (const auto& [from, to] : edges) os << "  n" << from << " -> n" << to << ";\n";
  os << "}\n";
  return os.str();
}

Poset downset(const Multisegment& m, std::size_t bound) {
  std::map<Multisegment, std::vector<Multisegment>> adjacency;
  std::vector<Multisegment> frontier{m};
  adjacency[m];
  while (!frontier.empty()) {
    std::vector<Multisegment> next;
    for (const auto& node : frontier) {
      auto reductions = elementary_reductions(node);
      for (const auto& r : reductions) {
        if (adjacency.find(r) != adjacency.end()) continue;
        if (adjacency.size() >= bound)
          throw BudgetExceeded("downset exceeds node bound " + std::to_string(bound));
        adjacency[r];
        next.push_back(r);
      }
      adjacency[node] = std::move(reductions);
    }
    frontier = std::move(next);
  }

  std::vector<std::pair<std::string, Multisegment>> keyed;
  keyed.reserve(adjacency.size());
  for (const auto& [node, _] : adjacency) keyed.emplace_back(node.to_string(), node);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  Poset poset;
  std::map<Multisegment, std::size_t> index;
  for (auto& [_, node] : keyed) {
    index.emplace(node, poset.nodes.size());
    poset.nodes.push_back(std::move(node));
  }
  for (const auto& [node, targets] : adjacency)
    for (const auto& t : targets) poset.edges.emplace_back(index.at(node), index.at(t));
  std::sort(poset.edges.begin(), poset.edges.end());
  return poset;
}

namespace {

struct Interval {
  int a;
  int b;
};

// Chain peeling on a single line of characteristic-zero twists.
std::vector<Interval> mw_dual_line(std::vector<Interval> segs) {
  std::vector<Interval> dual;
  while (!segs.empty()) {
    // start from the shortest segment with the largest end
    std::size_t cur = 0;
    for (std::size_t i = 1; i < segs.size(); ++i)
      if (segs[i].b > segs[cur].b || (segs[i].b == segs[cur].b && segs[i].a > segs[cur].a)) cur = i;
    const int top = segs[cur].b;
    std::vector<std::size_t> chain{cur};
    for (;;) {
      const Interval& last = segs[chain.back()];
      std::size_t best = segs.size();
      for (std::size_t i = 0; i < segs.size(); ++i) {
        if (segs[i].b != last.b - 1 || segs[i].a >= last.a) continue;
        if (best == segs.size() || segs[i].a > segs[best].a) best = i;
      }
      if (best == segs.size()) break;
      chain.push_back(best);
    }
    dual.push_back({top - static_cast<int>(chain.size()) + 1, top});
    for (std::size_t i : chain) --segs[i].b;
    std::erase_if(segs, [](const Interval& s) { return s.b < s.a; });
  }
  return dual;
}

}  // namespace

Multisegment mw_dual(const Multisegment& m) {
  std::map<std::string, std::pair<CuspidalLine, std::vector<Interval>>> by_line;
  for (const auto& s : m.segments()) {
    if (s.line().finite()) throw DomainError("Zelevinsky involution undefined with wraparound");
    auto& entry = by_line[s.line().id];
    entry.first = s.line();
    entry.second.push_back({s.start(), s.end()});
  }
  std::vector<Segment> out;
  for (auto& [_, entry] : by_line)
    for (const auto& iv : mw_dual_line(std::move(entry.second))) out.emplace_back(entry.first, iv.a, iv.b);
  return Multisegment(std::move(out));
}

std::uint64_t InertialClass::weyl_order() const {
  std::uint64_t order = 1;
  for (const auto& [_, mult] : orbits)
    for (int k = 2; k <= mult; ++k) order *= static_cast<std::uint64_t>(k);
  return order;
}

InertialClass inertial_class_of_representative(const Multisegment& representative) {
  InertialClass cls{representative, {}};
  for (const auto& s : representative.segments()) {
    if (!cls.orbits.empty() && cls.orbits.back().first == s)
      ++cls.orbits.back().second;
    else
      cls.orbits.emplace_back(s, 1);
  }
  return cls;
}

InertialClass inertial_class(const Multisegment& m) {
  std::vector<Segment> anchored;
  anchored.reserve(m.size());
  for (const auto& s : m.segments()) anchored.emplace_back(s.line(), 0, s.length() - 1);
  return inertial_class_of_representative(Multisegment(std::move(anchored)));
}

namespace {

// Multisegments on one line with support counts[t - base] at twist t. The
// lowest remaining twist must start a segment; segments sharing a start are
// emitted longest first so each multiset appears once.
void enumerate_line(std::vector<int>& counts, int base, const CuspidalLine& line, int prev_start, int prev_len,
                    std::vector<Segment>& prefix, std::vector<std::vector<Segment>>& out) {
  std::size_t lo = 0;
  while (lo < counts.size() && counts[lo] == 0) ++lo;
  if (lo == counts.size()) {
    out.push_back(prefix);
    return;
  }
  const int start = base + static_cast<int>(lo);
  int max_len = 0;
  while (lo + static_cast<std::size_t>(max_len) < counts.size() && counts[lo + static_cast<std::size_t>(max_len)] > 0)
    ++max_len;
  if (start == prev_start) max_len = std::min(max_len, prev_len);
  for (int len = max_len; len >= 1; --len) {
    for (int k = 0; k < len; ++k) --counts[lo + static_cast<std::size_t>(k)];
    prefix.emplace_back(line, start, start + len - 1);
    enumerate_line(counts, base, line, start, len, prefix, out);
    prefix.pop_back();
    for (int k = 0; k < len; ++k) ++counts[lo + static_cast<std::size_t>(k)];
  }
}

}  // namespace

std::vector<Multisegment> enumerate_with_support(std::span<const SupportEntry> support, std::size_t bound) {
  if (support.size() > bound)
    throw BudgetExceeded("support size " + std::to_string(support.size()) + " exceeds bound " +
                         std::to_string(bound));
  std::map<std::string, std::pair<CuspidalLine, std::vector<int>>> by_line;
  for (const auto& entry : support) {
    if (entry.line.finite()) throw DomainError("support enumeration undefined with wraparound");
    auto [it, inserted] = by_line.try_emplace(entry.line.id, entry.line, std::vector<int>{});
    if (!inserted && it->second.first != entry.line)
      throw DomainError("inconsistent descriptors for cuspidal line '" + entry.line.id + "'");
    it->second.second.push_back(entry.twist);
  }

  std::vector<std::vector<Segment>> partial{{}};
  for (auto& [_, entry] : by_line) {
    auto& twists = entry.second;
    const auto [mn, mx] = std::minmax_element(twists.begin(), twists.end());
    const int base = *mn;
    std::vector<int> counts(static_cast<std::size_t>(*mx - base + 1), 0);
    for (int t : twists) ++counts[static_cast<std::size_t>(t - base)];

    std::vector<std::vector<Segment>> line_results;
    std::vector<Segment> prefix;
    enumerate_line(counts, base, entry.first, base - 1, 0, prefix, line_results);

    std::vector<std::vector<Segment>> combined;
    combined.reserve(partial.size() * line_results.size());
    for (const auto& p : partial)
      for (const auto& l : line_results) {
        auto merged = p;
        merged.insert(merged.end(), l.begin(), l.end());
        combined.push_back(std::move(merged));
      }
    partial = std::move(combined);
  }

  std::vector<Multisegment> out;
  out.reserve(partial.size());
  for (auto& segs : partial) out.emplace_back(std::move(segs));
  return out;
}

Support support(const Multisegment& m) {
  Support out;
  for (const auto& s : m.segments())
    for (const auto& [pt, mult] : support(s)) out[pt] += mult;
  return out;
}

}  // namespace stratakit
