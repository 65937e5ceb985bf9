#include "stratakit/strata.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "stratakit/error.hpp"

namespace stratakit {

std::string SymmetricGenerator::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (i) os << " + ";
    for (std::size_t j = 0; j < monomials[i].size(); ++j) os << (j ? "*" : "") << 'X' << monomials[i][j];
  }
  return os.str();
}

namespace {

void subsets(const std::vector<int>& vars, int k, std::size_t from, std::vector<int>& cur,
             std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < vars.size(); ++i) {
    cur.push_back(vars[i]);
    subsets(vars, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

InvariantRingPresentation ring_presentation(const InertialClass& cls) {
  InvariantRingPresentation ring;
  int next_var = 1;
  for (std::size_t o = 0; o < cls.orbits.size(); ++o) {
    const int size = cls.orbits[o].second;
    std::vector<int> vars;
    for (int i = 0; i < size; ++i) vars.push_back(next_var++);
    for (int k = 1; k <= size; ++k) {
      SymmetricGenerator g{static_cast<int>(o), k, {}};
      std::vector<int> cur;
      subsets(vars, k, 0, cur, g.monomials);
      ring.generators.push_back(std::move(g));
    }
    ring.orbits.push_back(std::move(vars));
    ring.invertible.push_back(true);
  }
  ring.dimension = next_var - 1;
  return ring;
}

std::string to_string(StratumPosition p) {
  switch (p) {
    case StratumPosition::equal:
      return "equal";
    case StratumPosition::strictly_below:
      return "strictly_below";
    case StratumPosition::above_or_incomparable:
      return "above_or_incomparable";
  }
  return {};
}

StratumPosition in_stratum(const Multisegment& m, const Partition& lambda) {
  const auto own = lambda_of(m);
  if (own.weight() != lambda.weight()) throw DomainError("incomparable weights");
  if (own == lambda) return StratumPosition::equal;
  return dominance_leq(own, lambda) ? StratumPosition::strictly_below : StratumPosition::above_or_incomparable;
}

Partition classification_partition(const Multisegment& m) {
  std::vector<int> lengths;
  for (const auto& s : m.segments())
    for (int i = 0; i < s.cuspidal_dim(); ++i) lengths.push_back(s.length());
  return conjugate(Partition::from_unsorted(std::move(lengths)));
}

namespace {

struct SegmentType {
  CuspidalLine line;
  int length;
};

struct ComponentSearch {
  const std::vector<SegmentType>& types;
  const Partition& target;
  std::size_t budget;
  std::size_t visited = 0;
  std::vector<Segment> chosen;
  std::vector<Multisegment> hits;

  void run(std::size_t t, int remaining) {
    if (remaining == 0) {
      if (++visited > budget) throw BudgetExceeded("component enumeration exceeds budget " + std::to_string(budget));
      Multisegment rep(chosen);
      if (lambda_of(rep) == target) hits.push_back(std::move(rep));
      return;
    }
    if (t == types.size()) return;
    const auto& type = types[t];
    const int d = type.line.dim * type.length;
    const Segment seg(type.line, 0, type.length - 1);
    int taken = 0;
    for (; taken * d <= remaining; ++taken) {
      run(t + 1, remaining - taken * d);
      chosen.push_back(seg);
    }
    chosen.resize(chosen.size() - static_cast<std::size_t>(taken));
  }
};

}  // namespace

StratumReport components(const BlockSpec& block, const Partition& lambda, std::size_t budget) {
  if (block.n < 1) throw DomainError("block degree must be positive");
  if (lambda.weight() != block.n) throw DomainError("incomparable weights");
  std::map<std::string, CuspidalLine> seen;
  std::vector<SegmentType> types;
  for (const auto& line : block.lines) {
    if (line.finite()) throw DomainError("stratum components undefined with wraparound");
    if (line.dim < 1) throw DomainError("cuspidal dimension must be positive");
    if (!seen.emplace(line.id, line).second) throw DomainError("duplicate cuspidal line '" + line.id + "'");
    for (int len = 1; len * line.dim <= block.n; ++len) types.push_back({line, len});
  }
  ComponentSearch search{types, lambda, block.support_budget.value_or(budget), 0, {}, {}};
  search.run(0, block.n);

  std::sort(search.hits.begin(), search.hits.end(),
            [](const Multisegment& x, const Multisegment& y) { return x.to_string() < y.to_string(); });
  StratumReport report{lambda, {}};
  for (auto& rep : search.hits) {
    auto cls = inertial_class_of_representative(rep);
    auto ring = ring_presentation(cls);
    report.components.push_back({std::move(cls), std::move(ring)});
  }
  return report;
}

Multisegment point_to_multisegment(const InertialClass& cls, std::span<const int> tokens) {
  const auto segs = cls.representative.segments();
  if (tokens.size() != segs.size()) throw DomainError("token assignment must give one token per variable");
  std::vector<Segment> out;
  out.reserve(segs.size());
  for (std::size_t i = 0; i < segs.size(); ++i) out.push_back(segs[i].shifted(tokens[i]));
  return Multisegment(std::move(out));
}

OrbitPoint multisegment_to_orbit(const Multisegment& m, std::size_t bound) {
  for (const auto& s : m.segments())
    if (s.line().finite()) throw DomainError("twist orbits undefined with wraparound");
  OrbitPoint point{inertial_class(m), {}};

  // starts of m's segments, grouped by orbit in representative order
  std::vector<std::vector<int>> starts;
  for (const auto& [rep, _] : point.cls.orbits) {
    std::vector<int> group;
    for (const auto& s : m.segments())
      if (inertially_equivalent(s, rep)) group.push_back(s.start());
    std::sort(group.begin(), group.end());
    starts.push_back(std::move(group));
  }

  std::vector<std::vector<int>> partial{{}};
  for (auto& group : starts) {
    std::vector<std::vector<int>> arrangements;
    do arrangements.push_back(group);
    while (std::next_permutation(group.begin(), group.end()));
    std::vector<std::vector<int>> next;
    for (const auto& p : partial)
      for (const auto& a : arrangements) {
        if (next.size() >= bound) throw BudgetExceeded("twist orbit exceeds bound " + std::to_string(bound));
        auto joined = p;
        joined.insert(joined.end(), a.begin(), a.end());
        next.push_back(std::move(joined));
      }
    partial = std::move(next);
  }
  std::sort(partial.begin(), partial.end());
  point.orbit = std::move(partial);
  return point;
}

int tangent_dim(const Multisegment& m) { return static_cast<int>(m.size()); }

std::vector<std::uint64_t> ext_dimensions(int r) {
  if (r < 0 || r > 62) throw DomainError("exterior algebra rank out of range [0,62]");
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= r; ++i) {
    std::vector<std::uint64_t> next(row.size() + 1, 0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j];
      next[j + 1] += row[j];
    }
    row = std::move(next);
  }
  return row;
}

std::vector<std::uint64_t> ext_dimensions(const Multisegment& m) { return ext_dimensions(tangent_dim(m)); }

}  // namespace stratakit
