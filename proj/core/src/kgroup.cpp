#include "stratakit/kgroup.hpp"

#include <algorithm>
#include <sstream>

#include "stratakit/error.hpp"

namespace stratakit {

ProductTerm::ProductTerm(std::vector<Segment> factors) : factors_(std::move(factors)) {
  std::erase_if(factors_, [](const Segment& s) { return s.is_empty(); });
  std::sort(factors_.begin(), factors_.end(), canonical_less);
}

int ProductTerm::degree() const {
  int d = 0;
  for (const auto& s : factors_) d += s.degree();
  return d;
}

ProductTerm ProductTerm::operator*(const ProductTerm& other) const {
  std::vector<Segment> all(factors_);
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  return ProductTerm(std::move(all));
}

std::string ProductTerm::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += '*';
    out += 'Z' + factors_[i].to_string();
  }
  return out;
}

VirtualClass::VirtualClass(const ProductTerm& term, Coefficient coeff) { add(term, coeff); }

void VirtualClass::add(const ProductTerm& t, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted && (it->second += c) == 0) terms_.erase(it);
}

VirtualClass::Coefficient VirtualClass::coefficient(const ProductTerm& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? 0 : it->second;
}

VirtualClass& VirtualClass::operator+=(const VirtualClass& other) {
  for (const auto& [t, c] : other.terms_) add(t, c);
  return *this;
}

VirtualClass& VirtualClass::operator-=(const VirtualClass& other) {
  for (const auto& [t, c] : other.terms_) add(t, -c);
  return *this;
}

VirtualClass operator*(const VirtualClass& a, const VirtualClass& b) {
  VirtualClass out;
  for (const auto& [ta, ca] : a.terms_)
    for (const auto& [tb, cb] : b.terms_) out.add(ta * tb, ca * cb);
  return out;
}

std::string VirtualClass::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    const auto mag = c < 0 ? -c : c;
    if (mag != 1) os << mag << '*';
    os << t.to_string();
    first = false;
  }
  return os.str();
}

std::string to_string(const GradedVirtual& g) {
  std::ostringstream os;
  for (const auto& [deg, v] : g) os << deg << ": " << v.to_string() << '\n';
  return os.str();
}

namespace {

void add_to(GradedVirtual& g, int deg, const VirtualClass& v) {
  auto& slot = g[deg];
  slot += v;
  if (slot.is_zero()) g.erase(deg);
}

}  // namespace

GradedVirtual total_derivative(const ProductTerm& t) {
  GradedVirtual acc{{0, VirtualClass::unit()}};
  for (const auto& s : t.factors()) {
    GradedVirtual next;
    const auto keep = VirtualClass::segment(s);
    const auto cut = VirtualClass(ProductTerm({truncate_top(s)}));
    for (const auto& [deg, v] : acc) {
      add_to(next, deg, v * keep);
      add_to(next, deg + s.cuspidal_dim(), v * cut);
    }
    acc = std::move(next);
  }
  return acc;
}

GradedVirtual total_derivative(const VirtualClass& v) {
  GradedVirtual out;
  for (const auto& [t, c] : v.terms())
    for (const auto& [deg, comp] : total_derivative(t)) add_to(out, deg, comp * VirtualClass(ProductTerm{}, c));
  return out;
}

VirtualClass derivative_component(const VirtualClass& v, int g) {
  auto graded = total_derivative(v);
  auto it = graded.find(g);
  return it == graded.end() ? VirtualClass{} : it->second;
}

std::pair<Partition, Multisegment> highest_derivative_of_product(const Multisegment& m) {
  std::vector<Segment> truncated;
  for (const auto& s : m.segments())
    if (auto t = truncate_top(s); !t.is_empty()) truncated.push_back(t);
  return {lambda_of(m), Multisegment(std::move(truncated))};
}

std::vector<Multisegment> resolve_pair(const Segment& d1, const Segment& d2) {
  if (d1.is_empty() || d2.is_empty() || d1.line().finite() || d2.line().finite())
    throw DomainError("not a juxtaposed preceding pair");
  const auto rel = relate(d2, d1);
  if (!rel.precedes || !rel.juxtaposed) throw DomainError("not a juxtaposed preceding pair");
  return {Multisegment({d1, d2}), Multisegment({union_and_intersection(d1, d2).first})};
}

namespace {

bool is_singleton_above(const Segment& top, const Segment& delta) {
  return !top.is_empty() && !delta.is_empty() && top.line() == delta.line() && !top.line().finite() &&
         top.length() == 1 && top.start() == delta.end() + 1;
}

}  // namespace

Multisegment lemcomp_derivative(const Segment& top, const Segment& delta) {
  if (!is_singleton_above(top, delta))
    throw DomainError("expected a singleton immediately above the segment on the same line");
  std::vector<Segment> out{top};
  if (auto cut = truncate_top(delta); !cut.is_empty()) out.push_back(cut);
  return Multisegment(std::move(out));
}

std::vector<Multisegment> weirdcase_constituents(int alpha, const Segment& delta) {
  if (delta.is_empty() || delta.line().finite() || alpha < 1 || delta.length() != alpha)
    throw DomainError("expected a segment of length alpha on a characteristic-zero line");
  const auto& line = delta.line();
  const int mid = delta.end() + 1;
  const Segment lower(line, mid, mid);
  const Segment upper(line, mid + 1, mid + 1);
  const Segment joined(line, mid, mid + 1);
  return {Multisegment({upper, lower, delta}), Multisegment({joined, delta})};
}

namespace {

VirtualClass product_of(std::span<const Segment> segs) {
  return VirtualClass(ProductTerm(std::vector<Segment>(segs.begin(), segs.end())));
}

bool pairwise_unlinked(std::span<const Segment> segs) {
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j)
      if (linked(segs[i], segs[j])) return false;
  return true;
}

}  // namespace

VirtualClass expand_irreducible(const Multisegment& m) {
  const auto segs = m.segments();
  if (segs.empty()) return VirtualClass::unit();
  for (const auto& s : segs)
    if (s.line().finite()) throw Unverifiable("no rewrite rules with wraparound for Z" + m.to_string());

  // Supports on distinct lines never interact.
  if (segs.front().line().id != segs.back().line().id) {
    VirtualClass out = VirtualClass::unit();
    std::size_t i = 0;
    while (i < segs.size()) {
      std::size_t j = i;
      while (j < segs.size() && segs[j].line().id == segs[i].line().id) ++j;
      out = out * expand_irreducible(Multisegment(std::vector<Segment>(segs.begin() + static_cast<long>(i),
                                                                       segs.begin() + static_cast<long>(j))));
      i = j;
    }
    return out;
  }

  if (pairwise_unlinked(segs)) return product_of(segs);

  if (segs.size() == 2 && relate(segs[0], segs[1]).juxtaposed) {
    // Z(D1) x Z(D2) = Z(D1,D2) + Z(D1 u D2)
    return product_of(segs) - VirtualClass::segment(union_and_intersection(segs[0], segs[1]).first);
  }

  if (segs.size() == 3) {
    // canonical order: [c+a+1], [c+a], [c, c+a-1]
    const auto& upper = segs[0];
    const auto& lower = segs[1];
    const auto& delta = segs[2];
    if (upper.length() == 1 && lower.length() == 1 && upper.start() == lower.start() + 1 &&
        lower.start() == delta.end() + 1) {
      const auto constituents = weirdcase_constituents(delta.length(), delta);
      return VirtualClass::segment(upper) * expand_irreducible(Multisegment({lower, delta})) -
             expand_irreducible(constituents[1]);
    }
  }

  throw Unverifiable("no rewrite rule decomposes Z" + m.to_string());
}

Expr Expr::of_segment(Segment s) {
  Expr e;
  e.kind = Kind::segment;
  e.segment = std::move(s);
  return e;
}

Expr Expr::irreducible(Multisegment m) {
  Expr e;
  e.kind = Kind::irreducible;
  e.multisegment = std::move(m);
  return e;
}

Expr Expr::sum(std::vector<Expr> terms) {
  Expr e;
  e.kind = Kind::sum;
  e.children = std::move(terms);
  return e;
}

Expr Expr::product(std::vector<Expr> factors) {
  Expr e;
  e.kind = Kind::product;
  e.children = std::move(factors);
  return e;
}

Expr Expr::derivative(int order, Expr inner) {
  Expr e;
  e.kind = Kind::derivative;
  e.order = order;
  e.children.push_back(std::move(inner));
  return e;
}

std::string Expr::to_string() const {
  switch (kind) {
    case Kind::segment:
      return 'Z' + segment.to_string();
    case Kind::irreducible:
      return 'Z' + multisegment.to_string();
    case Kind::derivative:
      return "D^" + std::to_string(order) + "(" + children.front().to_string() + ")";
    case Kind::sum: {
      std::string out;
      for (std::size_t i = 0; i < children.size(); ++i) out += (i ? " + " : "") + children[i].to_string();
      return out;
    }
    case Kind::product: {
      std::string out;
      for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += '*';
        const bool wrap = children[i].kind == Kind::sum;
        out += wrap ? "(" + children[i].to_string() + ")" : children[i].to_string();
      }
      return out;
    }
  }
  return {};
}

VirtualClass evaluate(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::segment:
      return VirtualClass::segment(e.segment);
    case Expr::Kind::irreducible:
      return expand_irreducible(e.multisegment);
    case Expr::Kind::derivative:
      if (e.order < 0) throw DomainError("derivative order must be nonnegative");
      return derivative_component(evaluate(e.children.front()), e.order);
    case Expr::Kind::sum: {
      VirtualClass out;
      for (const auto& c : e.children) out += evaluate(c);
      return out;
    }
    case Expr::Kind::product: {
      VirtualClass out = VirtualClass::unit();
      for (const auto& c : e.children) out = out * evaluate(c);
      return out;
    }
  }
  return {};
}

std::string IdentityVerdict::to_string() const {
  switch (status) {
    case Status::verified:
      return "verified";
    case Status::unverifiable:
      return "unverifiable: " + reason;
    case Status::refuted:
      return "refuted(" + std::to_string(witness_degree) + ")";
  }
  return {};
}

IdentityVerdict check_identity(const Expr& lhs, const Expr& rhs) {
  VirtualClass left;
  VirtualClass right;
  try {
    left = evaluate(lhs);
    right = evaluate(rhs);
  } catch (const Unverifiable& ex) {
    return {IdentityVerdict::Status::unverifiable, ex.what(), -1};
  }
  if (left == right) return {};
  const auto dl = total_derivative(left);
  const auto dr = total_derivative(right);
  int witness = -1;
  for (const auto* side : {&dl, &dr})
    for (const auto& [deg, _] : *side) {
      auto a = dl.find(deg);
      auto b = dr.find(deg);
      const bool same = a != dl.end() && b != dr.end() && a->second == b->second;
      if (!same && (witness < 0 || deg < witness)) witness = deg;
    }
  return {IdentityVerdict::Status::refuted, {}, witness};
}

}  // namespace stratakit
