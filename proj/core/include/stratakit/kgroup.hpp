#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stratakit/multisegments.hpp"
#include "stratakit/partitions.hpp"
#include "stratakit/segments.hpp"

namespace stratakit {

// Z(D_1) x ... x Z(D_k). Factors are kept in canonical order since classes in
// the Grothendieck group do not depend on the order of induction. The empty
// product is the trivial representation of G_0.
class ProductTerm {
 public:
  ProductTerm() = default;
  // Empty segments are dropped (they are the unit).
  explicit ProductTerm(std::vector<Segment> factors);

  std::span<const Segment> factors() const noexcept { return factors_; }
  bool is_unit() const noexcept { return factors_.empty(); }
  int degree() const;

  ProductTerm operator*(const ProductTerm& other) const;

  // "Z[1,1]*Z[0,0]", "1" for the unit.
  std::string to_string() const;

  friend bool operator==(const ProductTerm&, const ProductTerm&) = default;
  friend auto operator<=>(const ProductTerm&, const ProductTerm&) = default;

 private:
  std::vector<Segment> factors_;
};

// Integer combination of product terms. The products Z(D_1) x ... x Z(D_k)
// over all multisegments form a Z-basis of the Grothendieck group, so two
// classes are equal iff their coefficient maps agree.
class VirtualClass {
 public:
  using Coefficient = std::int64_t;

  VirtualClass() = default;
  VirtualClass(const ProductTerm& term, Coefficient coeff = 1);  // NOLINT(google-explicit-constructor)

  static VirtualClass unit() { return VirtualClass(ProductTerm{}); }
  static VirtualClass segment(const Segment& s) { return VirtualClass(ProductTerm({s})); }

  const std::map<ProductTerm, Coefficient>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(const ProductTerm& t) const;

  VirtualClass& operator+=(const VirtualClass& other);
  VirtualClass& operator-=(const VirtualClass& other);
  friend VirtualClass operator+(VirtualClass a, const VirtualClass& b) { return a += b; }
  friend VirtualClass operator-(VirtualClass a, const VirtualClass& b) { return a -= b; }
  friend VirtualClass operator*(const VirtualClass& a, const VirtualClass& b);

  // "Z[0,0]*Z[0,0] + Z[0,1]", "0" when zero. Terms in map order.
  std::string to_string() const;

  friend bool operator==(const VirtualClass&, const VirtualClass&) = default;

 private:
  void add(const ProductTerm& t, Coefficient c);
  std::map<ProductTerm, Coefficient> terms_;
};

// Derivative order (absolute GL size) -> component. Zero components are absent.
using GradedVirtual = std::map<int, VirtualClass>;

std::string to_string(const GradedVirtual& g);

// Leibniz expansion of prod (Z(D_j) + Z(D_j^-)) with Z(D_j^-) placed in degree
// n(D_j).
GradedVirtual total_derivative(const ProductTerm& t);
GradedVirtual total_derivative(const VirtualClass& v);

// Degree-g component of the total derivative.
VirtualClass derivative_component(const VirtualClass& v, int g);

// (lambda(m), m^-) where m^- truncates every segment once from the top.
std::pair<Partition, Multisegment> highest_derivative_of_product(const Multisegment& m);

// Constituents [{D1,D2}, {D2 u D1}] of Z(D1) x Z(D2) for juxtaposed D2
// preceding D1. Throws DomainError("not a juxtaposed preceding pair").
std::vector<Multisegment> resolve_pair(const Segment& d1, const Segment& d2);

// Degree-n(rho) derivative of Z({[c+a], [c, c+a-1]}): {[c+a], [c, c+a-2]}.
// `top` must be the singleton just above `delta` on the same line.
Multisegment lemcomp_derivative(const Segment& top, const Segment& delta);

// Constituents of nu^{c+a+1} rho x Z({[c+a], D}) for D = [c, c+a-1] of
// length a: [{[c+a+1],[c+a],D}, {[c+a,c+a+1],D}].
std::vector<Multisegment> weirdcase_constituents(int alpha, const Segment& delta);

// Thrown by evaluate() when an irreducible symbol matches no rewrite rule.
class Unverifiable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rewrites Z(m) as a combination of segment products using: irreducibility of
// products over pairwise unlinked segments, splitting across cuspidal lines,
// the juxtaposed-pair resolution, and the three-segment constituent rule.
// Throws Unverifiable if none applies.
VirtualClass expand_irreducible(const Multisegment& m);

// Symbolic Grothendieck-group expression.
struct Expr {
  enum class Kind { segment, irreducible, sum, product, derivative };

  Kind kind = Kind::irreducible;
  Segment segment;            // Kind::segment
  Multisegment multisegment;  // Kind::irreducible
  int order = 0;              // Kind::derivative
  std::vector<Expr> children;

  static Expr of_segment(Segment s);
  static Expr irreducible(Multisegment m);
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr derivative(int order, Expr inner);

  // Renders in the expression grammar accepted by parse_expression.
  std::string to_string() const;

  friend bool operator==(const Expr&, const Expr&) = default;
};

// Normal form of an expression; throws Unverifiable.
VirtualClass evaluate(const Expr& e);

struct IdentityVerdict {
  enum class Status { verified, unverifiable, refuted };
  Status status = Status::verified;
  std::string reason;       // unverifiable
  int witness_degree = -1;  // refuted: lowest derivative order where the sides differ

  // "verified", "unverifiable: <reason>", "refuted(<g>)".
  std::string to_string() const;
};

IdentityVerdict check_identity(const Expr& lhs, const Expr& rhs);

}  // namespace stratakit
