#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stratakit/multisegments.hpp"
#include "stratakit/partitions.hpp"

namespace stratakit {

// A region of the Bernstein spectrum: cuspidal lines and a total degree n.
struct BlockSpec {
  std::vector<CuspidalLine> lines;
  int n = 0;
  // Cap on the number of candidate inertial classes visited by components().
  std::optional<std::size_t> support_budget;
};

// Elementary symmetric polynomial e_k in the variables of one orbit.
struct SymmetricGenerator {
  int orbit = 0;
  int degree = 0;
  // Each monomial is an increasing list of 1-based variable indices.
  std::vector<std::vector<int>> monomials;

  std::string to_string() const;
  friend bool operator==(const SymmetricGenerator&, const SymmetricGenerator&) = default;
};

// K[X_1^{+-1}, ..., X_r^{+-1}]^W with W a product of symmetric groups, one per
// orbit of equal inertial segments. Invertibility of the variables is carried
// by the `invertible` flag on each orbit's top generator.
struct InvariantRingPresentation {
  int dimension = 0;
  std::vector<std::vector<int>> orbits;
  std::vector<SymmetricGenerator> generators;
  std::vector<bool> invertible;

  friend bool operator==(const InvariantRingPresentation&, const InvariantRingPresentation&) = default;
};

InvariantRingPresentation ring_presentation(const InertialClass& cls);

struct StratumComponent {
  InertialClass cls;
  InvariantRingPresentation ring;
  friend bool operator==(const StratumComponent&, const StratumComponent&) = default;
};

struct StratumReport {
  Partition lambda;
  std::vector<StratumComponent> components;
  friend bool operator==(const StratumReport&, const StratumReport&) = default;
};

enum class StratumPosition { equal, strictly_below, above_or_incomparable };

std::string to_string(StratumPosition p);

// Compares lambda(m) against `lambda` in the dominance order.
StratumPosition in_stratum(const Multisegment& m, const Partition& lambda);

// Conjugate of the partition with one part l(D) repeated n(D) times per
// segment D.
Partition classification_partition(const Multisegment& m);

inline constexpr std::size_t kDefaultComponentBudget = 100000;

// Inertial classes of degree block.n on the block's lines with lambda equal to
// `lambda`, one twist-anchored representative each, sorted by canonical
// string. Throws DomainError for finite-period lines or a weight mismatch and
// BudgetExceeded past the candidate budget.
StratumReport components(const BlockSpec& block, const Partition& lambda,
                         std::size_t budget = kDefaultComponentBudget);

// Twist the i-th representative segment by tokens[i].
Multisegment point_to_multisegment(const InertialClass& cls, std::span<const int> tokens);

struct OrbitPoint {
  InertialClass cls;
  // Every token assignment mapping to the multisegment, sorted.
  std::vector<std::vector<int>> orbit;
};

inline constexpr std::size_t kDefaultOrbitBound = 100000;

OrbitPoint multisegment_to_orbit(const Multisegment& m, std::size_t bound = kDefaultOrbitBound);

// Number of segments, with multiplicity.
int tangent_dim(const Multisegment& m);

// [C(r,0), ..., C(r,r)]. Throws DomainError for r < 0 or r > 62.
std::vector<std::uint64_t> ext_dimensions(int r);
std::vector<std::uint64_t> ext_dimensions(const Multisegment& m);

}  // namespace stratakit
