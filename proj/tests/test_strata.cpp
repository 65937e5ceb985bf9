#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "stratakit/error.hpp"
#include "stratakit/strata.hpp"

using namespace stratakit;

namespace {
const CuspidalLine rho{"rho", 1, std::nullopt};
const CuspidalLine rho2{"rho", 2, std::nullopt};
const CuspidalLine sigma2{"sigma", 2, std::nullopt};

Segment S(int a, int b, const CuspidalLine& line = rho) { return Segment(line, a, b); }
Multisegment M(std::vector<Segment> s) { return Multisegment(std::move(s)); }
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("stratum membership") {
  CHECK(in_stratum(M({S(0, 0), S(1, 1)}), P({2})) == StratumPosition::equal);
  CHECK(in_stratum(M({S(0, 1)}), P({2})) == StratumPosition::strictly_below);
  CHECK(in_stratum(M({S(0, 0), S(1, 1)}), P({1, 1})) == StratumPosition::above_or_incomparable);
  CHECK_THROWS_AS(in_stratum(M({S(0, 1)}), P({3})), DomainError);
  // accepted with wraparound
  CHECK(in_stratum(M({S(0, 3, CuspidalLine{"t", 1, 2})}), P({1, 1, 1, 1})) == StratumPosition::equal);
}

TEST_CASE("classification partition equals lambda") {
  CHECK(classification_partition(M({S(0, 1)})) == P({1, 1}));
  CHECK(classification_partition(M({S(0, 0), S(1, 1)})) == P({2}));
  CHECK(classification_partition(M({S(0, 2, CuspidalLine{"rho", 3, std::nullopt})})) == P({3, 3, 3}));
  for (int d = 1; d <= 6; ++d)
    for (const auto& bag : oracle::anchored_bags(d)) {
      std::vector<Segment> segs;
      for (auto [a, b] : bag) segs.push_back(S(a, b, (a + b) % 2 ? rho : sigma2));
      const auto m = M(segs);
      CHECK(classification_partition(m) == lambda_of(m));
    }
}

TEST_CASE("ring presentations") {
  const auto pair = ring_presentation(inertial_class(M({S(0, 1), S(3, 4)})));
  CHECK(pair.dimension == 2);
  CHECK(pair.orbits == std::vector<std::vector<int>>{{1, 2}});
  REQUIRE(pair.generators.size() == 2);
  CHECK(pair.generators[0].to_string() == "X1 + X2");
  CHECK(pair.generators[1].to_string() == "X1*X2");

  const auto single = ring_presentation(inertial_class(M({S(0, 2)})));
  CHECK(single.dimension == 1);
  CHECK(single.generators.size() == 1);
  CHECK(single.generators[0].to_string() == "X1");

  const auto mixed = ring_presentation(inertial_class(M({S(0, 1), S(0, 1), S(0, 0)})));
  CHECK(mixed.dimension == 3);
  CHECK(mixed.orbits == std::vector<std::vector<int>>{{1, 2}, {3}});
  REQUIRE(mixed.generators.size() == 3);
  CHECK(mixed.generators[2].to_string() == "X3");
  CHECK(mixed.invertible == std::vector<bool>{true, true});
}

TEST_CASE("elementary symmetric generators have binomially many monomials") {
  for (int k = 1; k <= 6; ++k) {
    std::vector<Segment> segs(static_cast<std::size_t>(k), S(0, 0));
    const auto ring = ring_presentation(inertial_class(M(segs)));
    CHECK(ring.dimension == k);
    for (const auto& g : ring.generators) {
      CHECK(g.monomials.size() == oracle::binomial(k, g.degree));
      for (const auto& mono : g.monomials) CHECK(static_cast<int>(mono.size()) == g.degree);
    }
  }
}

TEST_CASE("components of small blocks") {
  const BlockSpec one_line{{rho}, 2, std::nullopt};
  const auto column = components(one_line, P({1, 1}));
  REQUIRE(column.components.size() == 1);
  CHECK(column.components[0].cls.representative == M({S(0, 1)}));
  CHECK(column.components[0].ring.dimension == 1);

  const auto row = components(one_line, P({2}));
  REQUIRE(row.components.size() == 1);
  CHECK(row.components[0].cls.representative == M({S(0, 0), S(0, 0)}));
  CHECK(row.components[0].ring.dimension == 2);
  CHECK(row.components[0].cls.weyl_order() == 2);

  const BlockSpec three{{rho}, 3, std::nullopt};
  const auto hook = components(three, P({2, 1}));
  REQUIRE(hook.components.size() == 1);
  CHECK(hook.components[0].cls.representative == M({S(0, 1), S(0, 0)}));
  CHECK(hook.components[0].ring.dimension == 2);
  CHECK(hook.components[0].cls.weyl_order() == 1);

  CHECK_THROWS_AS(components(one_line, P({3})), DomainError);
  CHECK_THROWS_AS(components(BlockSpec{{CuspidalLine{"t", 1, 2}}, 2, std::nullopt}, P({2})), DomainError);
  CHECK_THROWS_AS(components(BlockSpec{{rho}, 8, 3}, P({8})), BudgetExceeded);
}

TEST_CASE("components partition all classes across strata") {
  const BlockSpec block{{rho, sigma2}, 6, std::nullopt};
  std::set<std::string> seen;
  std::size_t total = 0;
  for (const auto& lambda : enumerate_partitions(6)) {
    for (const auto& c : components(block, lambda).components) {
      CHECK(c.cls.lambda() == lambda);
      CHECK(c.ring.dimension == tangent_dim(c.cls.representative));
      seen.insert(c.cls.representative.to_string());
      ++total;
    }
  }
  CHECK(seen.size() == total);
  // a class is a partition of the rho-degree times a partition of the
  // sigma-length total j, with 6 - 2j left for rho
  std::size_t brute = 0;
  for (int on_sigma = 0; on_sigma <= 3; ++on_sigma)
    brute += oracle::partition_count(6 - 2 * on_sigma) * oracle::partition_count(on_sigma);
  CHECK(total == brute);

  // generic stratum on one line: symmetric polynomials in all singletons
  const auto generic = components(BlockSpec{{rho}, 5, std::nullopt}, P({5}));
  REQUIRE(generic.components.size() == 1);
  CHECK(generic.components[0].ring.orbits.size() == 1);
  CHECK(generic.components[0].cls.weyl_order() == 120);
}

TEST_CASE("points and multisegments") {
  const auto cls = inertial_class(M({S(0, 0), S(0, 0)}));
  const std::vector<int> identity{0, 0};
  CHECK(point_to_multisegment(cls, identity) == cls.representative);
  const std::vector<int> shift{0, 1};
  CHECK(point_to_multisegment(cls, shift) == M({S(0, 0), S(1, 1)}));
  const std::vector<int> a{2, 5}, b{5, 2};
  CHECK(point_to_multisegment(cls, a) == point_to_multisegment(cls, b));
  const std::vector<int> short_tokens{1};
  CHECK_THROWS_AS(point_to_multisegment(cls, short_tokens), DomainError);

  const auto o1 = multisegment_to_orbit(M({S(0, 0), S(1, 1)}));
  CHECK(o1.cls == cls);
  CHECK(o1.orbit == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

  const auto o2 = multisegment_to_orbit(cls.representative);
  CHECK(o2.orbit == std::vector<std::vector<int>>{{0, 0}});

  const auto o3 = multisegment_to_orbit(M({S(0, 1), S(3, 4)}));
  CHECK(o3.orbit == std::vector<std::vector<int>>{{0, 3}, {3, 0}});
  CHECK(o3.cls.orbits.size() == 1);

  CHECK_THROWS_AS(multisegment_to_orbit(M({S(0, 0, CuspidalLine{"t", 1, 2})})), DomainError);
}

TEST_CASE("tangent and ext dimensions") {
  CHECK(tangent_dim(M({S(0, 1)})) == 1);
  CHECK(tangent_dim(M({S(0, 0), S(1, 1)})) == 2);
  CHECK(tangent_dim(Multisegment()) == 0);
  CHECK(ext_dimensions(3) == std::vector<std::uint64_t>{1, 3, 3, 1});
  CHECK(ext_dimensions(0) == std::vector<std::uint64_t>{1});
  CHECK(ext_dimensions(5) == std::vector<std::uint64_t>{1, 5, 10, 10, 5, 1});
  CHECK(ext_dimensions(M({S(0, 0), S(1, 1)})) == std::vector<std::uint64_t>{1, 2, 1});
  CHECK_THROWS_AS(ext_dimensions(-1), DomainError);
  for (int r = 0; r <= 40; ++r) {
    const auto dims = ext_dimensions(r);
    std::uint64_t sum = 0;
    for (int i = 0; i <= r; ++i) {
      CHECK(dims[static_cast<std::size_t>(i)] == oracle::binomial(r, i));
      sum += dims[static_cast<std::size_t>(i)];
    }
    CHECK(sum == (std::uint64_t{1} << r));
  }
}
