#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "stratakit/error.hpp"
#include "stratakit/json.hpp"

using namespace stratakit;
using nlohmann::json;

namespace {
const CuspidalLine rho{"rho", 1, std::nullopt};
Segment S(int a, int b, const CuspidalLine& line = rho) { return Segment(line, a, b); }
Multisegment M(std::vector<Segment> s) { return Multisegment(std::move(s)); }
}  // namespace

TEST_CASE("wire formats") {
  CHECK(json(Partition({3, 2})).dump() == "[3,2]");
  CHECK(json(S(0, 2)).dump() == R"({"a":0,"b":2,"dim":1,"line":"rho","period":null})");
  CHECK(json(Segment::empty()).dump() == R"({"empty":true})");
  CHECK(json::parse(R"({"line":"rho","dim":1,"period":null,"a":0,"b":2})").get<Segment>() == S(0, 2));
  CHECK(json::parse(R"({"empty":true})").get<Segment>().is_empty());
  CHECK(json::parse(R"({"line":"t","dim":1,"period":3,"a":4,"b":5})").get<Segment>() ==
        S(1, 2, CuspidalLine{"t", 1, 3}));
  CHECK(json::parse(R"({"segments":[{"a":0,"b":0},{"a":1,"b":1}]})").get<Multisegment>() ==
        M({S(0, 0), S(1, 1)}));
}

TEST_CASE("invalid values are domain errors") {
  CHECK_THROWS_AS(json::parse("[2,3]").get<Partition>(), DomainError);
  CHECK_THROWS_AS(json::parse(R"({"a":3,"b":1})").get<Segment>(), DomainError);
  CHECK_THROWS_AS(json::parse(R"({"a":0,"b":1,"dim":0})").get<Segment>(), DomainError);
  CHECK_THROWS_AS(json::parse(R"({"segs":[]})").get<Multisegment>(), DomainError);
}

TEST_CASE("emitted JSON re-parses to equal values") {
  for (int d = 1; d <= 5; ++d)
    for (const auto& bag : oracle::anchored_bags(d)) {
      std::vector<Segment> segs;
      for (auto [a, b] : bag) segs.push_back(S(a, b));
      const auto m = M(segs);
      CHECK(json::parse(json(m).dump()).get<Multisegment>() == m);
      CHECK(json::parse(json(lambda_of(m)).dump()).get<Partition>() == lambda_of(m));
      const auto cls = inertial_class(m);
      CHECK(json::parse(json(cls).dump()).get<InertialClass>() == cls);
      const auto ring = ring_presentation(cls);
      CHECK(json::parse(json(ring).dump()).get<InvariantRingPresentation>() == ring);
      const auto poset = downset(m);
      const auto back = json::parse(json(poset).dump()).get<Poset>();
      CHECK(back.nodes == poset.nodes);
      CHECK(back.edges == poset.edges);
      const auto orbit = multisegment_to_orbit(m);
      const auto orbit_back = json::parse(json(orbit).dump()).get<OrbitPoint>();
      CHECK(orbit_back.cls == orbit.cls);
      CHECK(orbit_back.orbit == orbit.orbit);
    }

  const BlockSpec block{{rho, CuspidalLine{"sigma", 2, std::nullopt}}, 4, 50};
  CHECK(json::parse(json(block).dump()).get<BlockSpec>().lines == block.lines);
  const auto report = components(block, Partition({2, 2}));
  CHECK(json::parse(json(report).dump()).get<StratumReport>() == report);
}

TEST_CASE("support shorthand") {
  const auto s = support_from_json(json::parse("[0,1,1]"));
  REQUIRE(s.size() == 3);
  CHECK(s[2].twist == 1);
  CHECK(s[0].line == rho);
  const auto full = support_from_json(json::parse(R"([{"line":"s","dim":2,"period":null,"twist":4}])"));
  CHECK(full[0].line.dim == 2);
  CHECK(support_from_json(support_to_json(full))[0].twist == 4);
}
