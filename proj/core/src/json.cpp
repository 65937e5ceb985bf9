#include "stratakit/json.hpp"

#include "stratakit/error.hpp"

namespace stratakit {

using nlohmann::json;

void to_json(json& j, const Partition& p) { j = std::vector<int>(p.parts().begin(), p.parts().end()); }

void from_json(const json& j, Partition& p) {
  if (!j.is_array()) throw DomainError("partition must be a JSON array");
  p = Partition(j.get<std::vector<int>>());
}

void to_json(json& j, const CuspidalLine& line) {
  j = json{{"line", line.id}, {"dim", line.dim}, {"period", nullptr}};
  if (line.period) j["period"] = *line.period;
}

void from_json(const json& j, CuspidalLine& line) {
  if (!j.is_object()) throw DomainError("cuspidal line must be a JSON object");
  line.id = j.value("line", std::string("rho"));
  line.dim = j.value("dim", 1);
  line.period.reset();
  if (auto it = j.find("period"); it != j.end() && !it->is_null()) line.period = it->get<int>();
  if (line.dim < 1) throw DomainError("cuspidal dimension must be positive");
  if (line.period && *line.period < 1) throw DomainError("cuspidal period must be positive");
}

void to_json(json& j, const Segment& s) {
  if (s.is_empty()) {
    j = json{{"empty", true}};
    return;
  }
  to_json(j, s.line());
  j["a"] = s.start();
  j["b"] = s.end();
}

void from_json(const json& j, Segment& s) {
  if (!j.is_object()) throw DomainError("segment must be a JSON object");
  if (j.value("empty", false)) {
    s = Segment::empty();
    return;
  }
  CuspidalLine line;
  from_json(j, line);
  s = Segment(std::move(line), j.at("a").get<int>(), j.at("b").get<int>());
}

void to_json(json& j, const Multisegment& m) {
  j = json{{"segments", json::array()}};
  for (const auto& s : m.segments()) j["segments"].push_back(s);
}

void from_json(const json& j, Multisegment& m) {
  if (!j.is_object() || !j.contains("segments") || !j.at("segments").is_array())
    throw DomainError("multisegment must be an object with a \"segments\" array");
  m = Multisegment(j.at("segments").get<std::vector<Segment>>());
}

void to_json(json& j, const InertialClass& cls) {
  json orbits = json::array();
  for (const auto& [seg, mult] : cls.orbits) orbits.push_back(json{{"segment", seg}, {"multiplicity", mult}});
  j = json{{"representative", cls.representative}, {"orbits", orbits}, {"weyl_order", cls.weyl_order()}};
}

void from_json(const json& j, InertialClass& cls) {
  // a bare multisegment is accepted and normalized
  if (j.contains("segments")) {
    cls = inertial_class(j.get<Multisegment>());
    return;
  }
  cls = inertial_class(j.at("representative").get<Multisegment>());
}

void to_json(json& j, const SymmetricGenerator& g) {
  j = json{{"orbit", g.orbit}, {"degree", g.degree}, {"monomials", g.monomials}, {"text", g.to_string()}};
}

void from_json(const json& j, SymmetricGenerator& g) {
  g.orbit = j.at("orbit").get<int>();
  g.degree = j.at("degree").get<int>();
  g.monomials = j.at("monomials").get<std::vector<std::vector<int>>>();
}

void to_json(json& j, const InvariantRingPresentation& ring) {
  j = json{{"dimension", ring.dimension},
           {"orbits", ring.orbits},
           {"generators", ring.generators},
           {"invertible", ring.invertible}};
}

void from_json(const json& j, InvariantRingPresentation& ring) {
  ring.dimension = j.at("dimension").get<int>();
  ring.orbits = j.at("orbits").get<std::vector<std::vector<int>>>();
  ring.generators = j.at("generators").get<std::vector<SymmetricGenerator>>();
  ring.invertible = j.at("invertible").get<std::vector<bool>>();
}

void to_json(json& j, const StratumReport& report) {
  json comps = json::array();
  for (const auto& c : report.components) comps.push_back(json{{"class", c.cls}, {"ring", c.ring}});
  j = json{{"lambda", report.lambda}, {"components", comps}};
}

void from_json(const json& j, StratumReport& report) {
  report.lambda = j.at("lambda").get<Partition>();
  report.components.clear();
  for (const auto& c : j.at("components"))
    report.components.push_back({c.at("class").get<InertialClass>(), c.at("ring").get<InvariantRingPresentation>()});
}

void to_json(json& j, const BlockSpec& block) {
  j = json{{"lines", block.lines}, {"n", block.n}, {"support_budget", nullptr}};
  if (block.support_budget) j["support_budget"] = *block.support_budget;
}

void from_json(const json& j, BlockSpec& block) {
  if (!j.is_object()) throw DomainError("block must be a JSON object");
  block.lines = j.at("lines").get<std::vector<CuspidalLine>>();
  block.n = j.at("n").get<int>();
  block.support_budget.reset();
  if (auto it = j.find("support_budget"); it != j.end() && !it->is_null())
    block.support_budget = it->get<std::size_t>();
}

void to_json(json& j, const Poset& poset) {
  json nodes = json::array();
  for (const auto& m : poset.nodes)
    nodes.push_back(json{{"multisegment", m}, {"label", m.to_string()}, {"lambda", lambda_of(m)}});
  json edges = json::array();
  for (const auto& [from, to] : poset.edges) edges.push_back(json::array({from, to}));
  j = json{{"nodes", nodes}, {"edges", edges}};
}

void from_json(const json& j, Poset& poset) {
  poset.nodes.clear();
  poset.edges.clear();
  for (const auto& n : j.at("nodes")) poset.nodes.push_back(n.at("multisegment").get<Multisegment>());
  for (const auto& e : j.at("edges")) poset.edges.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
}

void to_json(json& j, const OrbitPoint& point) { j = json{{"class", point.cls}, {"orbit", point.orbit}}; }

void from_json(const json& j, OrbitPoint& point) {
  point.cls = j.at("class").get<InertialClass>();
  point.orbit = j.at("orbit").get<std::vector<std::vector<int>>>();
}

std::vector<SupportEntry> support_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("support must be a JSON array");
  std::vector<SupportEntry> out;
  for (const auto& e : j) {
    if (e.is_number_integer()) {
      out.push_back({CuspidalLine{}, e.get<int>()});
    } else {
      SupportEntry entry;
      from_json(e, entry.line);
      entry.twist = e.at("twist").get<int>();
      out.push_back(std::move(entry));
    }
  }
  return out;
}

json support_to_json(const std::vector<SupportEntry>& support) {
  json out = json::array();
  for (const auto& e : support) {
    json item = e.line;
    item["twist"] = e.twist;
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace stratakit
