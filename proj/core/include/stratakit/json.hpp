#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "stratakit/multisegments.hpp"
#include "stratakit/partitions.hpp"
#include "stratakit/segments.hpp"
#include "stratakit/strata.hpp"

// JSON encodings. Partitions are integer arrays, segments
// {"line","dim","period","a","b"} (or {"empty":true}), multisegments
// {"segments":[...]}. Decoding validates through the regular constructors
// and throws DomainError on semantically invalid values.
namespace stratakit {

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

void to_json(nlohmann::json& j, const CuspidalLine& line);
void from_json(const nlohmann::json& j, CuspidalLine& line);

void to_json(nlohmann::json& j, const Segment& s);
void from_json(const nlohmann::json& j, Segment& s);

void to_json(nlohmann::json& j, const Multisegment& m);
void from_json(const nlohmann::json& j, Multisegment& m);

void to_json(nlohmann::json& j, const InertialClass& cls);
void from_json(const nlohmann::json& j, InertialClass& cls);

void to_json(nlohmann::json& j, const SymmetricGenerator& g);
void from_json(const nlohmann::json& j, SymmetricGenerator& g);

void to_json(nlohmann::json& j, const InvariantRingPresentation& ring);
void from_json(const nlohmann::json& j, InvariantRingPresentation& ring);

void to_json(nlohmann::json& j, const StratumReport& report);
void from_json(const nlohmann::json& j, StratumReport& report);

void to_json(nlohmann::json& j, const BlockSpec& block);
void from_json(const nlohmann::json& j, BlockSpec& block);

void to_json(nlohmann::json& j, const Poset& poset);
void from_json(const nlohmann::json& j, Poset& poset);

void to_json(nlohmann::json& j, const OrbitPoint& point);
void from_json(const nlohmann::json& j, OrbitPoint& point);

// Either [t0, t1, ...] on the default line or
// [{"line","dim","period","twist"}, ...].
std::vector<SupportEntry> support_from_json(const nlohmann::json& j);
nlohmann::json support_to_json(const std::vector<SupportEntry>& support);

}  // namespace stratakit
