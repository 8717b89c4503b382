#pragma once

#include <map>

#include <json.hpp>

#include "shiftlr/gpairs.hpp"
#include "shiftlr/tableau.hpp"

namespace shiftlr {

// Partitions are arrays of parts; entries are strings such as "3" or "2'".
void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);
void to_json(nlohmann::json& j, const StrictPartition& p);
void from_json(const nlohmann::json& j, StrictPartition& p);
void to_json(nlohmann::json& j, const Entry& e);
void from_json(const nlohmann::json& j, Entry& e);
// {"geometry": "young"|"shifted", "outer": [...], "inner": [...], "rows": [[...], ...]}
void to_json(nlohmann::json& j, const Tableau& t);
void from_json(const nlohmann::json& j, Tableau& t);
void to_json(nlohmann::json& j, const TableauPair& p);
void to_json(nlohmann::json& j, const TableRow& r);
void from_json(const nlohmann::json& j, TableRow& r);
void to_json(nlohmann::json& j, const BijReport& r);

// Object keyed by "3,2,1".
nlohmann::json expansion_json(const std::map<Partition, long long>& expansion);

}  // namespace shiftlr
