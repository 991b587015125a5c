#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "crossmap/counting.hpp"
#include "crossmap/crossing.hpp"
#include "crossmap/oeis.hpp"

namespace crossmap {

// nlohmann ADL hooks.
//
// Witness:  {"kind":"crossing","mode":"enhanced","arcs":[[1,4],[2,5],[4,7]]}
// Identity: {"k":3,"n":5,"lhs":202,"rhs":202,"rhs_direct":202,"holds":true,
//            "terms":[{"i":0,"binomial":1,"E":1,"term":1}, ...]}
void to_json(nlohmann::json& j, const Arc& arc);
void from_json(const nlohmann::json& j, Arc& arc);
void to_json(nlohmann::json& j, const CrossingWitness& w);
void from_json(const nlohmann::json& j, CrossingWitness& w);
void to_json(nlohmann::json& j, const IdentityReport& r);
void from_json(const nlohmann::json& j, IdentityReport& r);
void to_json(nlohmann::json& j, const EigenReport& r);
void to_json(nlohmann::json& j, const SequenceTable& t);
void from_json(const nlohmann::json& j, SequenceTable& t);
void to_json(nlohmann::json& j, const DistributionTable& t);

namespace oeis {
void to_json(nlohmann::json& j, const SequenceDiff& d);
}

/// "family,k,n,value" with a header line; k is empty for Bell rows.
std::string to_csv(const SequenceTable& table);
SequenceTable sequence_table_from_csv(std::string_view csv);

}  // namespace crossmap
