#pragma once

#include <string>

#include "json.hpp"

#include "drsl/klm.hpp"
#include "drsl/semantics.hpp"
#include "drsl/syntax.hpp"

namespace drsl {

// Valuations travel as strings of atom names in declaration order, with a
// leading '-' on false atoms: "p -b f". Every atom must appear exactly once.
std::string valuation_to_json_string(Valuation v, const Vocabulary& vocab);
Valuation valuation_from_string(const std::string& text, const Vocabulary& vocab);

// {"levels": [[...rank 0...], [...rank 1...], ...], "infinite": [...]}
nlohmann::json ri_to_json(const RankedInterpretation& r, const Vocabulary& vocab);
RankedInterpretation ri_from_json(const nlohmann::json& j, const Vocabulary& vocab);

// {"pi": [...], "gamma": {pi name: ranked interpretation}, "sigma": {standpoint:
// [pi names]}}
nlohmann::json structure_to_json(const RankedStandpointStructure& m);
RankedStandpointStructure structure_from_json(const nlohmann::json& j,
                                              const Vocabulary& vocab);

}  // namespace drsl
