#pragma once

#include "msv/election.hpp"
#include "msv/io.hpp"
#include "msv/multistage.hpp"

#include <nlohmann/json.hpp>

namespace msv {

inline nlohmann::json committee_to_json(const Election& e, const Committee& S) {
    nlohmann::json out = nlohmann::json::array();
    for (int c : S) out.push_back(e.labels[c]);
    return out;
}

inline nlohmann::json committees_to_json(const Election& e, const std::vector<Committee>& cs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& S : cs) out.push_back(committee_to_json(e, S));
    return out;
}

inline nlohmann::json election_to_json(const Election& e) {
    return nlohmann::json::parse(serialize_election(e));
}

}  // namespace msv
