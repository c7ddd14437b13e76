#pragma once

#include "msv/election.hpp"

#include <string>

namespace msv {

// Election document format:
//   { "candidates": ["a", "b", ...],
//     "ballots": [ {"ranking": ["b", "a", ...], "weight": 3},
//                  {"approvals": ["a"], "weight": 2}, ... ] }
// A file must contain only ranking ballots or only approval ballots.
Election parse_election(const std::string& text);

// Canonical form: ballots sorted and merged; parse(serialize(e)) == e.
std::string serialize_election(const Election& e);

Election load_election(const std::string& path);
void save_election(const Election& e, const std::string& path);

}  // namespace msv
