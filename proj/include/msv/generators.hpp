#pragma once

#include "msv/election.hpp"

#include <cstdint>
#include <random>

namespace msv {

// Uniform random permutation ballots, unit weight each.
Election gen_ranked_uniform(int m, int n, std::uint64_t seed);

// Each candidate approved independently with probability p; empty draws are
// patched with one uniformly chosen candidate (ballots must be nonempty).
Election gen_approval_uniform(int m, int n, double p, std::uint64_t seed);

// Strict stage vector with 1 <= t <= max_t random stages.
StageVector random_stage_vector(int m, int max_t, std::mt19937_64& rng);

std::vector<std::string> default_labels(int m);

}  // namespace msv
