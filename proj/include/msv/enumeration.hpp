#pragma once

#include "msv/errors.hpp"
#include "msv/rational.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace msv {

// C(n, k); throws CapExceededError if the value does not fit in 64 bits.
std::uint64_t choose(int n, int k);

// Default bound on per-committee enumerations, overridable through the
// MSV_ENUM_CAP environment variable.
std::uint64_t default_enum_cap();

// r-th size-k combination of {0..n-1} in lexicographic order.
std::vector<int> unrank_combination(int n, int k, std::uint64_t r);

// Advances c to the lexicographic successor; returns false after the last.
bool next_combination(std::vector<int>& c, int n);

using CombinationScorer = std::function<Rational(const std::vector<int>&)>;

struct ArgmaxResult {
    // Tied maximizers in lexicographic order, or just the smallest one
    // when all_ties is false.
    std::vector<std::vector<int>> best;
    Rational best_score;
};

// Exhaustive argmax over all C(n,k) combinations. The parallel kernel
// partitions the lexicographic rank space across OpenMP threads and merges
// per-thread results in rank order, so its output is identical to the
// serial reference.
ArgmaxResult argmax_combinations(int n, int k, const CombinationScorer& scorer,
                                 std::uint64_t cap, bool all_ties);

ArgmaxResult argmax_combinations_serial(int n, int k, const CombinationScorer& scorer,
                                        std::uint64_t cap, bool all_ties);

}  // namespace msv
