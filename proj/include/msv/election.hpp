#pragma once

#include "msv/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace msv {

// Candidates are dense integer indices 0..m-1; labels live in Election and
// only matter at the I/O boundary.

struct RankedBallot {
    std::vector<int> ranking;  // position l (0-based l-1) holds the l-th favorite
    std::int64_t weight = 1;

    bool operator==(const RankedBallot&) const = default;
};

struct ApprovalBallot {
    std::vector<int> approved;  // sorted, unique, nonempty
    std::int64_t weight = 1;

    bool operator==(const ApprovalBallot&) const = default;
};

struct Election {
    std::vector<std::string> labels;
    std::vector<RankedBallot> ranked;
    std::vector<ApprovalBallot> approval;

    int m() const { return static_cast<int>(labels.size()); }
    bool is_approval() const { return !approval.empty(); }
    std::int64_t total_weight() const;
    int candidate(const std::string& label) const;

    // Checks all structural invariants; throws ParseError on failure.
    void validate() const;
    // Sorts ballots and merges duplicates so that structurally equal
    // elections compare and serialize identically.
    void canonicalize();

    bool operator==(const Election&) const = default;
};

// A committee is a sorted vector of candidate indices.
using Committee = std::vector<int>;

struct StageVector {
    std::vector<int> sizes;
    bool relaxed = false;  // permits k1 = m and adjacent-equal (no-op) stages

    bool operator==(const StageVector&) const = default;
};

// Throws UsageError unless v is valid for m candidates in its mode.
void validate_stage_vector(const StageVector& v, int m);

// Keeps only the candidates in subset, preserving their relative order.
RankedBallot restrict_ballot(const RankedBallot& b, const std::vector<int>& subset);

// Left-rotation rho_i: out_j = s_{j+i} for j <= |s|-i, wrapping around.
template <typename T>
std::vector<T> cycle(const std::vector<T>& s, int i) {
    int n = static_cast<int>(s.size());
    if (i < 1 || i > n) throw UsageError("cycle: shift out of range");
    std::vector<T> out;
    out.reserve(n);
    for (int j = 0; j < n; ++j) out.push_back(s[(j + i) % n]);
    return out;
}

template <typename T>
std::vector<std::vector<T>> all_permutations(const std::vector<T>& s, int cap = 8) {
    if (static_cast<int>(s.size()) > cap)
        throw CapExceededError("all_permutations: sequence longer than cap");
    std::vector<T> cur = s;
    std::sort(cur.begin(), cur.end());
    std::vector<std::vector<T>> out;
    do {
        out.push_back(cur);
    } while (std::next_permutation(cur.begin(), cur.end()));
    return out;
}

// Total weight of ballots ranking c first.
std::int64_t first_place_count(const Election& e, int c);

}  // namespace msv
