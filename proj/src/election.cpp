#include "msv/election.hpp"

#include <map>
#include <set>

namespace msv {

std::int64_t Election::total_weight() const {
    std::int64_t n = 0;
    for (const auto& b : ranked) n += b.weight;
    for (const auto& b : approval) n += b.weight;
    return n;
}

int Election::candidate(const std::string& label) const {
    for (int i = 0; i < m(); ++i)
        if (labels[i] == label) return i;
    throw ParseError("unknown candidate: " + label);
}

void Election::validate() const {
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw ParseError("duplicate candidate label: " + l);
    if (!ranked.empty() && !approval.empty())
        throw ParseError("mixed ranked and approval ballots");
    for (const auto& b : ranked) {
        if (b.weight < 1) throw ParseError("zero weight ballot");
        if (static_cast<int>(b.ranking.size()) != m())
            throw ParseError("non-permutation ranking");
        std::vector<bool> hit(m(), false);
        for (int c : b.ranking) {
            if (c < 0 || c >= m()) throw ParseError("unknown candidate in ranking");
            if (hit[c]) throw ParseError("non-permutation ranking");
            hit[c] = true;
        }
    }
    for (const auto& b : approval) {
        if (b.weight < 1) throw ParseError("zero weight ballot");
        if (b.approved.empty()) throw ParseError("empty approval ballot");
        int prev = -1;
        for (int c : b.approved) {
            if (c < 0 || c >= m()) throw ParseError("unknown candidate in approvals");
            if (c <= prev) throw ParseError("approvals not sorted unique");
            prev = c;
        }
    }
}

void Election::canonicalize() {
    if (!ranked.empty()) {
        std::map<std::vector<int>, std::int64_t> merged;
        for (const auto& b : ranked) merged[b.ranking] += b.weight;
        ranked.clear();
        for (const auto& [r, w] : merged) ranked.push_back({r, w});
    }
    if (!approval.empty()) {
        std::map<std::vector<int>, std::int64_t> merged;
        for (const auto& b : approval) merged[b.approved] += b.weight;
        approval.clear();
        for (const auto& [a, w] : merged) approval.push_back({a, w});
    }
}

void validate_stage_vector(const StageVector& v, int m) {
    if (v.sizes.empty()) throw UsageError("stage vector is empty");
    int prev = m;
    for (int k : v.sizes) {
        if (k < 1) throw UsageError("stage size below 1");
        if (v.relaxed) {
            if (k > prev) throw UsageError("stage sizes must be non-increasing");
        } else {
            if (k >= prev) throw UsageError("stage sizes must decrease strictly from m");
        }
        prev = k;
    }
}

RankedBallot restrict_ballot(const RankedBallot& b, const std::vector<int>& subset) {
    if (subset.empty()) throw UsageError("restriction to empty subset");
    int m = static_cast<int>(b.ranking.size());
    std::vector<bool> keep(m, false);
    for (int c : subset) {
        if (c < 0 || c >= m) throw UsageError("restriction subset contains unknown candidate");
        keep[c] = true;
    }
    RankedBallot out;
    out.weight = b.weight;
    for (int c : b.ranking)
        if (keep[c]) out.ranking.push_back(c);
    return out;
}

std::int64_t first_place_count(const Election& e, int c) {
    if (c < 0 || c >= e.m()) throw UsageError("unknown candidate");
    if (e.ranked.empty()) throw UsageError("first_place_count needs a ranked profile");
    std::int64_t total = 0;
    for (const auto& b : e.ranked)
        if (b.ranking.front() == c) total += b.weight;
    return total;
}

}  // namespace msv
