#pragma once

#include "msv/election.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace msv::test {

// Compact single-character-label profiles: "abcde" labels, ballots like
// {"bcaed", 2} meaning b > c > a > e > d with weight 2.
inline Election ranked_election(const std::string& labels,
                                std::initializer_list<std::pair<std::string, int>> ballots) {
    Election e;
    for (char c : labels) e.labels.push_back(std::string(1, c));
    for (const auto& [text, w] : ballots) {
        RankedBallot b;
        b.weight = w;
        for (char c : text) b.ranking.push_back(e.candidate(std::string(1, c)));
        e.ranked.push_back(std::move(b));
    }
    e.validate();
    e.canonicalize();
    return e;
}

inline Election approval_election(const std::string& labels,
                                  std::initializer_list<std::pair<std::string, int>> ballots) {
    Election e;
    for (char c : labels) e.labels.push_back(std::string(1, c));
    for (const auto& [text, w] : ballots) {
        ApprovalBallot b;
        b.weight = w;
        for (char c : text) b.approved.push_back(e.candidate(std::string(1, c)));
        std::sort(b.approved.begin(), b.approved.end());
        e.approval.push_back(std::move(b));
    }
    e.validate();
    e.canonicalize();
    return e;
}

inline Committee comm(const Election& e, const std::string& labels) {
    Committee out;
    for (char c : labels) out.push_back(e.candidate(std::string(1, c)));
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Committee> comms(const Election& e,
                                    std::initializer_list<std::string> all) {
    std::vector<Committee> out;
    for (const auto& s : all) out.push_back(comm(e, s));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace msv::test
