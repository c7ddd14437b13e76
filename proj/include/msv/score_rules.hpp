#pragma once

#include "msv/election.hpp"
#include "msv/enumeration.hpp"
#include "msv/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace msv {

// Position score family gamma^{m,k}(p), p in [1, m], non-increasing in p.
struct PositionScoreFamily {
    std::string name;
    std::function<Rational(int m, int k, int p)> eval;
};

PositionScoreFamily gamma_plu();    // 1{p = 1}
PositionScoreFamily gamma_app();    // 1{p <= k}
PositionScoreFamily gamma_borda();  // m - p

using GammaTable = std::map<std::pair<int, int>, std::vector<Rational>>;

// Explicit per-(m,k) tables; monotonicity is validated on construction.
PositionScoreFamily gamma_table(GammaTable tables, std::string name = "table");
// Table file: { "tables": [ {"m":4, "k":2, "scores":["1", "1", "1", "0"]}, ... ] }
PositionScoreFamily load_gamma_table(const std::string& path);

enum class Norm { L1, LMax };

struct ScoreRule {
    Norm beta = Norm::L1;
    PositionScoreFamily gamma;
};

struct WinnerSet {
    std::vector<Committee> committees;  // lexicographically sorted, no duplicates
    Rational max_score;
};

struct EnumOptions {
    std::uint64_t cap = default_enum_cap();
    bool parallel = true;
};

// Unweighted per-voter committee score f_v(S) for a ballot over m candidates.
Rational voter_committee_score(const ScoreRule& rule, int m, int k,
                               const RankedBallot& b, const Committee& S);

// Weighted sum of f_v(S) over the whole profile.
Rational total_score(const ScoreRule& rule, const Election& e, int k, const Committee& S);

// L1: gamma(m,k,1) > gamma(m,k,m); LMax: gamma(m,k,1) > gamma(m,k,m-k+1).
bool is_rational_rule(const ScoreRule& rule, int m, int k);

// Winner enumeration restricted to a candidate pool (ballots restricted per
// the pool, scored with gamma^{|pool|,k}). pool must be sorted.
WinnerSet stage_winners(const ScoreRule& rule, const Election& e,
                        const Committee& pool, int k, const EnumOptions& opt = {});

// Lexicographically smallest member of stage_winners, computed without
// materializing the full tied set.
Committee stage_winner_lex_min(const ScoreRule& rule, const Election& e,
                               const Committee& pool, int k, const EnumOptions& opt = {});

WinnerSet single_stage_winners(const ScoreRule& rule, const Election& e, int k,
                               const EnumOptions& opt = {});

Committee full_pool(const Election& e);

}  // namespace msv
