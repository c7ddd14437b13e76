#include "msv/score_rules.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>

namespace msv {

PositionScoreFamily gamma_plu() {
    return {"plu", [](int, int, int p) { return Rational(p == 1 ? 1 : 0); }};
}

PositionScoreFamily gamma_app() {
    return {"app", [](int, int k, int p) { return Rational(p <= k ? 1 : 0); }};
}

PositionScoreFamily gamma_borda() {
    return {"borda", [](int m, int, int p) { return Rational(m - p); }};
}

PositionScoreFamily gamma_table(GammaTable tables, std::string name) {
    for (const auto& [mk, scores] : tables) {
        if (static_cast<int>(scores.size()) != mk.first)
            throw UsageError("gamma table for m=" + std::to_string(mk.first) +
                             " must list m scores");
        for (size_t p = 1; p < scores.size(); ++p)
            if (scores[p] > scores[p - 1])
                throw UsageError("gamma table must be non-increasing in position");
    }
    auto shared = std::make_shared<GammaTable>(std::move(tables));
    return {std::move(name), [shared](int m, int k, int p) {
                auto it = shared->find({m, k});
                if (it == shared->end())
                    throw UsageError("gamma table has no entry for (m=" + std::to_string(m) +
                                     ", k=" + std::to_string(k) + ")");
                if (p < 1 || p > m) throw UsageError("position out of range");
                return it->second[p - 1];
            }};
}

PositionScoreFamily load_gamma_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open gamma table file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed JSON: ") + ex.what());
    }
    GammaTable tables;
    for (const auto& entry : doc.at("tables")) {
        int m = entry.at("m").get<int>();
        int k = entry.at("k").get<int>();
        std::vector<Rational> scores;
        for (const auto& s : entry.at("scores")) {
            if (s.is_number_integer())
                scores.push_back(Rational(s.get<std::int64_t>()));
            else
                scores.push_back(parse_rational(s.get<std::string>()));
        }
        tables[{m, k}] = std::move(scores);
    }
    return gamma_table(std::move(tables), "table:" + path);
}

Rational voter_committee_score(const ScoreRule& rule, int m, int k,
                               const RankedBallot& b, const Committee& S) {
    if (static_cast<int>(S.size()) != k) throw UsageError("committee size mismatch");
    if (static_cast<int>(b.ranking.size()) != m)
        throw UsageError("ballot does not cover m candidates");
    std::vector<int> pos(m, 0);
    for (int i = 0; i < m; ++i) pos[b.ranking[i]] = i + 1;
    Rational out;
    bool first = true;
    for (int c : S) {
        if (c < 0 || c >= m || pos[c] == 0) throw UsageError("committee outside ballot pool");
        Rational g = rule.gamma.eval(m, k, pos[c]);
        if (rule.beta == Norm::L1) {
            out += g;
        } else if (first || g > out) {
            out = g;
        }
        first = false;
    }
    return out;
}

Rational total_score(const ScoreRule& rule, const Election& e, int k, const Committee& S) {
    if (e.is_approval()) throw UsageError("score rules need a ranked profile");
    Rational out;
    for (const auto& b : e.ranked)
        out += Rational(b.weight) * voter_committee_score(rule, e.m(), k, b, S);
    return out;
}

bool is_rational_rule(const ScoreRule& rule, int m, int k) {
    if (k < 1 || k >= m) throw UsageError("k out of range");
    int tail = rule.beta == Norm::L1 ? m : m - k + 1;
    return rule.gamma.eval(m, k, 1) > rule.gamma.eval(m, k, tail);
}

Committee full_pool(const Election& e) {
    Committee pool(e.m());
    std::iota(pool.begin(), pool.end(), 0);
    return pool;
}

namespace {

// Restricted ballot positions, merged over ballots whose restrictions
// coincide: for each distinct restricted ranking, pos[i] is the 1-based
// position of pool[i] within the pool.
struct PooledProfile {
    std::vector<std::pair<std::vector<int>, std::int64_t>> ballots;  // (pos per pool idx, weight)
    int mp = 0;                                                      // pool size
};

PooledProfile pool_profile(const Election& e, const Committee& pool) {
    int mp = static_cast<int>(pool.size());
    std::vector<int> pool_index(e.m(), -1);
    for (int i = 0; i < mp; ++i) {
        int c = pool[i];
        if (c < 0 || c >= e.m()) throw UsageError("pool contains unknown candidate");
        pool_index[c] = i;
    }
    std::map<std::vector<int>, std::int64_t> merged;
    for (const auto& b : e.ranked) {
        std::vector<int> pos(mp, 0);
        int next = 1;
        for (int c : b.ranking)
            if (pool_index[c] >= 0) pos[pool_index[c]] = next++;
        merged[pos] += b.weight;
    }
    PooledProfile out;
    out.mp = mp;
    out.ballots.assign(merged.begin(), merged.end());
    return out;
}

// Per-candidate accumulated scores; valid because L1 committee scores are
// weakly separable.
std::vector<Rational> l1_candidate_scores(const ScoreRule& rule, const PooledProfile& prof, int k) {
    std::vector<Rational> gvals(prof.mp + 1);
    for (int p = 1; p <= prof.mp; ++p) gvals[p] = rule.gamma.eval(prof.mp, k, p);
    std::vector<Rational> score(prof.mp);
    for (const auto& [pos, w] : prof.ballots)
        for (int i = 0; i < prof.mp; ++i) score[i] += Rational(w) * gvals[pos[i]];
    return score;
}

struct L1Split {
    std::vector<int> mandatory;  // pool indices always selected
    std::vector<int> tied;       // pool indices tied at the threshold
    int slots = 0;               // how many of tied are needed
    Rational max_score;
};

L1Split l1_split(const std::vector<Rational>& score, int k) {
    int mp = static_cast<int>(score.size());
    std::vector<int> order(mp);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return score[a] > score[b]; });
    const Rational& threshold = score[order[k - 1]];
    L1Split out;
    for (int i : order) {
        if (score[i] > threshold)
            out.mandatory.push_back(i);
        else if (score[i] == threshold)
            out.tied.push_back(i);
    }
    std::sort(out.mandatory.begin(), out.mandatory.end());
    std::sort(out.tied.begin(), out.tied.end());
    out.slots = k - static_cast<int>(out.mandatory.size());
    for (int i : out.mandatory) out.max_score += score[i];
    out.max_score += Rational(out.slots) * threshold;
    return out;
}

Committee to_committee(const std::vector<int>& pool_indices, const Committee& pool) {
    Committee out;
    out.reserve(pool_indices.size());
    for (int i : pool_indices) out.push_back(pool[i]);
    std::sort(out.begin(), out.end());
    return out;
}

CombinationScorer lmax_scorer(const ScoreRule& rule, const PooledProfile& prof, int k,
                              std::vector<Rational>& gvals) {
    gvals.resize(prof.mp + 1);
    for (int p = 1; p <= prof.mp; ++p) gvals[p] = rule.gamma.eval(prof.mp, k, p);
    // gamma is non-increasing, so the best member is the best-placed one
    return [&prof, &gvals](const std::vector<int>& comb) {
        Rational s;
        for (const auto& [pos, w] : prof.ballots) {
            int best = prof.mp + 1;
            for (int i : comb)
                if (pos[i] < best) best = pos[i];
            s += Rational(w) * gvals[best];
        }
        return s;
    };
}

}  // namespace

WinnerSet stage_winners(const ScoreRule& rule, const Election& e,
                        const Committee& pool, int k, const EnumOptions& opt) {
    int mp = static_cast<int>(pool.size());
    if (k < 1 || k > mp) throw UsageError("k out of range for pool");
    PooledProfile prof = pool_profile(e, pool);
    WinnerSet out;
    if (rule.beta == Norm::L1) {
        L1Split split = l1_split(l1_candidate_scores(rule, prof, k), k);
        if (choose(static_cast<int>(split.tied.size()), split.slots) > opt.cap)
            throw CapExceededError("tied winner expansion exceeds the enumeration cap");
        out.max_score = split.max_score;
        std::vector<int> comb(split.slots);
        std::iota(comb.begin(), comb.end(), 0);
        bool more = split.slots > 0;
        do {
            std::vector<int> members = split.mandatory;
            for (int i : comb) members.push_back(split.tied[i]);
            out.committees.push_back(to_committee(members, pool));
        } while (more && next_combination(comb, static_cast<int>(split.tied.size())));
    } else {
        std::vector<Rational> gvals;
        auto scorer = lmax_scorer(rule, prof, k, gvals);
        ArgmaxResult res = opt.parallel
                               ? argmax_combinations(mp, k, scorer, opt.cap, true)
                               : argmax_combinations_serial(mp, k, scorer, opt.cap, true);
        out.max_score = res.best_score;
        for (const auto& comb : res.best) out.committees.push_back(to_committee(comb, pool));
    }
    return out;
}

Committee stage_winner_lex_min(const ScoreRule& rule, const Election& e,
                               const Committee& pool, int k, const EnumOptions& opt) {
    int mp = static_cast<int>(pool.size());
    if (k < 1 || k > mp) throw UsageError("k out of range for pool");
    PooledProfile prof = pool_profile(e, pool);
    if (rule.beta == Norm::L1) {
        L1Split split = l1_split(l1_candidate_scores(rule, prof, k), k);
        std::vector<int> members = split.mandatory;
        members.insert(members.end(), split.tied.begin(), split.tied.begin() + split.slots);
        return to_committee(members, pool);
    }
    std::vector<Rational> gvals;
    auto scorer = lmax_scorer(rule, prof, k, gvals);
    ArgmaxResult res = opt.parallel ? argmax_combinations(mp, k, scorer, opt.cap, false)
                                    : argmax_combinations_serial(mp, k, scorer, opt.cap, false);
    return to_committee(res.best.front(), pool);
}

WinnerSet single_stage_winners(const ScoreRule& rule, const Election& e, int k,
                               const EnumOptions& opt) {
    if (k >= e.m()) throw UsageError("k must be below m");
    return stage_winners(rule, e, full_pool(e), k, opt);
}

}  // namespace msv
