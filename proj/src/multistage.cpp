#include "msv/multistage.hpp"

#include <numeric>

namespace msv {

std::vector<std::pair<int, int>> effective_stages(const StageVector& v, int m) {
    validate_stage_vector(v, m);
    std::vector<std::pair<int, int>> out;
    int cur = m;
    for (size_t r = 0; r < v.sizes.size(); ++r) {
        int k = v.sizes[r];
        if (v.relaxed && k == cur) continue;  // identity stage
        out.emplace_back(k, static_cast<int>(r));
        cur = k;
    }
    return out;
}

const ScoreRule& stage_rule(const MultiStageScoreRule& rules, int stage_index, size_t t) {
    if (rules.stages.empty()) throw UsageError("rule has no stages");
    if (rules.stages.size() == 1) return rules.stages.front();
    if (rules.stages.size() != t)
        throw UsageError("per-stage rule count does not match the stage vector");
    return rules.stages[stage_index];
}

MultiStageResult run_multistage_generic(const StageEvaluator& eval, const Election& e,
                                        const StageVector& v, const MultiStageOptions& opt) {
    auto stages = effective_stages(v, e.m());
    MultiStageResult result;

    std::map<Committee, Trajectory> frontier;
    Committee all = full_pool(e);
    Trajectory root;
    root.sets.push_back(all);
    frontier.emplace(all, std::move(root));

    for (auto [k, stage_index] : stages) {
        std::map<Committee, Trajectory> next;
        for (const auto& [pool, traj] : frontier) {
            WinnerSet ws = eval(e, pool, k, stage_index);
            for (const auto& S : ws.committees) {
                if (next.count(S)) continue;
                if (next.size() >= opt.frontier_cap) {
                    result.truncated = true;
                    break;
                }
                Trajectory t2 = traj;
                t2.sets.push_back(S);
                next.emplace(S, std::move(t2));
            }
            if (result.truncated) break;
        }
        frontier = std::move(next);
        if (result.truncated) break;
    }

    for (auto& [S, traj] : frontier) {
        result.finals.push_back(S);
        if (opt.keep_trajectories) result.trajectories.emplace(S, std::move(traj));
    }
    return result;
}

MultiStageResult run_multistage(const MultiStageScoreRule& rules, const Election& e,
                                const StageVector& v, const MultiStageOptions& opt) {
    size_t t = v.sizes.size();
    auto eval = [&rules, &opt, t](const Election& el, const Committee& pool, int k,
                                  int stage_index) {
        return stage_winners(stage_rule(rules, stage_index, t), el, pool, k, opt.enumeration);
    };
    return run_multistage_generic(eval, e, v, opt);
}

std::pair<Committee, Trajectory> run_deterministic(const MultiStageScoreRule& rules,
                                                   const Election& e, const StageVector& v,
                                                   const MultiStageOptions& opt) {
    auto stages = effective_stages(v, e.m());
    size_t t = v.sizes.size();
    Committee pool = full_pool(e);
    Trajectory traj;
    traj.sets.push_back(pool);
    for (auto [k, stage_index] : stages) {
        pool = stage_winner_lex_min(stage_rule(rules, stage_index, t), e, pool, k,
                                    opt.enumeration);
        traj.sets.push_back(pool);
    }
    return {pool, traj};
}

namespace {

std::pair<MultiStageScoreRule, StageVector> eliminate_one(int m, PositionScoreFamily gamma) {
    if (m < 2) throw UsageError("eliminate-one preset needs m >= 2");
    MultiStageScoreRule rules;
    rules.stages.push_back({Norm::L1, std::move(gamma)});
    StageVector v;
    for (int k = m - 1; k >= 1; --k) v.sizes.push_back(k);
    return {std::move(rules), std::move(v)};
}

}  // namespace

std::pair<MultiStageScoreRule, StageVector> preset_stv(int m) {
    return eliminate_one(m, gamma_plu());
}

std::pair<MultiStageScoreRule, StageVector> preset_baldwin(int m) {
    return eliminate_one(m, gamma_borda());
}

}  // namespace msv
