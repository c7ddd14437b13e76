#pragma once

#include "msv/score_rules.hpp"

#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace msv {

struct Trajectory {
    std::vector<Committee> sets;  // S0 = C, then one entry per effective stage
};

struct MultiStageResult {
    std::vector<Committee> finals;  // lexicographically sorted, unique
    std::map<Committee, Trajectory> trajectories;
    bool truncated = false;
};

struct MultiStageOptions {
    EnumOptions enumeration;
    std::uint64_t frontier_cap = 100000;
    bool keep_trajectories = true;
};

// Evaluates one stage on a candidate pool; stage_index refers to the
// position in the original (unskipped) stage list.
using StageEvaluator =
    std::function<WinnerSet(const Election&, const Committee& pool, int k, int stage_index)>;

// Breadth-first expansion over Definition-2 trajectories with pool
// deduplication. In relaxed mode, stages whose size equals the current pool
// size are identity stages and are skipped.
MultiStageResult run_multistage_generic(const StageEvaluator& eval, const Election& e,
                                        const StageVector& v,
                                        const MultiStageOptions& opt = {});

struct MultiStageScoreRule {
    std::vector<ScoreRule> stages;  // length t, or length 1 applied to all stages
};

MultiStageResult run_multistage(const MultiStageScoreRule& rules, const Election& e,
                                const StageVector& v, const MultiStageOptions& opt = {});

// One deterministic trajectory: the lexicographically smallest winning
// committee at every stage.
std::pair<Committee, Trajectory> run_deterministic(const MultiStageScoreRule& rules,
                                                   const Election& e, const StageVector& v,
                                                   const MultiStageOptions& opt = {});

// (m-1)-stage eliminate-one presets.
std::pair<MultiStageScoreRule, StageVector> preset_stv(int m);      // plurality stages
std::pair<MultiStageScoreRule, StageVector> preset_baldwin(int m);  // Borda stages

// Stage sizes actually executed for v on m candidates (identity stages
// removed in relaxed mode), paired with original stage indices.
std::vector<std::pair<int, int>> effective_stages(const StageVector& v, int m);

const ScoreRule& stage_rule(const MultiStageScoreRule& rules, int stage_index, size_t t);

}  // namespace msv
