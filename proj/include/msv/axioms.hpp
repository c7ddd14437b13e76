#pragma once

#include "msv/rules.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

namespace msv {

struct AxiomVerdict {
    std::string axiom;
    bool holds = true;
    nlohmann::json witness;  // present when holds is false, re-checkable
    nlohmann::json notes;
};

struct AxiomOptions {
    bool ceiling_threshold = false;  // compare against ceil(n/k) instead of n/k
    MultiStageOptions multistage;
};

// Every candidate ranked first by at least n/k_t voters must belong to
// every final committee.
AxiomVerdict check_solid_coalition(const RuleRunner& r, const Election& e,
                                   const StageVector& v, const AxiomOptions& opt = {});

// Last sizes of v1 and v2 must differ by exactly one. Checks both
// directions: supersets in the larger result, subsets in the smaller.
AxiomVerdict check_committee_monotonicity(const RuleRunner& r, const Election& e,
                                          const StageVector& v1, const StageVector& v2,
                                          const AxiomOptions& opt = {});

// For every winner c and every unit-weight perturbation in c's favor
// (one-position forward shift on ranked ballots, added approval on approval
// ballots), c must stay in some final committee.
AxiomVerdict check_candidate_monotonicity(const RuleRunner& r, const Election& e,
                                          const StageVector& v, const AxiomOptions& opt = {});

// If the two electorates share winning committees, the union must elect
// exactly the shared set.
AxiomVerdict check_consistency(const RuleRunner& r, const Election& e1, const Election& e2,
                               const StageVector& v, const AxiomOptions& opt = {});

// Per-candidate reduction: violated iff voters of weight >= n/k share an
// unelected candidate and none of them is represented in S.
AxiomVerdict check_justified_representation(const Election& e, const Committee& S, int k,
                                            const AxiomOptions& opt = {});

// Violated iff some size-k committee weakly improves every voter's
// intersection count and strictly improves one.
AxiomVerdict check_pareto_efficiency(const Election& e, const Committee& S, int k,
                                     const AxiomOptions& opt = {});

struct GenConfig {
    int max_m = 5;
    int max_n = 8;
    int max_t = 3;
    double approval_p = 0.5;
};

struct SearchOutcome {
    std::optional<nlohmann::json> witness;  // includes the trial index and instance
    int trials_run = 0;
};

// Draws random instances and returns the first one on which the axiom
// check reports a violation. Deterministic: trial i uses seed + i.
SearchOutcome search_violation(const std::string& axiom, const std::string& rule_descriptor,
                               const GenConfig& gen, std::uint64_t seed, int budget,
                               const AxiomOptions& opt = {});

}  // namespace msv
