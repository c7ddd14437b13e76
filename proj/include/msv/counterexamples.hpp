#pragma once

#include "msv/axioms.hpp"

#include <optional>

namespace msv {

// A fully materialized counterexample: the election(s), stage vector(s),
// rule and machine-checkable expected outcome for one catalog case.
struct Scenario {
    std::string id;
    std::string description;
    ParsedRule rule;
    std::vector<Election> elections;
    std::vector<StageVector> vectors;
    nlohmann::json perturbation;  // human-readable description, when present
    nlohmann::json expectation;
    nlohmann::json params;

    // prebuilt perturbed election for candidate-monotonicity scenarios
    std::optional<Election> perturbed;
    int i0 = 0;
    std::vector<long long> ratio;
};

struct TheoremReport {
    std::string id;
    bool pass = false;
    nlohmann::json details;
};

// All scenario ids with one-line descriptions.
std::vector<std::pair<std::string, std::string>> scenario_catalog();

// Builds a scenario with its default rule.
Scenario build_scenario(const std::string& id);
// Builds with a caller-supplied rule; throws UsageError when the rule fails
// the branch precondition (wrong inequality case, non-rational rule, linear
// omega, and so on).
Scenario build_scenario(const std::string& id, const ParsedRule& rule);

// Runs the scenario's rule(s) and the generic axiom checker and compares
// the outcome against the expectation exactly.
TheoremReport verify_scenario(const Scenario& s, const MultiStageOptions& opt = {});

// Smallest positive integer vector (by component sum, then
// lexicographically) satisfying the predicate; searches sums up to
// max_sum.
std::optional<std::vector<long long>> derive_integer_ratio(
    int vars, const std::function<bool(const std::vector<long long>&)>& accept,
    long long min_value = 1, long long max_sum = 10000);

}  // namespace msv
