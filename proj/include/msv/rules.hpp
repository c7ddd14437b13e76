#pragma once

#include "msv/thiele.hpp"

#include <string>

namespace msv {

// Rule descriptors:
//   score-based:  "l1:plu", "l1:app", "l1:borda", "lmax:borda",
//                 "l1:table:<file>", per-stage lists "l1:plu;l1:borda"
//   Thiele:       "thiele:av", "thiele:pav", "thiele:acc", "thiele:convex",
//                 "thiele:table:<file>"
struct ParsedRule {
    bool thiele = false;
    std::vector<ScoreRule> stages;  // when !thiele
    OmegaFunction omega;            // when thiele
    std::string text;
};

ParsedRule parse_rule_descriptor(const std::string& descriptor);

// Uniform evaluator used by the axiom checkers: maps an election plus a
// stage vector to the full multi-stage result.
struct RuleRunner {
    std::string descriptor;
    bool approval = false;  // expects approval ballots
    std::function<MultiStageResult(const Election&, const StageVector&)> run;
};

RuleRunner make_rule_runner(const ParsedRule& rule, const MultiStageOptions& opt = {});
RuleRunner make_rule_runner(const std::string& descriptor, const MultiStageOptions& opt = {});

StageVector parse_stage_vector(const std::string& text, bool relaxed = false);

}  // namespace msv
