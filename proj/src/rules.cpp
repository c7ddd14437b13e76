#include "msv/rules.hpp"

#include <sstream>

namespace msv {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

ScoreRule parse_score_stage(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw UsageError("bad rule descriptor: " + text);
    std::string beta = text.substr(0, colon);
    std::string gamma = text.substr(colon + 1);
    ScoreRule rule;
    if (beta == "l1")
        rule.beta = Norm::L1;
    else if (beta == "lmax")
        rule.beta = Norm::LMax;
    else
        throw UsageError("unknown norm in rule descriptor: " + beta);
    if (gamma == "plu")
        rule.gamma = gamma_plu();
    else if (gamma == "app")
        rule.gamma = gamma_app();
    else if (gamma == "borda")
        rule.gamma = gamma_borda();
    else if (gamma.rfind("table:", 0) == 0)
        rule.gamma = load_gamma_table(gamma.substr(6));
    else
        throw UsageError("unknown position score family: " + gamma);
    return rule;
}

}  // namespace

ParsedRule parse_rule_descriptor(const std::string& descriptor) {
    ParsedRule out;
    out.text = descriptor;
    if (descriptor.rfind("thiele:", 0) == 0) {
        std::string omega = descriptor.substr(7);
        out.thiele = true;
        if (omega == "av")
            out.omega = omega_av();
        else if (omega == "pav")
            out.omega = omega_pav();
        else if (omega == "acc")
            out.omega = omega_acc();
        else if (omega == "convex")
            out.omega = omega_convex();
        else if (omega.rfind("table:", 0) == 0)
            out.omega = load_omega_table(omega.substr(6));
        else
            throw UsageError("unknown omega: " + omega);
        return out;
    }
    for (const auto& stage : split(descriptor, ';')) out.stages.push_back(parse_score_stage(stage));
    if (out.stages.empty()) throw UsageError("empty rule descriptor");
    return out;
}

RuleRunner make_rule_runner(const ParsedRule& rule, const MultiStageOptions& opt) {
    RuleRunner runner;
    runner.descriptor = rule.text;
    runner.approval = rule.thiele;
    if (rule.thiele) {
        OmegaFunction omega = rule.omega;
        runner.run = [omega, opt](const Election& e, const StageVector& v) {
            return run_multistage_thiele(omega, e, v, opt);
        };
    } else {
        MultiStageScoreRule stages{rule.stages};
        runner.run = [stages, opt](const Election& e, const StageVector& v) {
            return run_multistage(stages, e, v, opt);
        };
    }
    return runner;
}

RuleRunner make_rule_runner(const std::string& descriptor, const MultiStageOptions& opt) {
    return make_rule_runner(parse_rule_descriptor(descriptor), opt);
}

StageVector parse_stage_vector(const std::string& text, bool relaxed) {
    StageVector v;
    v.relaxed = relaxed;
    for (const auto& part : split(text, ',')) {
        try {
            size_t used = 0;
            int k = std::stoi(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            v.sizes.push_back(k);
        } catch (const std::exception&) {
            throw UsageError("bad stage vector component: " + part);
        }
    }
    if (v.sizes.empty()) throw UsageError("empty stage vector");
    return v;
}

}  // namespace msv
