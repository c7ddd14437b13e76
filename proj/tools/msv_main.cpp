#include "msv/axioms.hpp"
#include "msv/counterexamples.hpp"
#include "msv/generators.hpp"
#include "msv/io.hpp"
#include "msv/json_util.hpp"
#include "msv/simulation.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace msv;

namespace {

// Exit codes: 0 success / holds / pass, 1 violated / fail, 2 usage error,
// 3 enumeration or frontier cap exceeded.
constexpr int kOk = 0, kViolated = 1, kUsage = 2, kCap = 3;

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

Committee parse_committee(const Election& e, const std::string& text) {
    Committee out;
    std::istringstream in(text);
    std::string label;
    while (std::getline(in, label, ',')) out.push_back(e.candidate(label));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> parse_k1_spec(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        auto colon = part.find(':');
        if (colon == std::string::npos) {
            out.push_back(std::stoi(part));
        } else {
            int lo = std::stoi(part.substr(0, colon));
            int hi = std::stoi(part.substr(colon + 1));
            if (lo > hi) throw UsageError("empty k1 range: " + part);
            for (int k = lo; k <= hi; ++k) out.push_back(k);
        }
    }
    if (out.empty()) throw UsageError("no k1 values in: " + text);
    return out;
}

struct RunArgs {
    std::string rule, election, vector_text;
    bool relaxed = false, trajectories = false;
};

int cmd_run(const RunArgs& a) {
    Election e = load_election(a.election);
    StageVector v = parse_stage_vector(a.vector_text, a.relaxed);
    MultiStageOptions opt;
    opt.keep_trajectories = a.trajectories;
    RuleRunner runner = make_rule_runner(a.rule, opt);
    MultiStageResult res = runner.run(e, v);

    json doc;
    doc["rule"] = a.rule;
    doc["vector"] = v.sizes;
    doc["finals"] = committees_to_json(e, res.finals);
    doc["truncated"] = res.truncated;
    if (a.trajectories) {
        json trajs = json::array();
        for (const auto& [fin, traj] : res.trajectories) {
            json t = json::array();
            for (const auto& S : traj.sets) t.push_back(committee_to_json(e, S));
            trajs.push_back(t);
        }
        doc["trajectories"] = trajs;
    }
    emit(doc);
    std::cerr << res.finals.size() << " final committee(s)\n";
    return kOk;
}

struct AxiomArgs {
    std::string axiom, rule, election, election2, vector_text, vector2_text, committee_text;
    bool ceiling = false, relaxed = false;
};

int cmd_axiom_check(const AxiomArgs& a) {
    Election e = load_election(a.election);
    AxiomOptions opt;
    opt.ceiling_threshold = a.ceiling;
    RuleRunner runner = make_rule_runner(a.rule, opt.multistage);

    auto need_vector = [&]() {
        if (a.vector_text.empty()) throw UsageError("--vector is required for " + a.axiom);
        return parse_stage_vector(a.vector_text, a.relaxed);
    };

    AxiomVerdict verdict;
    if (a.axiom == "solid-coalition") {
        verdict = check_solid_coalition(runner, e, need_vector(), opt);
    } else if (a.axiom == "committee-monotonicity") {
        StageVector v1 = need_vector();
        StageVector v2;
        if (!a.vector2_text.empty()) {
            v2 = parse_stage_vector(a.vector2_text, a.relaxed);
        } else {
            v2 = v1;
            v2.sizes.back() += 1;  // compare k against k+1 by default
        }
        verdict = check_committee_monotonicity(runner, e, v1, v2, opt);
    } else if (a.axiom == "candidate-monotonicity") {
        verdict = check_candidate_monotonicity(runner, e, need_vector(), opt);
    } else if (a.axiom == "consistency") {
        if (a.election2.empty()) throw UsageError("--election2 is required for consistency");
        Election e2 = load_election(a.election2);
        verdict = check_consistency(runner, e, e2, need_vector(), opt);
    } else if (a.axiom == "jr" || a.axiom == "justified-representation" ||
               a.axiom == "pareto" || a.axiom == "pareto-efficiency") {
        bool jr = a.axiom[0] == 'j';
        StageVector v = need_vector();
        int k = v.sizes.back();
        std::vector<Committee> targets;
        if (!a.committee_text.empty())
            targets.push_back(parse_committee(e, a.committee_text));
        else
            targets = runner.run(e, v).finals;
        verdict.axiom = jr ? "justified-representation" : "pareto-efficiency";
        verdict.notes["committees_checked"] = static_cast<int>(targets.size());
        for (const auto& S : targets) {
            AxiomVerdict one = jr ? check_justified_representation(e, S, k, opt)
                                  : check_pareto_efficiency(e, S, k, opt);
            if (!one.holds) {
                verdict.holds = false;
                verdict.witness = one.witness;
                verdict.witness["committee"] = committee_to_json(e, S);
                break;
            }
        }
    } else {
        throw UsageError("unknown axiom: " + a.axiom);
    }

    json doc;
    doc["axiom"] = verdict.axiom.empty() ? a.axiom : verdict.axiom;
    doc["rule"] = a.rule;
    doc["holds"] = verdict.holds;
    if (!verdict.holds) doc["witness"] = verdict.witness;
    if (!verdict.notes.is_null()) doc["notes"] = verdict.notes;
    emit(doc);
    std::cerr << doc["axiom"].get<std::string>() << ": "
              << (verdict.holds ? "holds" : "violated") << "\n";
    return verdict.holds ? kOk : kViolated;
}

struct SearchArgs {
    std::string axiom, rule;
    std::uint64_t seed = 0;
    int budget = 100;
    GenConfig gen;
    bool ceiling = false;
};

int cmd_axiom_search(const SearchArgs& a) {
    AxiomOptions opt;
    opt.ceiling_threshold = a.ceiling;
    SearchOutcome outcome = search_violation(a.axiom, a.rule, a.gen, a.seed, a.budget, opt);
    json doc;
    doc["axiom"] = a.axiom;
    doc["rule"] = a.rule;
    doc["trials_run"] = outcome.trials_run;
    doc["witness"] = outcome.witness ? *outcome.witness : json(nullptr);
    emit(doc);
    if (outcome.witness) {
        std::cerr << "violation found after " << outcome.trials_run << " trial(s)\n";
        return kViolated;
    }
    std::cerr << "no violation in " << outcome.trials_run << " trial(s)\n";
    return kOk;
}

int cmd_theorem_list() {
    json doc = json::array();
    for (const auto& [id, description] : scenario_catalog())
        doc.push_back({{"id", id}, {"description", description}});
    emit(doc);
    return kOk;
}

int cmd_theorem_verify(const std::string& id, const std::string& rule_text) {
    Scenario s = rule_text.empty() ? build_scenario(id)
                                   : build_scenario(id, parse_rule_descriptor(rule_text));
    TheoremReport report = verify_scenario(s);
    json doc;
    doc["id"] = report.id;
    doc["description"] = s.description;
    doc["rule"] = s.rule.text;
    doc["pass"] = report.pass;
    doc["details"] = report.details;
    emit(doc);
    std::cerr << report.id << ": " << (report.pass ? "pass" : "fail") << "\n";
    return report.pass ? kOk : kViolated;
}

struct SimArgs {
    SimConfig cfg;
    std::string k1_text = "4:30";
    std::string out, svg, metric = "score";
};

int cmd_simulate(SimArgs& a) {
    a.cfg.k1_values = parse_k1_spec(a.k1_text);
    SweepResult res = run_sweep(a.cfg);
    emit_csv(res.records, a.out);
    if (!a.svg.empty()) emit_svg(res.aggregates, a.metric, a.svg);

    json doc;
    doc["rule"] = a.cfg.rule;
    doc["records"] = res.records.size();
    doc["csv"] = a.out;
    if (!a.svg.empty()) doc["svg"] = a.svg;
    json aggs = json::array();
    for (const auto& agg : res.aggregates)
        aggs.push_back({{"k1", agg.k1},
                        {"mean_score", agg.mean_score},
                        {"std_score", agg.std_score},
                        {"mean_gini", agg.mean_gini},
                        {"std_gini", agg.std_gini}});
    doc["aggregates"] = aggs;
    emit(doc);
    std::cerr << res.records.size() << " records -> " << a.out << "\n";
    return kOk;
}

struct GenArgs {
    std::string kind, out;
    int m = 4, n = 8;
    double p = 0.5;
    std::uint64_t seed = 0;
    SimConfig sim;
};

int cmd_gen(const GenArgs& a) {
    Election e;
    if (a.kind == "ranked-uniform") {
        e = gen_ranked_uniform(a.m, a.n, a.seed);
    } else if (a.kind == "approval-uniform") {
        if (a.p < 0 || a.p > 1) throw UsageError("probability must lie in [0, 1]");
        e = gen_approval_uniform(a.m, a.n, a.p, a.seed);
    } else if (a.kind == "euclidean") {
        std::vector<Point2D> cands, voters;
        sample_instance(a.sim, a.seed, cands, voters);
        e = profile_from_points(cands, voters);
    } else {
        throw UsageError("unknown generator kind: " + a.kind);
    }
    std::string text = serialize_election(e);
    if (a.out.empty()) {
        std::cout << text;
    } else {
        save_election(e, a.out);
        std::cerr << "wrote " << a.out << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact engine for multi-stage multi-winner voting"};
    app.require_subcommand(1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "compute the winning committees of an election");
    run->add_option("--rule", run_args.rule, "rule descriptor, e.g. l1:borda")->required();
    run->add_option("--election", run_args.election, "election JSON file")->required();
    run->add_option("--vector", run_args.vector_text, "stage vector, e.g. 4,2")->required();
    run->add_flag("--relaxed", run_args.relaxed, "allow no-op stages (k equal to pool size)");
    run->add_flag("--trajectories", run_args.trajectories, "include stage trajectories");

    auto* axiom = app.add_subcommand("axiom", "axiom checking and violation search");
    axiom->require_subcommand(1);
    AxiomArgs ax;
    auto* check = axiom->add_subcommand("check", "check one axiom on one instance");
    check->add_option("--axiom", ax.axiom,
                      "solid-coalition | committee-monotonicity | candidate-monotonicity | "
                      "consistency | jr | pareto")
        ->required();
    check->add_option("--rule", ax.rule, "rule descriptor")->required();
    check->add_option("--election", ax.election, "election JSON file")->required();
    check->add_option("--election2", ax.election2, "second election (consistency)");
    check->add_option("--vector", ax.vector_text, "stage vector");
    check->add_option("--vector2", ax.vector2_text,
                      "second stage vector (committee-monotonicity; default: last size + 1)");
    check->add_option("--committee", ax.committee_text,
                      "explicit committee labels (jr, pareto); default: the rule's finals");
    check->add_flag("--ceiling-threshold", ax.ceiling, "compare against ceil(n/k)");
    check->add_flag("--relaxed", ax.relaxed, "parse stage vectors in relaxed mode");

    SearchArgs sa;
    auto* search = axiom->add_subcommand("search", "random search for a violating instance");
    search->add_option("--axiom", sa.axiom, "axiom id")->required();
    search->add_option("--rule", sa.rule, "rule descriptor")->required();
    search->add_option("--seed", sa.seed, "base seed");
    search->add_option("--budget", sa.budget, "number of trials");
    search->add_option("--max-m", sa.gen.max_m, "candidate bound");
    search->add_option("--max-n", sa.gen.max_n, "voter bound");
    search->add_option("--max-t", sa.gen.max_t, "stage bound");
    search->add_option("--approval-p", sa.gen.approval_p, "approval probability");
    search->add_flag("--ceiling-threshold", sa.ceiling, "compare against ceil(n/k)");

    auto* theorem = app.add_subcommand("theorem", "verify built-in counterexample scenarios");
    theorem->require_subcommand(1);
    std::string th_id, th_rule;
    auto* verify = theorem->add_subcommand("verify", "rebuild and verify one scenario");
    verify->add_option("--id", th_id, "scenario id, see theorem list")->required();
    verify->add_option("--rule", th_rule, "rule descriptor (default: per-scenario)");
    theorem->add_subcommand("list", "list scenario ids");

    SimArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Euclidean two-stage sweep");
    simulate->add_option("--rule", sim.cfg.rule, "score rule descriptor");
    simulate->add_option("--seed", sim.cfg.seed, "base seed");
    simulate->add_option("--k2", sim.cfg.k2, "final committee size");
    simulate->add_option("--k1", sim.k1_text, "first-stage sizes, e.g. 4:30 or 4,8,12");
    simulate->add_option("--trials", sim.cfg.trials, "trials per k1");
    simulate->add_option("--gauss", sim.cfg.n_gauss, "Gaussian candidate count");
    simulate->add_option("--uniform", sim.cfg.n_uniform, "uniform candidate count");
    simulate->add_option("--voters", sim.cfg.n_voters, "voter count");
    simulate->add_option("--out", sim.out, "CSV output path")->required();
    simulate->add_option("--svg", sim.svg, "SVG output path");
    simulate->add_option("--metric", sim.metric, "SVG metric: score | gini");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "generate a random election file");
    gen->add_option("--kind", ga.kind, "ranked-uniform | approval-uniform | euclidean")
        ->required();
    gen->add_option("--m", ga.m, "candidate count");
    gen->add_option("--n", ga.n, "voter count");
    gen->add_option("--p", ga.p, "approval probability");
    gen->add_option("--seed", ga.seed, "seed");
    gen->add_option("--gauss", ga.sim.n_gauss, "Gaussian candidate count (euclidean)");
    gen->add_option("--uniform", ga.sim.n_uniform, "uniform candidate count (euclidean)");
    gen->add_option("--voters", ga.sim.n_voters, "voter count (euclidean)");
    gen->add_option("--out", ga.out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return kUsage;
    }

    try {
        if (*run) return cmd_run(run_args);
        if (*check) return cmd_axiom_check(ax);
        if (*search) return cmd_axiom_search(sa);
        if (theorem->got_subcommand("list")) return cmd_theorem_list();
        if (theorem->got_subcommand("verify")) return cmd_theorem_verify(th_id, th_rule);
        if (*simulate) return cmd_simulate(sim);
        if (*gen) return cmd_gen(ga);
        throw UsageError("no subcommand");
    } catch (const CapExceededError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kCap;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kUsage;
    }
}
