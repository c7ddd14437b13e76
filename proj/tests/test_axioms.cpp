#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "msv/axioms.hpp"
#include "msv/generators.hpp"

using namespace msv;
using namespace msv::test;

TEST_CASE("solid coalition holds for multi-stage plurality") {
    std::mt19937_64 rng(11);
    RuleRunner sntv = make_rule_runner("l1:plu");
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Election e = gen_ranked_uniform(5, 9, seed);
        StageVector v = random_stage_vector(5, 3, rng);
        CHECK(check_solid_coalition(sntv, e, v).holds);
    }
}

TEST_CASE("solid coalition flags a bloc counterexample") {
    // x is ranked first by 3 of 9 voters (threshold 9/3 = 3) but the top-3
    // approval scores are a=9, b=9, c=6
    Election e = ranked_election("xabcd", {{"xabcd", 3}, {"abcxd", 6}});
    RuleRunner bloc = make_rule_runner("l1:app");
    AxiomVerdict verdict = check_solid_coalition(bloc, e, StageVector{{3}, false});
    CHECK(!verdict.holds);
    CHECK(verdict.witness["candidate"] == "x");
}

TEST_CASE("ceiling threshold variant agrees on integral counts") {
    // supporter counts are integers, so f >= n/k iff f >= ceil(n/k)
    RuleRunner bloc = make_rule_runner("l1:app");
    std::mt19937_64 rng(3);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Election e = gen_ranked_uniform(5, 7, seed);
        StageVector v = random_stage_vector(5, 2, rng);
        AxiomOptions ceil_opt;
        ceil_opt.ceiling_threshold = true;
        CHECK(check_solid_coalition(bloc, e, v).holds ==
              check_solid_coalition(bloc, e, v, ceil_opt).holds);
    }
}

TEST_CASE("committee monotonicity of single-stage approval voting") {
    RuleRunner av = make_rule_runner("thiele:av");
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Election e = gen_approval_uniform(5, 8, 0.5, seed);
        for (int k = 1; k < 4; ++k) {
            AxiomVerdict verdict = check_committee_monotonicity(
                av, e, StageVector{{k}, false}, StageVector{{k + 1}, false});
            CHECK(verdict.holds);
        }
    }
}

TEST_CASE("committee monotonicity rejects mismatched sizes") {
    RuleRunner av = make_rule_runner("thiele:av");
    Election e = gen_approval_uniform(4, 5, 0.5, 1);
    CHECK_THROWS_AS(check_committee_monotonicity(av, e, StageVector{{1}, false},
                                                 StageVector{{3}, false}),
                    UsageError);
}

TEST_CASE("candidate monotonicity of single-stage borda") {
    RuleRunner borda = make_rule_runner("l1:borda");
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Election e = gen_ranked_uniform(4, 6, seed);
        CHECK(check_candidate_monotonicity(borda, e, StageVector{{2}, false}).holds);
    }
}

TEST_CASE("consistency of single-stage positional scoring") {
    RuleRunner borda = make_rule_runner("l1:borda");
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Election e1 = gen_ranked_uniform(4, 5, seed);
        Election e2 = gen_ranked_uniform(4, 5, seed + 1000);
        AxiomVerdict verdict = check_consistency(borda, e1, e2, StageVector{{2}, false});
        CHECK(verdict.holds);
    }
    Election e1 = gen_ranked_uniform(4, 5, 1);
    Election other = gen_ranked_uniform(5, 5, 2);
    CHECK_THROWS_AS(check_consistency(borda, e1, other, StageVector{{2}, false}),
                    UsageError);  // different candidate sets
}

TEST_CASE("justified representation reduction") {
    // threshold n/k = 2: both c-approvers are unrepresented by {a,b}
    Election e = approval_election("abcd", {{"c", 2}, {"a", 1}, {"b", 1}});
    AxiomVerdict bad = check_justified_representation(e, comm(e, "ab"), 2);
    CHECK(!bad.holds);
    CHECK(bad.witness["candidate"] == "c");
    CHECK(check_justified_representation(e, comm(e, "ac"), 2).holds);
}

TEST_CASE("jr reduction equals brute force over voter groups") {
    // brute force: any >= n/k subset of voters sharing an approved candidate
    // and no member of S
    auto brute = [](const Election& e, const Committee& S, int k) {
        std::int64_t n = e.total_weight();
        for (int c = 0; c < e.m(); ++c) {
            if (std::binary_search(S.begin(), S.end(), c)) continue;
            std::int64_t w = 0;
            for (const auto& b : e.approval) {
                bool has_c = std::binary_search(b.approved.begin(), b.approved.end(), c);
                bool repr = false;
                for (int s : S)
                    repr = repr || std::binary_search(b.approved.begin(), b.approved.end(), s);
                if (has_c && !repr) w += b.weight;
            }
            if (Rational(w) * k >= Rational(n)) return false;
        }
        return true;
    };
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Election e = gen_approval_uniform(5, 7, 0.4, seed);
        for (int k = 1; k <= 3; ++k) {
            Committee S(k);
            for (int i = 0; i < k; ++i) S[i] = i;
            do {
                CHECK(check_justified_representation(e, S, k).holds == brute(e, S, k));
            } while (next_combination(S, e.m()));
        }
    }
}

TEST_CASE("pareto efficiency detects domination") {
    Election e = approval_election("abc", {{"ac", 2}, {"c", 1}});
    AxiomVerdict bad = check_pareto_efficiency(e, comm(e, "ab"), 2);
    CHECK(!bad.holds);
    CHECK(check_pareto_efficiency(e, comm(e, "ac"), 2).holds);
}

TEST_CASE("candidate monotonicity notes skipped perturbations") {
    // every winner already tops every ballot listing it first
    Election e = approval_election("ab", {{"a", 2}, {"b", 1}});
    RuleRunner av = make_rule_runner("thiele:av");
    AxiomVerdict verdict = check_candidate_monotonicity(av, e, StageVector{{1}, false});
    CHECK(verdict.holds);
    CHECK(verdict.notes.contains("skipped_noop_perturbations"));
}

TEST_CASE("violation search is deterministic and finds pav counterexamples") {
    GenConfig gen;
    gen.max_m = 5;
    gen.max_n = 8;
    gen.max_t = 1;
    SearchOutcome a = search_violation("committee-monotonicity", "thiele:pav", gen, 7, 400);
    SearchOutcome b = search_violation("committee-monotonicity", "thiele:pav", gen, 7, 400);
    REQUIRE(a.witness.has_value());
    CHECK(a.trials_run == b.trials_run);
    CHECK(*a.witness == *b.witness);

    SearchOutcome none = search_violation("committee-monotonicity", "thiele:av", gen, 7, 60);
    CHECK(!none.witness.has_value());
    CHECK(none.trials_run == 60);

    CHECK_THROWS_AS(search_violation("nope", "thiele:av", gen, 1, 1), UsageError);
}
