#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "msv/counterexamples.hpp"

using namespace msv;

TEST_CASE("every catalog scenario verifies with its default rule") {
    for (const auto& [id, description] : scenario_catalog()) {
        CAPTURE(id);
        Scenario s = build_scenario(id);
        TheoremReport report = verify_scenario(s);
        CHECK(report.pass);
    }
}

TEST_CASE("catalog covers all fourteen constructions") {
    auto catalog = scenario_catalog();
    CHECK(catalog.size() == 14);
    CHECK_THROWS_AS(build_scenario("T9"), UsageError);
}

TEST_CASE("candidate monotonicity scenarios verify under both norms") {
    CHECK(verify_scenario(build_scenario("T3", parse_rule_descriptor("l1:borda"))).pass);
    CHECK(verify_scenario(build_scenario("T3", parse_rule_descriptor("lmax:borda"))).pass);
}

TEST_CASE("branch guards reject rules from the wrong case") {
    // borda has gamma^{4,2}(1) > gamma^{4,2}(3), so the flat-top branch rejects it
    CHECK_THROWS_AS(build_scenario("T2_L1_B", parse_rule_descriptor("l1:borda")), UsageError);
    CHECK_THROWS_AS(build_scenario("T2_LMAX", parse_rule_descriptor("l1:borda")), UsageError);
    // linear omega has no i0
    CHECK_THROWS_AS(build_scenario("A_LEM1_1", parse_rule_descriptor("thiele:av")), UsageError);
    CHECK_THROWS_AS(build_scenario("A_CM_1", parse_rule_descriptor("thiele:av")), UsageError);
    // pav's differences only shrink; the growing-difference cases reject it
    CHECK_THROWS_AS(build_scenario("A_LEM1_2", parse_rule_descriptor("thiele:pav")),
                    UsageError);
    CHECK_THROWS_AS(build_scenario("A_CM_2", parse_rule_descriptor("thiele:pav")), UsageError);
    CHECK_THROWS_AS(build_scenario("A_CONS_2", parse_rule_descriptor("thiele:pav")),
                    UsageError);
    // and conversely for the convex preset
    CHECK_THROWS_AS(build_scenario("A_LEM1_1", parse_rule_descriptor("thiele:convex")),
                    UsageError);
    CHECK_THROWS_AS(build_scenario("A_PE", parse_rule_descriptor("thiele:convex")),
                    UsageError);
}

TEST_CASE("derived ratios are the smallest valid instantiations") {
    CHECK(build_scenario("A_LEM1_1").ratio == std::vector<long long>{2, 3});
    CHECK(build_scenario("A_LEM1_2").ratio == std::vector<long long>{3, 2});
    CHECK(build_scenario("A_CM_1").ratio == std::vector<long long>{4, 2});
    CHECK(build_scenario("A_CM_2").ratio == std::vector<long long>{2, 4});
    CHECK(build_scenario("A_CONS_1").ratio == std::vector<long long>{3, 4});
    CHECK(build_scenario("A_CONS_2").ratio == std::vector<long long>{4, 3});
    CHECK(build_scenario("A_PE").ratio == std::vector<long long>{2, 4, 12});
}

TEST_CASE("derive_integer_ratio orders by sum then lexicographically") {
    auto r = derive_integer_ratio(2, [](const std::vector<long long>& n) {
        return n[0] == 2 * n[1];
    });
    REQUIRE(r.has_value());
    CHECK(*r == std::vector<long long>{2, 1});

    auto none = derive_integer_ratio(
        1, [](const std::vector<long long>& n) { return n[0] < 0; }, 1, 50);
    CHECK(!none.has_value());

    auto big = derive_integer_ratio(2, [](const std::vector<long long>& n) {
        return n[0] * 3 == n[1] && n[0] > 1;
    });
    REQUIRE(big.has_value());
    CHECK(*big == std::vector<long long>{2, 6});
}

TEST_CASE("theorem scenarios carry replayable elections") {
    Scenario s = build_scenario("T2_L1_A");
    CHECK(s.elections.size() == 1);
    CHECK(s.elections.front().total_weight() == 4 * 1 + 4 * 1 + 4 + 4 + 200 * 24 + 100 * 24);
    CHECK(s.vectors.size() == 2);

    Scenario lmax = build_scenario("T2_LMAX");
    CHECK(lmax.elections.size() == 2);
    CHECK(lmax.elections[1].total_weight() == 12);  // the hand-pinned group alone

    Scenario t3 = build_scenario("T3");
    REQUIRE(t3.perturbed.has_value());
    CHECK(t3.perturbed->total_weight() == t3.elections.front().total_weight());
}
