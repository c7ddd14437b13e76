#include "msv/counterexamples.hpp"

#include "msv/json_util.hpp"

#include <algorithm>
#include <numeric>

namespace msv {

namespace {

using nlohmann::json;
using Labels = std::vector<std::string>;

void require(bool cond, const std::string& msg) {
    if (!cond) throw UsageError(msg);
}

// ---- profile construction over candidate labels ----

class Builder {
public:
    explicit Builder(Labels labels) { e_.labels = std::move(labels); }

    void ranked(const Labels& order, std::int64_t w) {
        RankedBallot b;
        b.weight = w;
        for (const auto& l : order) b.ranking.push_back(e_.candidate(l));
        e_.ranked.push_back(std::move(b));
    }

    // w x prefix > rho_i(block) > suffix for every i in 1..|block|
    void cycles(const Labels& block, const Labels& suffix, std::int64_t w,
                const Labels& prefix = {}) {
        for (int i = 1; i <= static_cast<int>(block.size()); ++i) {
            Labels order = prefix;
            for (const auto& l : cycle(block, i)) order.push_back(l);
            for (const auto& l : suffix) order.push_back(l);
            ranked(order, w);
        }
    }

    // w x prefix > pi > suffix for every permutation pi of group
    void perms(const Labels& group, const Labels& suffix, std::int64_t w,
               const Labels& prefix = {}) {
        for (const auto& pi : all_permutations(group)) {
            Labels order = prefix;
            for (const auto& l : pi) order.push_back(l);
            for (const auto& l : suffix) order.push_back(l);
            ranked(order, w);
        }
    }

    void approve(const Labels& set, std::int64_t w) {
        ApprovalBallot b;
        b.weight = w;
        for (const auto& l : set) b.approved.push_back(e_.candidate(l));
        std::sort(b.approved.begin(), b.approved.end());
        e_.approval.push_back(std::move(b));
    }

    Election build() {
        e_.validate();
        e_.canonicalize();
        return e_;
    }

private:
    Election e_;
};

Labels indexed(const std::string& stem, int count) {
    Labels out;
    for (int j = 1; j <= count; ++j) out.push_back(stem + std::to_string(j));
    return out;
}

Labels concat(std::initializer_list<Labels> parts) {
    Labels out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

Committee committee_of(const Election& e, const Labels& labels) {
    Committee out;
    for (const auto& l : labels) out.push_back(e.candidate(l));
    std::sort(out.begin(), out.end());
    return out;
}

StageVector vec(std::vector<int> sizes) {
    StageVector v;
    v.sizes = std::move(sizes);
    return v;
}

// ---- omega difference analysis ----

Rational pdiff(const OmegaFunction& w, int i) { return w.eval(i) - w.eval(i - 1); }

// smallest i >= 2 with p_i != p_1, or -1 when omega is linear up to limit
int i0_vs_first(const OmegaFunction& w, int limit = 32) {
    Rational p1 = pdiff(w, 1);
    for (int i = 2; i <= limit; ++i) {
        bool defined = true;
        Rational pi;
        try {
            pi = pdiff(w, i);
        } catch (const UsageError&) {
            defined = false;
        }
        if (!defined) break;
        if (pi != p1) return i;
    }
    return -1;
}

// smallest i >= 2 with p_i != p_{i-1}; identical to i0_vs_first for the
// smallest such index, kept separate for the adjacent-difference cases
int i0_adjacent(const OmegaFunction& w, int limit = 32) {
    for (int i = 2; i <= limit; ++i) {
        bool defined = true;
        Rational a, b;
        try {
            a = pdiff(w, i - 1);
            b = pdiff(w, i);
        } catch (const UsageError&) {
            defined = false;
        }
        if (!defined) break;
        if (a != b) return i;
    }
    return -1;
}

const ScoreRule& only_stage(const ParsedRule& rule) {
    require(!rule.thiele, "scenario needs a score-based rule");
    require(rule.stages.size() == 1, "scenario applies one rule to all stages");
    return rule.stages.front();
}

Rational g(const ParsedRule& rule, int m, int k, int p) {
    return only_stage(rule).gamma.eval(m, k, p);
}

// ---- default rules ----

ParsedRule default_rule(const std::string& id) {
    auto table_rule = [](GammaTable t, const std::string& name) {
        ParsedRule r;
        r.stages.push_back({Norm::L1, gamma_table(std::move(t), name)});
        r.text = "l1:" + name;
        return r;
    };
    if (id == "T2_L1_A" || id == "T3" || id == "T4_1") return parse_rule_descriptor("l1:borda");
    if (id == "T2_L1_B")
        return table_rule({{{5, 4}, {1, 1, 1, 1, 0}},
                           {{5, 2}, {1, 1, 1, 0, 0}},
                           {{4, 2}, {1, 1, 1, 0}},
                           {{2, 1}, {1, 0}}},
                          "table-t2-branch-b");
    if (id == "T2_LMAX") return parse_rule_descriptor("lmax:borda");
    if (id == "T4_2")
        return table_rule({{{5, 4}, {1, 1, 1, 1, 0}}, {{4, 1}, {1, 1, 0, 0}}}, "table-t4-case-2");
    if (id == "T4_3")
        return table_rule({{{5, 4}, {1, 1, 1, 1, 0}}, {{4, 1}, {1, 1, 1, 0}}}, "table-t4-case-3");
    if (id == "A_LEM1_1" || id == "A_CM_1" || id == "A_CONS_1" || id == "A_PE")
        return parse_rule_descriptor("thiele:pav");
    if (id == "A_LEM1_2" || id == "A_CM_2" || id == "A_CONS_2")
        return parse_rule_descriptor("thiele:convex");
    throw UsageError("unknown scenario id: " + id);
}

std::optional<std::vector<long long>> derive(
    int vars, const std::function<bool(const std::vector<long long>&)>& accept,
    long long min_value) {
    return derive_integer_ratio(vars, accept, min_value);
}

// ---- score-based scenarios ----

Scenario build_t2_l1(const std::string& id, const ParsedRule& rule) {
    const ScoreRule& sr = only_stage(rule);
    require(sr.beta == Norm::L1, id + " needs an l1 rule");
    for (auto [m, k] : {std::pair{5, 4}, {5, 2}, {4, 2}, {2, 1}})
        require(is_rational_rule(sr, m, k),
                id + " needs a rational rule at every stage size");
    bool branch_a = id == "T2_L1_A";
    if (branch_a)
        require(g(rule, 4, 2, 1) > g(rule, 4, 2, 3),
                "T2_L1_A needs gamma^{4,2}(1) > gamma^{4,2}(3); use T2_L1_B");
    else
        require(g(rule, 4, 2, 1) == g(rule, 4, 2, 3),
                "T2_L1_B needs gamma^{4,2}(1) = gamma^{4,2}(3); use T2_L1_A");

    Builder b({"a", "b", "c", "d", "e"});
    if (branch_a) {
        b.cycles({"b", "c", "a", "e"}, {"d"}, 1);
        b.cycles({"c", "b", "a", "e"}, {"d"}, 1);
    } else {
        b.cycles({"b", "c", "a", "e"}, {}, 1, {"d"});
        b.cycles({"c", "b", "a", "e"}, {}, 1, {"d"});
    }
    b.cycles({"a", "b", "c", "d"}, {"e"}, 1);
    b.cycles({"a", "c", "b", "d"}, {"e"}, 1);
    b.perms({"a", "b", "c", "d"}, {"e"}, 200);
    b.perms({"a", "b", "c", "e"}, {"d"}, 100);

    Scenario s;
    s.id = id;
    s.description = "two-stage committee monotonicity failure, l1 branch " +
                    std::string(branch_a ? "A" : "B");
    s.rule = rule;
    s.elections.push_back(b.build());
    s.vectors = {vec({2, 1}), vec({4, 2})};
    s.expectation = {{"finals_4_2", json::array({json::array({"b", "c"})})},
                     {"some_final_2_1_is", json::array({"a"})},
                     {"committee_monotonicity", "violated"}};
    return s;
}

// Group 5 of the lmax scenario: 12 hand-pinned unit ballots chosen so that
// within the group the m = 7, k = 2 identities hold for every non-increasing
// gamma: the two best positions of {a,b} across the ballots are the multiset
// {2,3,4} four times each, those of {a,c} and {b,c} are {2,3,5} four times
// each, and a beats b on exactly 6 of the 12 ballots.
const char* const kLmaxGroup5[12] = {
    "dagfcbe", "dagfceb", "fbedcag", "fbedcga", "fceagbd", "fceagdb",
    "feagcbd", "feagcdb", "fgbecad", "fgbecda", "fgcbead", "fgcbeda",
};

Scenario build_t2_lmax(const ParsedRule& rule) {
    const ScoreRule& sr = only_stage(rule);
    require(sr.beta == Norm::LMax, "T2_LMAX needs an lmax rule");
    for (auto [m, k] : {std::pair{7, 2}, {7, 5}, {5, 2}, {2, 1}})
        require(is_rational_rule(sr, m, k),
                "T2_LMAX needs a rational rule at every stage size");

    Labels all = {"a", "b", "c", "d", "e", "f", "g"};
    Builder b(all);
    b.perms({"a", "b", "c", "d", "e", "f"}, {"g"}, 200);
    b.perms({"a", "b", "c", "d", "e", "g"}, {"f"}, 200);
    b.perms({"a", "b", "c", "d", "f", "g"}, {"e"}, 100);
    b.perms({"a", "b", "c", "e", "f", "g"}, {"d"}, 100);

    Builder g5(all);
    for (const char* ballot : kLmaxGroup5) {
        Labels order;
        for (const char* p = ballot; *p; ++p) order.push_back(std::string(1, *p));
        b.ranked(order, 1);
        g5.ranked(order, 1);
    }

    Scenario s;
    s.id = "T2_LMAX";
    s.description = "two-stage committee monotonicity failure, lmax branch";
    s.rule = rule;
    s.elections.push_back(b.build());
    s.elections.push_back(g5.build());  // group 5 alone, for the score identities
    s.vectors = {vec({2, 1}), vec({5, 2})};
    s.expectation = {
        {"finals_5_2", json::array({json::array({"b", "c"})})},
        {"some_final_2_1_is", json::array({"a"})},
        {"group5_score_ab", "4*(g(2)+g(3)+g(4))"},
        {"group5_score_ac_bc", "4*(g(2)+g(3)+g(5))"},
        {"committee_monotonicity", "violated"}};
    return s;
}

Scenario build_t3(const ParsedRule& rule) {
    const ScoreRule& sr = only_stage(rule);
    require(is_rational_rule(sr, 3, 2) && is_rational_rule(sr, 2, 1),
            "T3 needs a rational rule at both stage sizes");

    Builder b({"a", "b", "c"});
    b.cycles({"c", "a", "b"}, {}, 10);
    b.perms({"a", "b", "c"}, {}, 1);

    Scenario s;
    s.id = "T3";
    s.description = "two-stage candidate monotonicity failure";
    s.rule = rule;
    s.elections.push_back(b.build());
    s.vectors = {vec({2, 1})};

    // which ballot receives the shift depends on the gamma^{3,2} inequality
    Labels shifted_ballot;
    if (g(rule, 3, 2, 1) > g(rule, 3, 2, 2))
        shifted_ballot = {"b", "a", "c"};  // becomes a > b > c
    else
        shifted_ballot = {"c", "b", "a"};  // becomes c > a > b
    Builder pb({"a", "b", "c"});
    pb.cycles({"c", "a", "b"}, {}, 10);
    for (const auto& pi : all_permutations(Labels{"a", "b", "c"}))
        if (pi != shifted_ballot) pb.ranked(pi, 1);
    Labels after = shifted_ballot;
    auto a_pos = std::find(after.begin(), after.end(), std::string("a"));
    std::iter_swap(a_pos, a_pos - 1);
    pb.ranked(after, 1);
    s.perturbed = pb.build();
    s.perturbation = {{"candidate", "a"}, {"ballot", shifted_ballot}};
    s.expectation = {{"some_final_contains", "a"},
                     {"finals_after", json::array({json::array({"c"})})},
                     {"candidate_monotonicity", "violated"}};
    return s;
}

Scenario build_t4(const std::string& id, const ParsedRule& rule) {
    const ScoreRule& sr = only_stage(rule);
    require(sr.beta == Norm::L1, id + " needs an l1 rule");
    require(is_rational_rule(sr, 5, 4) && is_rational_rule(sr, 4, 1),
            id + " needs a rational rule at both stage sizes");
    int c = id == "T4_1" ? 1 : id == "T4_2" ? 2 : 3;
    require(g(rule, 4, 1, c) > g(rule, 4, 1, c + 1),
            id + " needs gamma^{4,1}(" + std::to_string(c) + ") > gamma^{4,1}(" +
                std::to_string(c + 1) + ")");

    // the cycled three-candidate blocks sit after c-1 fixed leaders
    Labels pre1, suf1, pre2, suf2, pre1b, suf1b;
    if (c == 1) {
        suf1 = {"c", "d"};
        suf1b = {"c", "e"};
        suf2 = {"d", "e"};
    } else if (c == 2) {
        pre1 = {"c"};
        suf1 = {"d"};
        pre1b = {"c"};
        suf1b = {"e"};
        pre2 = {"d"};
        suf2 = {"e"};
    } else {
        pre1 = {"c", "d"};
        pre1b = {"c", "e"};
        pre2 = {"d", "e"};
    }

    auto electorate = [&](bool second) {
        Builder b({"a", "b", "c", "d", "e"});
        if (!second)
            b.cycles({"a", "b", "e"}, suf1, 1, pre1);
        else
            b.cycles({"a", "b", "d"}, suf1b, 1, pre1b);
        b.cycles({"b", "a", "c"}, suf2, 1, pre2);
        b.perms({"a", "b", "d", "e"}, {"c"}, 300);
        b.perms({"a", "b", "c", "e"}, {"d"}, second ? 400 : 100);
        b.perms({"a", "b", "c", "d"}, {"e"}, second ? 100 : 400);
        return b.build();
    };

    Scenario s;
    s.id = id;
    s.description = "two-stage consistency failure, case gamma(" + std::to_string(c) +
                    ") > gamma(" + std::to_string(c + 1) + ")";
    s.rule = rule;
    s.elections.push_back(electorate(false));
    s.elections.push_back(electorate(true));
    s.vectors = {vec({4, 1})};
    s.expectation = {{"finals_v1", json::array({json::array({"a"})})},
                     {"finals_v2", json::array({json::array({"a"})})},
                     {"finals_union", json::array({json::array({"b"})})},
                     {"consistency", "violated"}};
    return s;
}

// ---- Thiele scenarios ----

Scenario build_lem1(const std::string& id, const ParsedRule& rule) {
    require(rule.thiele, id + " needs a Thiele rule");
    const OmegaFunction& w = rule.omega;
    int i0 = i0_vs_first(w);
    require(i0 > 0, id + " needs a non-linear omega");
    Rational p1 = pdiff(w, 1), pi0 = pdiff(w, i0);
    bool case1 = id == "A_LEM1_1";
    if (case1)
        require(pi0 < p1, "A_LEM1_1 needs p_{i0} < p_1; use A_LEM1_2");
    else
        require(pi0 > p1, "A_LEM1_2 needs p_{i0} > p_1; use A_LEM1_1");

    Scenario s;
    s.id = id;
    s.i0 = i0;
    s.rule = rule;
    if (case1) {
        auto ratio = derive(2,
                            [&](const std::vector<long long>& n) {
                                Rational r(n[0], n[1]);
                                return pi0 / p1 < r && r < 1;
                            },
                            1);
        require(ratio.has_value(), "no integer ratio for A_LEM1_1");
        s.ratio = *ratio;
        Labels cs = indexed("c", i0 - 1);
        Builder b(concat({{"a", "b"}, cs}));
        b.approve({"a"}, s.ratio[0]);
        b.approve(concat({{"a"}, cs}), s.ratio[1]);
        b.approve({"b"}, s.ratio[0]);
        b.approve(concat({{"b"}, cs}), s.ratio[1]);
        s.elections.push_back(b.build());
        s.expectation = {{"finals_small", json::array({json(cs)})},
                         {"no_superset_direction", true}};
    } else {
        auto ratio = derive(2,
                            [&](const std::vector<long long>& n) {
                                Rational r(n[0], n[1]);
                                return Rational(1) < r && r < pi0 / p1;
                            },
                            1);
        require(ratio.has_value(), "no integer ratio for A_LEM1_2");
        s.ratio = *ratio;
        Labels ds = indexed("d", i0 - 2);
        Builder b(concat({{"a", "b", "c"}, ds}));
        b.approve(concat({{"c"}, ds}), s.ratio[0]);
        b.approve(concat({{"a", "b"}, ds}), s.ratio[1]);
        s.elections.push_back(b.build());
        s.expectation = {{"finals_small", json::array({json(concat({{"c"}, ds}))})},
                         {"no_superset_direction", true}};
    }
    s.description = "single-stage committee monotonicity failure for non-linear omega, case " +
                    std::string(case1 ? "p_{i0} < p_1" : "p_{i0} > p_1");
    s.vectors = {vec({i0 - 1}), vec({i0})};
    s.params = {{"i0", i0}, {"n1", s.ratio[0]}, {"n2", s.ratio[1]}};
    return s;
}

Scenario build_a_cm(const std::string& id, const ParsedRule& rule) {
    require(rule.thiele, id + " needs a Thiele rule");
    const OmegaFunction& w = rule.omega;
    int i0 = i0_adjacent(w);
    require(i0 > 0, id + " needs a non-linear omega");
    Rational pprev = pdiff(w, i0 - 1), pi0 = pdiff(w, i0);
    require(pprev > 0, id + " needs omega(i0-1) > omega(i0-2)");
    bool case1 = id == "A_CM_1";
    if (case1)
        require(pi0 < pprev, "A_CM_1 needs p_{i0} < p_{i0-1}; use A_CM_2");
    else
        require(pi0 > pprev, "A_CM_2 needs p_{i0} > p_{i0-1}; use A_CM_1");
    require(pi0 > 0 || !case1, "A_CM_1 needs p_{i0} > 0");

    Scenario s;
    s.id = id;
    s.i0 = i0;
    s.rule = rule;
    Labels ds = indexed("d", i0 - 2);

    if (case1) {
        auto ratio = derive(2,
                            [&](const std::vector<long long>& n) {
                                return Rational(n[0]) * pi0 == Rational(n[1]) * pprev &&
                                       n[0] - n[1] > 1;
                            },
                            1);
        require(ratio.has_value(), "no integer ratio for A_CM_1");
        s.ratio = *ratio;
        Builder b(concat({{"a", "b", "c"}, ds}));
        b.approve(concat({{"a", "c"}, ds}), s.ratio[0]);
        b.approve(concat({{"b", "c"}, ds}), s.ratio[0]);
        b.approve(concat({{"a"}, ds}), s.ratio[1]);
        b.approve(concat({{"b"}, ds}), s.ratio[1]);
        s.elections.push_back(b.build());
        // one voter approving {a, d...} additionally approves b
        Builder pb(concat({{"a", "b", "c"}, ds}));
        pb.approve(concat({{"a", "c"}, ds}), s.ratio[0]);
        pb.approve(concat({{"b", "c"}, ds}), s.ratio[0]);
        pb.approve(concat({{"a"}, ds}), s.ratio[1] - 1);
        pb.approve(concat({{"a", "b"}, ds}), 1);
        pb.approve(concat({{"b"}, ds}), s.ratio[1]);
        s.perturbed = pb.build();
        s.perturbation = {{"candidate", "b"}, {"ballot", concat({{"a"}, ds})}};
    } else {
        auto ratio = derive(2,
                            [&](const std::vector<long long>& n) {
                                return Rational(n[0]) * pi0 == Rational(n[1]) * pprev &&
                                       n[1] - n[0] > 1;
                            },
                            1);
        require(ratio.has_value(), "no integer ratio for A_CM_2");
        s.ratio = *ratio;
        Builder b(concat({{"a", "b", "c"}, ds}));
        b.approve(concat({{"a", "b"}, ds}), s.ratio[0]);
        b.approve(concat({{"c"}, ds}), s.ratio[1]);
        s.elections.push_back(b.build());
        // one voter approving {c, d...} additionally approves b
        Builder pb(concat({{"a", "b", "c"}, ds}));
        pb.approve(concat({{"a", "b"}, ds}), s.ratio[0]);
        pb.approve(concat({{"c"}, ds}), s.ratio[1] - 1);
        pb.approve(concat({{"b", "c"}, ds}), 1);
        s.perturbed = pb.build();
        s.perturbation = {{"candidate", "b"}, {"ballot", concat({{"c"}, ds})}};
    }
    s.description = "multi-stage candidate monotonicity failure, case " +
                    std::string(case1 ? "p_{i0} < p_{i0-1}" : "p_{i0} > p_{i0-1}");
    s.vectors = {vec({i0, i0 - 1})};
    s.params = {{"i0", i0}, {"n1", s.ratio[0]}, {"n2", s.ratio[1]}};
    s.expectation = {{"winner_before", "b"},
                     {"excluded_after", "b"},
                     {"candidate_monotonicity", "violated"}};
    return s;
}

Scenario build_a_cons(const std::string& id, const ParsedRule& rule) {
    require(rule.thiele, id + " needs a Thiele rule");
    const OmegaFunction& w = rule.omega;
    int i0 = i0_vs_first(w);
    require(i0 > 0, id + " needs a non-linear omega");
    Rational p1 = pdiff(w, 1), pi0 = pdiff(w, i0);
    bool case1 = id == "A_CONS_1";
    if (case1)
        require(pi0 < p1, "A_CONS_1 needs p_{i0} < p_1; use A_CONS_2");
    else
        require(pi0 > p1, "A_CONS_2 needs p_{i0} > p_1; use A_CONS_1");

    Scenario s;
    s.id = id;
    s.i0 = i0;
    s.rule = rule;

    if (case1) {
        auto ratio = derive(2,
                            [&](const std::vector<long long>& n) {
                                Rational r(n[0], n[1]);
                                return pi0 / p1 < r && r < 1 && n[0] > 2;
                            },
                            1);
        require(ratio.has_value(), "no integer ratio for A_CONS_1");
        s.ratio = *ratio;
        Labels cs = indexed("c", i0 - 1);
        Labels all = concat({{"a", "b"}, cs});
        Builder b1(all);
        b1.approve({"a"}, s.ratio[0]);
        b1.approve(concat({{"b"}, cs}), s.ratio[1]);
        Builder b2(all);
        b2.approve({"b"}, s.ratio[0]);
        b2.approve(concat({{"a"}, cs}), s.ratio[1]);
        s.elections.push_back(b1.build());
        s.elections.push_back(b2.build());
        s.expectation = {{"shared_winners", json::array({json(cs)})},
                         {"consistency", "violated"}};
    } else {
        auto ratio = derive(2,
                            [&](const std::vector<long long>& n) {
                                Rational r(n[0], n[1]);
                                return Rational(1) < r && r < pi0 / p1 && n[1] > 2;
                            },
                            1);
        require(ratio.has_value(), "no integer ratio for A_CONS_2");
        s.ratio = *ratio;
        Labels ds = indexed("d", i0 - 2);
        Labels all = concat({{"a", "b", "c"}, ds});
        Builder b1(all);
        b1.approve(concat({{"b"}, ds}), s.ratio[0]);
        b1.approve(concat({{"c"}, ds}), s.ratio[0]);
        b1.approve(concat({{"a", "b"}, ds}), s.ratio[1]);
        b1.approve(concat({{"a", "c"}, ds}), s.ratio[1]);
        Builder b2(all);
        b2.approve(concat({{"a"}, ds}), s.ratio[0]);
        b2.approve(concat({{"c"}, ds}), s.ratio[0]);
        b2.approve(concat({{"a", "b"}, ds}), s.ratio[1]);
        b2.approve(concat({{"b", "c"}, ds}), s.ratio[1]);
        s.elections.push_back(b1.build());
        s.elections.push_back(b2.build());
        s.expectation = {{"shared_winners", json::array({json(concat({{"c"}, ds}))})},
                         {"consistency", "violated"}};
    }
    s.description = "multi-stage consistency failure, case " +
                    std::string(case1 ? "p_{i0} < p_1" : "p_{i0} > p_1");
    s.vectors = {vec({i0, i0 - 1})};
    s.params = {{"i0", i0}, {"n1", s.ratio[0]}, {"n2", s.ratio[1]}};
    return s;
}

Scenario build_a_pe(const ParsedRule& rule) {
    require(rule.thiele, "A_PE needs a Thiele rule");
    const OmegaFunction& w = rule.omega;
    int i0 = i0_adjacent(w);
    require(i0 > 0, "A_PE needs a non-linear omega");
    Rational pprev = pdiff(w, i0 - 1), pi0 = pdiff(w, i0), pnext = pdiff(w, i0 + 1);
    require(pprev > pi0, "A_PE needs p_{i0-1} > p_{i0}");
    require(pnext > 0, "A_PE needs p_{i0+1} > 0");

    // The first two inequalities alone admit ratios whose stage-one winner
    // set misses {b,c,d,e,f...}; the last two pin that pool into the
    // trajectory.
    auto ratio = derive(3,
                        [&](const std::vector<long long>& n) {
                            Rational r12(n[0], n[1]), r32(n[2], n[1]);
                            return r12 <= (pprev - pi0) / pi0 && r32 >= pprev / pnext &&
                                   Rational(n[0]) * pprev + Rational(n[1]) * pi0 <=
                                       Rational(n[2]) * pnext &&
                                   Rational(n[2]) * pnext <= Rational(n[1]) * pprev;
                        },
                        2);
    require(ratio.has_value(), "no integer ratio for A_PE");

    Scenario s;
    s.id = "A_PE";
    s.i0 = i0;
    s.rule = rule;
    s.ratio = *ratio;
    Labels fs = indexed("f", i0 - 2);
    Builder b(concat({{"a", "b", "c", "d", "e"}, fs}));
    b.approve(concat({{"a"}, fs}), s.ratio[0]);
    b.approve(concat({{"a", "b"}, fs}), s.ratio[1]);
    b.approve(concat({{"a", "c"}, fs}), s.ratio[1]);
    b.approve(concat({{"b", "d", "e"}, fs}), s.ratio[2]);
    b.approve(concat({{"c", "d", "e"}, fs}), s.ratio[2]);
    s.elections.push_back(b.build());
    s.vectors = {vec({i0 + 2, i0 + 1})};
    s.description = "multi-stage Pareto efficiency failure";
    s.params = {{"i0", i0}, {"n1", s.ratio[0]}, {"n2", s.ratio[1]}, {"n3", s.ratio[2]}};
    s.expectation = {{"dominated_finals",
                      json::array({json(concat({{"b", "c", "d"}, fs})),
                                   json(concat({{"b", "c", "e"}, fs}))})},
                     {"dominated_by", json(concat({{"a", "d", "e"}, fs}))},
                     {"pareto_efficiency", "violated"}};
    return s;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> scenario_catalog() {
    return {
        {"T2_L1_A", "committee monotonicity fails for two-stage l1 rules (strict top gap)"},
        {"T2_L1_B", "committee monotonicity fails for two-stage l1 rules (flat top gap)"},
        {"T2_LMAX", "committee monotonicity fails for two-stage lmax rules"},
        {"T3", "candidate monotonicity fails for two-stage rational score rules"},
        {"T4_1", "consistency fails for two-stage score rules, gamma(1) > gamma(2)"},
        {"T4_2", "consistency fails for two-stage score rules, gamma(2) > gamma(3)"},
        {"T4_3", "consistency fails for two-stage score rules, gamma(3) > gamma(4)"},
        {"A_LEM1_1", "single-stage Thiele committee monotonicity fails, p_{i0} < p_1"},
        {"A_LEM1_2", "single-stage Thiele committee monotonicity fails, p_{i0} > p_1"},
        {"A_CM_1", "multi-stage Thiele candidate monotonicity fails, p_{i0} < p_{i0-1}"},
        {"A_CM_2", "multi-stage Thiele candidate monotonicity fails, p_{i0} > p_{i0-1}"},
        {"A_CONS_1", "multi-stage Thiele consistency fails, p_{i0} < p_1"},
        {"A_CONS_2", "multi-stage Thiele consistency fails, p_{i0} > p_1"},
        {"A_PE", "multi-stage Thiele Pareto efficiency fails"},
    };
}

Scenario build_scenario(const std::string& id) { return build_scenario(id, default_rule(id)); }

Scenario build_scenario(const std::string& id, const ParsedRule& rule) {
    if (id == "T2_L1_A" || id == "T2_L1_B") return build_t2_l1(id, rule);
    if (id == "T2_LMAX") return build_t2_lmax(rule);
    if (id == "T3") return build_t3(rule);
    if (id == "T4_1" || id == "T4_2" || id == "T4_3") return build_t4(id, rule);
    if (id == "A_LEM1_1" || id == "A_LEM1_2") return build_lem1(id, rule);
    if (id == "A_CM_1" || id == "A_CM_2") return build_a_cm(id, rule);
    if (id == "A_CONS_1" || id == "A_CONS_2") return build_a_cons(id, rule);
    if (id == "A_PE") return build_a_pe(rule);
    throw UsageError("unknown scenario id: " + id);
}

namespace {

bool has_member(const std::vector<Committee>& finals, int c) {
    for (const auto& S : finals)
        if (std::binary_search(S.begin(), S.end(), c)) return true;
    return false;
}

}  // namespace

TheoremReport verify_scenario(const Scenario& s, const MultiStageOptions& opt) {
    RuleRunner runner = make_rule_runner(s.rule, opt);
    const Election& e = s.elections.front();
    AxiomOptions aopt;
    aopt.multistage = opt;

    TheoremReport report;
    report.id = s.id;
    bool pass = true;
    json details;
    details["rule"] = s.rule.text;
    details["params"] = s.params;

    auto expect = [&](const std::string& key, bool ok, json computed) {
        details[key] = {{"ok", ok}, {"computed", std::move(computed)}};
        pass = pass && ok;
    };

    if (s.id.rfind("T2", 0) == 0) {
        auto small = runner.run(e, s.vectors[0]).finals;
        auto big = runner.run(e, s.vectors[1]).finals;
        Committee bc = committee_of(e, {"b", "c"});
        expect("finals_big", big == std::vector<Committee>{bc}, committees_to_json(e, big));
        expect("a_in_small", has_member(small, e.candidate("a")),
               committees_to_json(e, small));
        if (s.id == "T2_LMAX") {
            const Election& g5 = s.elections[1];
            const ScoreRule& sr = s.rule.stages.front();
            auto gam = [&](int p) { return sr.gamma.eval(7, 2, p); };
            Rational ab = total_score(sr, g5, 2, committee_of(g5, {"a", "b"}));
            Rational ac = total_score(sr, g5, 2, committee_of(g5, {"a", "c"}));
            Rational bcs = total_score(sr, g5, 2, committee_of(g5, {"b", "c"}));
            Rational want_ab = 4 * (gam(2) + gam(3) + gam(4));
            Rational want_other = 4 * (gam(2) + gam(3) + gam(5));
            expect("group5_identities",
                   ab == want_ab && ac == want_other && bcs == want_other,
                   {{"ab", to_decimal_string(ab, 6)},
                    {"ac", to_decimal_string(ac, 6)},
                    {"bc", to_decimal_string(bcs, 6)}});
        }
        auto verdict = check_committee_monotonicity(runner, e, s.vectors[0], s.vectors[1], aopt);
        expect("committee_monotonicity_violated", !verdict.holds, verdict.witness);
    } else if (s.id == "T3") {
        auto before = runner.run(e, s.vectors[0]).finals;
        auto after = runner.run(*s.perturbed, s.vectors[0]).finals;
        expect("a_in_finals_before", has_member(before, e.candidate("a")),
               committees_to_json(e, before));
        expect("finals_after",
               after == std::vector<Committee>{committee_of(e, {"c"})},
               committees_to_json(e, after));
        auto verdict = check_candidate_monotonicity(runner, e, s.vectors[0], aopt);
        expect("candidate_monotonicity_violated", !verdict.holds, verdict.witness);
    } else if (s.id.rfind("T4", 0) == 0 || s.id.rfind("A_CONS", 0) == 0) {
        const Election& e2 = s.elections[1];
        auto f1 = runner.run(e, s.vectors[0]).finals;
        auto f2 = runner.run(e2, s.vectors[0]).finals;
        std::vector<Committee> shared;
        std::set_intersection(f1.begin(), f1.end(), f2.begin(), f2.end(),
                              std::back_inserter(shared));
        if (s.id.rfind("T4", 0) == 0) {
            std::vector<Committee> just_a{committee_of(e, {"a"})};
            expect("finals_v1", f1 == just_a, committees_to_json(e, f1));
            expect("finals_v2", f2 == just_a, committees_to_json(e, f2));
            Election merged = e;
            merged.ranked.insert(merged.ranked.end(), e2.ranked.begin(), e2.ranked.end());
            merged.canonicalize();
            auto fu = runner.run(merged, s.vectors[0]).finals;
            expect("finals_union", fu == std::vector<Committee>{committee_of(e, {"b"})},
                   committees_to_json(e, fu));
        } else {
            Labels shared_labels;
            for (const auto& l : s.expectation["shared_winners"][0])
                shared_labels.push_back(l.get<std::string>());
            expect("shared_winners",
                   shared == std::vector<Committee>{committee_of(e, shared_labels)},
                   committees_to_json(e, shared));
        }
        auto verdict = check_consistency(runner, e, e2, s.vectors[0], aopt);
        expect("consistency_violated", !verdict.holds, verdict.witness);
    } else if (s.id.rfind("A_LEM1", 0) == 0) {
        auto small = runner.run(e, s.vectors[0]).finals;
        Labels small_labels;
        for (const auto& l : s.expectation["finals_small"][0])
            small_labels.push_back(l.get<std::string>());
        expect("finals_small",
               small == std::vector<Committee>{committee_of(e, small_labels)},
               committees_to_json(e, small));
        auto verdict = check_committee_monotonicity(runner, e, s.vectors[0], s.vectors[1], aopt);
        bool right_direction =
            !verdict.holds &&
            verdict.witness.value("direction", "") == "no superset in the larger result";
        expect("committee_monotonicity_violated", right_direction, verdict.witness);
    } else if (s.id.rfind("A_CM", 0) == 0) {
        int b = e.candidate("b");
        auto before = runner.run(e, s.vectors[0]).finals;
        auto after = runner.run(*s.perturbed, s.vectors[0]).finals;
        expect("b_in_finals_before", has_member(before, b), committees_to_json(e, before));
        expect("b_excluded_after", !has_member(after, b), committees_to_json(e, after));
        auto verdict = check_candidate_monotonicity(runner, e, s.vectors[0], aopt);
        expect("candidate_monotonicity_violated", !verdict.holds, verdict.witness);
    } else if (s.id == "A_PE") {
        auto finals = runner.run(e, s.vectors[0]).finals;
        details["finals"] = committees_to_json(e, finals);
        int k = s.vectors[0].sizes.back();
        bool dominated_final = false;
        json first_witness;
        for (const auto& S : finals) {
            auto verdict = check_pareto_efficiency(e, S, k, aopt);
            if (!verdict.holds) {
                dominated_final = true;
                if (first_witness.is_null()) first_witness = verdict.witness;
            }
        }
        expect("dominated_final_exists", dominated_final, first_witness);
        for (const auto& labels_json : s.expectation["dominated_finals"]) {
            Labels labels;
            for (const auto& l : labels_json) labels.push_back(l.get<std::string>());
            Committee S = committee_of(e, labels);
            bool present =
                std::find(finals.begin(), finals.end(), S) != finals.end();
            auto verdict = check_pareto_efficiency(e, S, k, aopt);
            expect("dominated_" + labels[0] + labels[1] + labels[2],
                   present && !verdict.holds, verdict.witness);
        }
    } else {
        throw UsageError("unknown scenario id: " + s.id);
    }

    report.pass = pass;
    report.details = std::move(details);
    return report;
}

std::optional<std::vector<long long>> derive_integer_ratio(
    int vars, const std::function<bool(const std::vector<long long>&)>& accept,
    long long min_value, long long max_sum) {
    if (vars < 1) throw UsageError("derive_integer_ratio needs at least one variable");
    long long evaluations = 0;
    const long long budget = 20000000;
    for (long long sum = vars * min_value; sum <= max_sum; ++sum) {
        std::vector<long long> n(vars, min_value);
        // enumerate compositions of sum in lexicographic order
        std::function<bool(int, long long)> rec = [&](int idx, long long rest) -> bool {
            if (idx == vars - 1) {
                if (rest < min_value) return false;
                n[idx] = rest;
                if (++evaluations > budget)
                    throw CapExceededError("integer ratio search budget exhausted");
                return accept(n);
            }
            for (long long v = min_value; v <= rest - (vars - idx - 1) * min_value; ++v) {
                n[idx] = v;
                if (rec(idx + 1, rest - v)) return true;
            }
            return false;
        };
        if (rec(0, sum)) return n;
    }
    return std::nullopt;
}

}  // namespace msv
