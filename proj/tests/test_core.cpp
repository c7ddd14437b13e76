#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "msv/enumeration.hpp"
#include "msv/generators.hpp"
#include "msv/io.hpp"

using namespace msv;
using namespace msv::test;

TEST_CASE("ballot restriction keeps relative order") {
    RankedBallot b;
    b.ranking = {3, 0, 4, 1, 2};
    RankedBallot r = restrict_ballot(b, {0, 2, 3});
    CHECK(r.ranking == std::vector<int>{3, 0, 2});
    CHECK(r.weight == b.weight);
}

TEST_CASE("cycle is a left rotation") {
    std::vector<int> s{1, 2, 3, 4};
    CHECK(cycle(s, 1) == std::vector<int>{2, 3, 4, 1});
    CHECK(cycle(s, 3) == std::vector<int>{4, 1, 2, 3});
    CHECK(cycle(s, 4) == s);
    CHECK_THROWS_AS(cycle(s, 0), UsageError);
    CHECK_THROWS_AS(cycle(s, 5), UsageError);
}

TEST_CASE("all_permutations enumerates n! sequences") {
    auto ps = all_permutations(std::vector<int>{2, 0, 1});
    CHECK(ps.size() == 6);
    CHECK(ps.front() == std::vector<int>{0, 1, 2});
    CHECK(ps.back() == std::vector<int>{2, 1, 0});
    CHECK_THROWS_AS(all_permutations(std::vector<int>(9, 0)), CapExceededError);
}

TEST_CASE("first place counts sum ballot weights") {
    Election e = ranked_election("abc", {{"abc", 3}, {"acb", 2}, {"bca", 4}});
    CHECK(first_place_count(e, e.candidate("a")) == 5);
    CHECK(first_place_count(e, e.candidate("b")) == 4);
    CHECK(first_place_count(e, e.candidate("c")) == 0);
}

TEST_CASE("canonicalize merges duplicate ballots") {
    Election e = ranked_election("ab", {{"ab", 1}, {"ba", 2}, {"ab", 4}});
    CHECK(e.ranked.size() == 2);
    CHECK(e.total_weight() == 7);
    Election f = ranked_election("ab", {{"ba", 2}, {"ab", 5}});
    CHECK(e == f);
}

TEST_CASE("stage vector validation") {
    StageVector strict{{4, 2, 1}, false};
    CHECK_NOTHROW(validate_stage_vector(strict, 5));
    CHECK_THROWS_AS(validate_stage_vector(strict, 4), UsageError);  // k1 = m
    CHECK_THROWS_AS(validate_stage_vector(StageVector{{2, 2}, false}, 5), UsageError);
    CHECK_THROWS_AS(validate_stage_vector(StageVector{{2, 3}, false}, 5), UsageError);
    CHECK_THROWS_AS(validate_stage_vector(StageVector{{2, 0}, false}, 5), UsageError);
    CHECK_NOTHROW(validate_stage_vector(StageVector{{4, 2}, true}, 4));
    CHECK_NOTHROW(validate_stage_vector(StageVector{{2, 2}, true}, 5));
}

TEST_CASE("election JSON round trip") {
    Election e = ranked_election("abc", {{"cab", 2}, {"abc", 1}});
    Election back = parse_election(serialize_election(e));
    CHECK(back == e);

    Election a = approval_election("abc", {{"ab", 3}, {"c", 1}});
    CHECK(parse_election(serialize_election(a)) == a);
}

TEST_CASE("parser rejects malformed documents") {
    CHECK_THROWS_AS(parse_election("not json"), ParseError);
    CHECK_THROWS_AS(parse_election(R"({"candidates":["a","a"],"ballots":[]})"), ParseError);
    CHECK_THROWS_AS(parse_election(
                        R"({"candidates":["a","b"],
                            "ballots":[{"ranking":["a"],"weight":1}]})"),
                    ParseError);  // not a permutation
    CHECK_THROWS_AS(parse_election(
                        R"({"candidates":["a","b"],
                            "ballots":[{"ranking":["a","b"],"weight":0}]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_election(
                        R"({"candidates":["a","b"],
                            "ballots":[{"ranking":["a","b"],"weight":1},
                                       {"approvals":["a"],"weight":1}]})"),
                    ParseError);  // mixed ballot kinds
    CHECK_THROWS_AS(parse_election(
                        R"({"candidates":["a","b"],
                            "ballots":[{"approvals":["z"],"weight":1}]})"),
                    ParseError);
}

TEST_CASE("choose and combination ranking") {
    CHECK(choose(5, 2) == 10);
    CHECK(choose(30, 15) == 155117520);
    CHECK_THROWS_AS(choose(100, 50), CapExceededError);

    CHECK(unrank_combination(5, 2, 0) == std::vector<int>{0, 1});
    CHECK(unrank_combination(5, 2, 9) == std::vector<int>{3, 4});
    std::vector<int> c{0, 1};
    std::uint64_t rank = 0;
    do {
        CHECK(unrank_combination(5, 2, rank) == c);
        ++rank;
    } while (next_combination(c, 5));
    CHECK(rank == 10);
}

TEST_CASE("parallel argmax matches the serial reference") {
    auto scorer = [](const std::vector<int>& S) {
        Rational s = 0;
        for (int c : S) s += Rational((c * 7 + 3) % 11, c + 1);
        return s;
    };
    for (bool ties : {false, true}) {
        ArgmaxResult a = argmax_combinations_serial(12, 5, scorer, UINT64_MAX, ties);
        ArgmaxResult b = argmax_combinations(12, 5, scorer, UINT64_MAX, ties);
        CHECK(a.best == b.best);
        CHECK(a.best_score == b.best_score);
    }
}

TEST_CASE("generators are deterministic per seed") {
    Election a = gen_ranked_uniform(5, 10, 7);
    Election b = gen_ranked_uniform(5, 10, 7);
    CHECK(a == b);
    CHECK(a.total_weight() == 10);
    for (const auto& ballot : gen_ranked_uniform(4, 20, 1).ranked)
        CHECK(ballot.ranking.size() == 4);

    Election c = gen_approval_uniform(5, 10, 0.5, 3);
    CHECK(c == gen_approval_uniform(5, 10, 0.5, 3));
    Election full = gen_approval_uniform(4, 6, 1.0, 9);
    for (const auto& ballot : full.approval) CHECK(ballot.approved.size() == 4);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        StageVector v = random_stage_vector(6, 3, rng);
        CHECK_NOTHROW(validate_stage_vector(v, 6));
        CHECK(v.sizes.size() <= 3);
    }
}
