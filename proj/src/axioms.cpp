#include "msv/axioms.hpp"

#include "msv/generators.hpp"
#include "msv/json_util.hpp"

#include <algorithm>

namespace msv {

namespace {

using nlohmann::json;

Rational quota(std::int64_t n, int k, bool ceiling) {
    if (k < 1) throw UsageError("k out of range");
    if (!ceiling) return Rational(n, k);
    return Rational((n + k - 1) / k);
}

bool contains(const std::vector<Committee>& finals, const Committee& S) {
    return std::find(finals.begin(), finals.end(), S) != finals.end();
}

bool member_of_any(const std::vector<Committee>& finals, int c) {
    for (const auto& S : finals)
        if (std::binary_search(S.begin(), S.end(), c)) return true;
    return false;
}

bool is_subset(const Committee& small, const Committee& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

AxiomVerdict check_solid_coalition(const RuleRunner& r, const Election& e,
                                   const StageVector& v, const AxiomOptions& opt) {
    if (e.is_approval()) throw UsageError("solid coalition needs a ranked profile");
    AxiomVerdict verdict{"solid-coalition", true, nullptr, nullptr};
    Rational q = quota(e.total_weight(), v.sizes.back(), opt.ceiling_threshold);
    auto finals = r.run(e, v).finals;
    for (int c = 0; c < e.m(); ++c) {
        std::int64_t weight = first_place_count(e, c);
        if (Rational(weight) < q) continue;
        for (const auto& S : finals) {
            if (std::binary_search(S.begin(), S.end(), c)) continue;
            // certify against a fresh run before reporting
            if (!contains(r.run(e, v).finals, S)) continue;
            verdict.holds = false;
            verdict.witness = {{"candidate", e.labels[c]},
                               {"first_place_weight", weight},
                               {"quota", to_decimal_string(q, 6)},
                               {"excluding_committee", committee_to_json(e, S)}};
            return verdict;
        }
    }
    return verdict;
}

AxiomVerdict check_committee_monotonicity(const RuleRunner& r, const Election& e,
                                          const StageVector& v1, const StageVector& v2,
                                          const AxiomOptions& opt) {
    (void)opt;
    const StageVector* small = &v1;
    const StageVector* big = &v2;
    if (small->sizes.back() > big->sizes.back()) std::swap(small, big);
    if (small->sizes.back() + 1 != big->sizes.back())
        throw UsageError("last stage sizes must differ by exactly 1");

    AxiomVerdict verdict{"committee-monotonicity", true, nullptr, nullptr};
    auto small_finals = r.run(e, *small).finals;
    auto big_finals = r.run(e, *big).finals;

    for (const auto& S : small_finals) {
        bool extended = std::any_of(big_finals.begin(), big_finals.end(),
                                    [&](const Committee& T) { return is_subset(S, T); });
        if (!extended) {
            verdict.holds = false;
            verdict.witness = {{"direction", "no superset in the larger result"},
                               {"committee", committee_to_json(e, S)},
                               {"larger_result", committees_to_json(e, big_finals)}};
            return verdict;
        }
    }
    for (const auto& T : big_finals) {
        bool shrinkable = std::any_of(small_finals.begin(), small_finals.end(),
                                      [&](const Committee& S) { return is_subset(S, T); });
        if (!shrinkable) {
            verdict.holds = false;
            verdict.witness = {{"direction", "no subset in the smaller result"},
                               {"committee", committee_to_json(e, T)},
                               {"smaller_result", committees_to_json(e, small_finals)}};
            return verdict;
        }
    }
    return verdict;
}

namespace {

// One unit of weight split off ballot index idx, perturbed in favor of c.
// Returns nothing when the perturbation is a no-op (c already first or
// already approved).
std::optional<Election> perturb_in_favor(const Election& e, size_t idx, int c) {
    Election out = e;
    if (!e.is_approval()) {
        RankedBallot unit = e.ranked[idx];
        unit.weight = 1;
        auto pos = std::find(unit.ranking.begin(), unit.ranking.end(), c);
        if (pos == unit.ranking.begin()) return std::nullopt;
        std::iter_swap(pos, pos - 1);
        if (out.ranked[idx].weight == 1)
            out.ranked.erase(out.ranked.begin() + idx);
        else
            out.ranked[idx].weight -= 1;
        out.ranked.push_back(std::move(unit));
    } else {
        ApprovalBallot unit = e.approval[idx];
        unit.weight = 1;
        if (std::binary_search(unit.approved.begin(), unit.approved.end(), c))
            return std::nullopt;
        unit.approved.insert(
            std::upper_bound(unit.approved.begin(), unit.approved.end(), c), c);
        if (out.approval[idx].weight == 1)
            out.approval.erase(out.approval.begin() + idx);
        else
            out.approval[idx].weight -= 1;
        out.approval.push_back(std::move(unit));
    }
    out.canonicalize();
    return out;
}

}  // namespace

AxiomVerdict check_candidate_monotonicity(const RuleRunner& r, const Election& e,
                                          const StageVector& v, const AxiomOptions& opt) {
    (void)opt;
    AxiomVerdict verdict{"candidate-monotonicity", true, nullptr, nullptr};
    auto finals = r.run(e, v).finals;
    size_t ballots = e.is_approval() ? e.approval.size() : e.ranked.size();
    int skipped = 0;

    for (int c = 0; c < e.m(); ++c) {
        if (!member_of_any(finals, c)) continue;
        for (size_t idx = 0; idx < ballots; ++idx) {
            auto perturbed = perturb_in_favor(e, idx, c);
            if (!perturbed) {
                ++skipped;
                continue;
            }
            auto after = r.run(*perturbed, v).finals;
            if (member_of_any(after, c)) continue;
            // certify with a second independent run
            if (member_of_any(r.run(*perturbed, v).finals, c)) continue;
            verdict.holds = false;
            verdict.witness = {{"candidate", e.labels[c]},
                               {"ballot_index", idx},
                               {"perturbed_election", election_to_json(*perturbed)},
                               {"finals_after", committees_to_json(e, after)}};
            verdict.notes = {{"skipped_noop_perturbations", skipped}};
            return verdict;
        }
    }
    verdict.notes = {{"skipped_noop_perturbations", skipped}};
    return verdict;
}

AxiomVerdict check_consistency(const RuleRunner& r, const Election& e1, const Election& e2,
                               const StageVector& v, const AxiomOptions& opt) {
    (void)opt;
    if (e1.labels != e2.labels) throw UsageError("electorates must share the candidate set");
    AxiomVerdict verdict{"consistency", true, nullptr, nullptr};

    auto f1 = r.run(e1, v).finals;
    auto f2 = r.run(e2, v).finals;
    std::vector<Committee> shared;
    std::set_intersection(f1.begin(), f1.end(), f2.begin(), f2.end(),
                          std::back_inserter(shared));
    if (shared.empty()) {
        verdict.notes = {{"vacuous", true}};
        return verdict;
    }

    Election merged = e1;
    merged.ranked.insert(merged.ranked.end(), e2.ranked.begin(), e2.ranked.end());
    merged.approval.insert(merged.approval.end(), e2.approval.begin(), e2.approval.end());
    merged.canonicalize();
    auto fu = r.run(merged, v).finals;
    if (fu == shared) return verdict;

    verdict.holds = false;
    verdict.witness = {{"shared_winners", committees_to_json(e1, shared)},
                       {"union_winners", committees_to_json(e1, fu)},
                       {"union_election", election_to_json(merged)}};
    return verdict;
}

AxiomVerdict check_justified_representation(const Election& e, const Committee& S, int k,
                                            const AxiomOptions& opt) {
    if (!e.is_approval()) throw UsageError("justified representation needs approvals");
    AxiomVerdict verdict{"justified-representation", true, nullptr, nullptr};
    Rational q = quota(e.total_weight(), k, opt.ceiling_threshold);
    std::vector<bool> in_s(e.m(), false);
    for (int c : S) in_s[c] = true;

    for (int c = 0; c < e.m(); ++c) {
        if (in_s[c]) continue;
        std::int64_t weight = 0;
        json voters = json::array();
        for (const auto& b : e.approval) {
            bool wants_c = std::binary_search(b.approved.begin(), b.approved.end(), c);
            bool represented = std::any_of(b.approved.begin(), b.approved.end(),
                                           [&](int x) { return in_s[x]; });
            if (wants_c && !represented) {
                weight += b.weight;
                json ballot = json::array();
                for (int x : b.approved) ballot.push_back(e.labels[x]);
                voters.push_back({{"approvals", ballot}, {"weight", b.weight}});
            }
        }
        if (Rational(weight) >= q) {
            verdict.holds = false;
            verdict.witness = {{"candidate", e.labels[c]},
                               {"cohesive_weight", weight},
                               {"quota", to_decimal_string(q, 6)},
                               {"voters", voters},
                               {"committee", committee_to_json(e, S)}};
            return verdict;
        }
    }
    return verdict;
}

AxiomVerdict check_pareto_efficiency(const Election& e, const Committee& S, int k,
                                     const AxiomOptions& opt) {
    if (!e.is_approval()) throw UsageError("Pareto efficiency is checked for approvals only");
    if (static_cast<int>(S.size()) != k) throw UsageError("committee size mismatch");
    AxiomVerdict verdict{"pareto-efficiency", true, nullptr, nullptr};
    if (choose(e.m(), k) > opt.multistage.enumeration.cap)
        throw CapExceededError("Pareto scan exceeds the enumeration cap");

    std::vector<bool> in_s(e.m(), false);
    for (int c : S) in_s[c] = true;
    auto hits = [&](const ApprovalBallot& b, const std::vector<bool>& mask) {
        int h = 0;
        for (int c : b.approved)
            if (mask[c]) ++h;
        return h;
    };

    std::vector<int> base;
    for (const auto& b : e.approval) base.push_back(hits(b, in_s));

    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    do {
        Committee T(comb.begin(), comb.end());
        if (T == S) continue;
        std::vector<bool> in_t(e.m(), false);
        for (int c : T) in_t[c] = true;
        bool weakly_better = true, strictly = false;
        for (size_t i = 0; i < e.approval.size(); ++i) {
            int h = hits(e.approval[i], in_t);
            if (h < base[i]) {
                weakly_better = false;
                break;
            }
            if (h > base[i]) strictly = true;
        }
        if (weakly_better && strictly) {
            verdict.holds = false;
            verdict.witness = {{"committee", committee_to_json(e, S)},
                               {"dominating_committee", committee_to_json(e, T)}};
            return verdict;
        }
    } while (next_combination(comb, e.m()));
    return verdict;
}

namespace {

std::optional<std::pair<StageVector, StageVector>> adjacent_vectors(int m, int max_t,
                                                                    std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 20; ++attempt) {
        StageVector small = random_stage_vector(m, max_t, rng);
        int prev = small.sizes.size() > 1 ? small.sizes[small.sizes.size() - 2] : m;
        if (small.sizes.back() + 1 >= prev) continue;
        StageVector big = small;
        big.sizes.back() += 1;
        return std::make_pair(small, big);
    }
    return std::nullopt;
}

}  // namespace

SearchOutcome search_violation(const std::string& axiom, const std::string& rule_descriptor,
                               const GenConfig& gen, std::uint64_t seed, int budget,
                               const AxiomOptions& opt) {
    RuleRunner runner = make_rule_runner(rule_descriptor, opt.multistage);
    SearchOutcome outcome;

    for (int trial = 0; trial < budget; ++trial) {
        outcome.trials_run = trial + 1;
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(trial));
        std::uniform_int_distribution<int> pick_m(2, std::max(2, gen.max_m));
        std::uniform_int_distribution<int> pick_n(1, std::max(1, gen.max_n));
        int m = pick_m(rng);
        int n = pick_n(rng);
        std::uint64_t esize = rng();
        Election e = runner.approval ? gen_approval_uniform(m, n, gen.approval_p, esize)
                                     : gen_ranked_uniform(m, n, esize);

        AxiomVerdict verdict;
        nlohmann::json instance;
        if (axiom == "committee-monotonicity") {
            auto pair = adjacent_vectors(m, gen.max_t, rng);
            if (!pair) continue;
            verdict = check_committee_monotonicity(runner, e, pair->first, pair->second, opt);
            instance = {{"vector_small", pair->first.sizes}, {"vector_big", pair->second.sizes}};
        } else if (axiom == "consistency") {
            std::uint64_t esize2 = rng();
            Election e2 = runner.approval ? gen_approval_uniform(m, n, gen.approval_p, esize2)
                                          : gen_ranked_uniform(m, n, esize2);
            StageVector v = random_stage_vector(m, gen.max_t, rng);
            verdict = check_consistency(runner, e, e2, v, opt);
            instance = {{"vector", v.sizes}, {"election2", election_to_json(e2)}};
        } else if (axiom == "solid-coalition" || axiom == "candidate-monotonicity" ||
                   axiom == "justified-representation" || axiom == "jr" ||
                   axiom == "pareto-efficiency" || axiom == "pareto") {
            StageVector v = random_stage_vector(m, gen.max_t, rng);
            instance = {{"vector", v.sizes}};
            if (axiom == "solid-coalition") {
                verdict = check_solid_coalition(runner, e, v, opt);
            } else if (axiom == "candidate-monotonicity") {
                verdict = check_candidate_monotonicity(runner, e, v, opt);
            } else {
                int k = v.sizes.back();
                verdict.holds = true;
                for (const auto& S : runner.run(e, v).finals) {
                    verdict = (axiom == "pareto-efficiency" || axiom == "pareto")
                                  ? check_pareto_efficiency(e, S, k, opt)
                                  : check_justified_representation(e, S, k, opt);
                    if (!verdict.holds) break;
                }
            }
        } else {
            throw UsageError("unknown axiom: " + axiom);
        }

        if (!verdict.holds) {
            outcome.witness = {{"trial", trial},
                               {"axiom", verdict.axiom},
                               {"election", election_to_json(e)},
                               {"instance", instance},
                               {"witness", verdict.witness}};
            return outcome;
        }
    }
    return outcome;
}

}  // namespace msv
