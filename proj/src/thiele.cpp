#include "msv/thiele.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <memory>
#include <mutex>

namespace msv {

OmegaFunction omega_av() {
    return {"av", [](int x) { return Rational(x); }};
}

OmegaFunction omega_pav() {
    auto memo = std::make_shared<std::vector<Rational>>(1, Rational(0));
    auto lock = std::make_shared<std::mutex>();
    return {"pav", [memo, lock](int x) {
                std::lock_guard<std::mutex> guard(*lock);
                while (static_cast<int>(memo->size()) <= x)
                    memo->push_back(memo->back() +
                                    Rational(1, static_cast<int>(memo->size())));
                return (*memo)[x];
            }};
}

OmegaFunction omega_acc() {
    return {"acc", [](int x) { return Rational(x > 0 ? 1 : 0); }};
}

OmegaFunction omega_convex() {
    return {"convex", [](int x) { return Rational(x > 0 ? 2 * x - 1 : 0); }};
}

OmegaFunction omega_table(std::vector<Rational> values, std::string name) {
    if (values.empty() || values[0] != 0) throw UsageError("omega table must start at omega(0)=0");
    for (size_t i = 1; i < values.size(); ++i)
        if (values[i] < values[i - 1]) throw UsageError("omega table must be nondecreasing");
    auto shared = std::make_shared<std::vector<Rational>>(std::move(values));
    return {std::move(name), [shared](int x) {
                if (x < 0 || x >= static_cast<int>(shared->size()))
                    throw UsageError("omega undefined at " + std::to_string(x));
                return (*shared)[x];
            }};
}

OmegaFunction load_omega_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open omega table file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& ex) {
        throw ParseError(std::string("malformed JSON: ") + ex.what());
    }
    std::vector<Rational> values;
    for (const auto& s : doc.at("values")) {
        if (s.is_number_integer())
            values.push_back(Rational(s.get<std::int64_t>()));
        else
            values.push_back(parse_rational(s.get<std::string>()));
    }
    return omega_table(std::move(values), "table:" + path);
}

Rational thiele_score(const OmegaFunction& omega, const Election& e, const Committee& S) {
    if (!e.is_approval()) throw UsageError("Thiele rules need an approval profile");
    std::vector<bool> in_s(e.m(), false);
    for (int c : S) in_s[c] = true;
    Rational out;
    for (const auto& b : e.approval) {
        int hits = 0;
        for (int c : b.approved)
            if (in_s[c]) ++hits;
        out += Rational(b.weight) * omega.eval(hits);
    }
    return out;
}

namespace {

CombinationScorer make_scorer(const OmegaFunction& omega, const Election& e,
                              const Committee& pool, std::vector<Rational>& omega_vals,
                              std::vector<std::pair<std::vector<int>, std::int64_t>>& ballots) {
    int mp = static_cast<int>(pool.size());
    std::vector<int> pool_index(e.m(), -1);
    for (int i = 0; i < mp; ++i) pool_index[pool[i]] = i;

    // per-ballot membership bitmaps over pool indices, merged by weight
    std::map<std::vector<int>, std::int64_t> merged;
    for (const auto& b : e.approval) {
        std::vector<int> mask(mp, 0);
        for (int c : b.approved)
            if (pool_index[c] >= 0) mask[pool_index[c]] = 1;
        merged[mask] += b.weight;
    }
    ballots.assign(merged.begin(), merged.end());
    omega_vals.resize(mp + 1);
    for (int x = 0; x <= mp; ++x) omega_vals[x] = omega.eval(x);

    return [&ballots, &omega_vals](const std::vector<int>& comb) {
        Rational s;
        for (const auto& [mask, w] : ballots) {
            int hits = 0;
            for (int i : comb) hits += mask[i];
            s += Rational(w) * omega_vals[hits];
        }
        return s;
    };
}

Committee to_committee(const std::vector<int>& pool_indices, const Committee& pool) {
    Committee out;
    out.reserve(pool_indices.size());
    for (int i : pool_indices) out.push_back(pool[i]);
    return out;  // pool is sorted, so pool-index order is already sorted
}

}  // namespace

WinnerSet thiele_winners(const OmegaFunction& omega, const Election& e,
                         const Committee& pool, int k, const EnumOptions& opt) {
    if (!e.is_approval()) throw UsageError("Thiele rules need an approval profile");
    int mp = static_cast<int>(pool.size());
    if (k < 1 || k > mp) throw UsageError("k out of range for pool");
    std::vector<Rational> omega_vals;
    std::vector<std::pair<std::vector<int>, std::int64_t>> ballots;
    auto scorer = make_scorer(omega, e, pool, omega_vals, ballots);
    ArgmaxResult res = opt.parallel ? argmax_combinations(mp, k, scorer, opt.cap, true)
                                    : argmax_combinations_serial(mp, k, scorer, opt.cap, true);
    WinnerSet out;
    out.max_score = res.best_score;
    for (const auto& comb : res.best) out.committees.push_back(to_committee(comb, pool));
    return out;
}

WinnerSet thiele_winners(const OmegaFunction& omega, const Election& e, int k,
                         const EnumOptions& opt) {
    if (k >= e.m()) throw UsageError("k must be below m");
    return thiele_winners(omega, e, full_pool(e), k, opt);
}

MultiStageResult run_multistage_thiele(const OmegaFunction& omega, const Election& e,
                                       const StageVector& v, const MultiStageOptions& opt) {
    auto eval = [&omega, &opt](const Election& el, const Committee& pool, int k, int) {
        return thiele_winners(omega, el, pool, k, opt.enumeration);
    };
    return run_multistage_generic(eval, e, v, opt);
}

bool is_linear_omega(const OmegaFunction& omega, int upto) {
    if (upto < 2) throw UsageError("is_linear_omega needs upto >= 2");
    Rational first = omega.eval(1) - omega.eval(0);
    for (int i = 2; i <= upto; ++i)
        if (omega.eval(i) - omega.eval(i - 1) != first) return false;
    return true;
}

}  // namespace msv
