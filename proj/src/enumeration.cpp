#include "msv/enumeration.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace msv {

std::uint64_t choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        // r * num / i is always integral at this point
        if (r > std::numeric_limits<std::uint64_t>::max() / num)
            throw CapExceededError("binomial coefficient overflows 64 bits");
        r = r * num / i;
    }
    return r;
}

std::uint64_t default_enum_cap() {
    if (const char* env = std::getenv("MSV_ENUM_CAP")) {
        char* end = nullptr;
        std::uint64_t v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1000000;
}

std::vector<int> unrank_combination(int n, int k, std::uint64_t r) {
    std::vector<int> out;
    out.reserve(k);
    int c = 0;
    for (int slot = 0; slot < k; ++slot) {
        while (true) {
            std::uint64_t block = choose(n - c - 1, k - slot - 1);
            if (r < block) break;
            r -= block;
            ++c;
        }
        out.push_back(c++);
    }
    return out;
}

bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

namespace {

void check_cap(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) throw UsageError("combination size out of range");
    if (choose(n, k) > cap)
        throw CapExceededError("C(" + std::to_string(n) + "," + std::to_string(k) +
                               ") exceeds the enumeration cap " + std::to_string(cap));
}

// Scans ranks [lo, hi); best committees are appended in rank order.
ArgmaxResult scan_range(int n, int k, const CombinationScorer& scorer,
                        std::uint64_t lo, std::uint64_t hi, bool all_ties) {
    ArgmaxResult res;
    if (lo >= hi) return res;
    std::vector<int> comb = unrank_combination(n, k, lo);
    for (std::uint64_t r = lo; r < hi; ++r) {
        Rational s = scorer(comb);
        if (res.best.empty() || s > res.best_score) {
            res.best_score = s;
            res.best.clear();
            res.best.push_back(comb);
        } else if (all_ties && s == res.best_score) {
            res.best.push_back(comb);
        }
        if (r + 1 < hi) next_combination(comb, n);
    }
    return res;
}

}  // namespace

ArgmaxResult argmax_combinations_serial(int n, int k, const CombinationScorer& scorer,
                                        std::uint64_t cap, bool all_ties) {
    check_cap(n, k, cap);
    return scan_range(n, k, scorer, 0, choose(n, k), all_ties);
}

ArgmaxResult argmax_combinations(int n, int k, const CombinationScorer& scorer,
                                 std::uint64_t cap, bool all_ties) {
    check_cap(n, k, cap);
    std::uint64_t total = choose(n, k);
#ifdef _OPENMP
    int nthreads = omp_get_max_threads();
#else
    int nthreads = 1;
#endif
    if (nthreads <= 1 || total < 1024)
        return scan_range(n, k, scorer, 0, total, all_ties);

    std::vector<ArgmaxResult> parts(nthreads);
#ifdef _OPENMP
#pragma omp parallel num_threads(nthreads)
    {
        int t = omp_get_thread_num();
        std::uint64_t lo = total * t / nthreads;
        std::uint64_t hi = total * (t + 1) / nthreads;
        parts[t] = scan_range(n, k, scorer, lo, hi, all_ties);
    }
#endif
    ArgmaxResult res;
    for (auto& p : parts) {
        if (p.best.empty()) continue;
        if (res.best.empty() || p.best_score > res.best_score) {
            res.best_score = p.best_score;
            res.best = std::move(p.best);
        } else if (all_ties && p.best_score == res.best_score) {
            res.best.insert(res.best.end(), p.best.begin(), p.best.end());
        }
    }
    if (!all_ties && res.best.size() > 1) res.best.resize(1);
    return res;
}

}  // namespace msv
