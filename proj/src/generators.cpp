#include "msv/generators.hpp"

#include <algorithm>
#include <numeric>

namespace msv {

std::vector<std::string> default_labels(int m) {
    std::vector<std::string> out;
    for (int i = 0; i < m; ++i) {
        if (m <= 26)
            out.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            out.push_back("c" + std::to_string(i));
    }
    return out;
}

Election gen_ranked_uniform(int m, int n, std::uint64_t seed) {
    if (m < 1 || n < 1) throw UsageError("generator needs m >= 1 and n >= 1");
    std::mt19937_64 rng(seed);
    Election e;
    e.labels = default_labels(m);
    for (int v = 0; v < n; ++v) {
        RankedBallot b;
        b.ranking.resize(m);
        std::iota(b.ranking.begin(), b.ranking.end(), 0);
        std::shuffle(b.ranking.begin(), b.ranking.end(), rng);
        e.ranked.push_back(std::move(b));
    }
    e.canonicalize();
    return e;
}

Election gen_approval_uniform(int m, int n, double p, std::uint64_t seed) {
    if (m < 1 || n < 1) throw UsageError("generator needs m >= 1 and n >= 1");
    if (p < 0.0 || p > 1.0) throw UsageError("approval probability must be in [0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> pick(0, m - 1);
    Election e;
    e.labels = default_labels(m);
    for (int v = 0; v < n; ++v) {
        ApprovalBallot b;
        for (int c = 0; c < m; ++c)
            if (coin(rng) < p) b.approved.push_back(c);
        if (b.approved.empty()) b.approved.push_back(pick(rng));
        e.approval.push_back(std::move(b));
    }
    e.canonicalize();
    return e;
}

StageVector random_stage_vector(int m, int max_t, std::mt19937_64& rng) {
    if (m < 2) throw UsageError("stage vector needs m >= 2");
    max_t = std::min(max_t, m - 1);
    std::uniform_int_distribution<int> pick_t(1, max_t);
    int t = pick_t(rng);
    std::vector<int> sizes(m - 1);
    std::iota(sizes.begin(), sizes.end(), 1);  // 1 .. m-1
    std::shuffle(sizes.begin(), sizes.end(), rng);
    sizes.resize(t);
    std::sort(sizes.rbegin(), sizes.rend());
    StageVector v;
    v.sizes = sizes;
    return v;
}

}  // namespace msv
