#include "msv/simulation.hpp"

#include "msv/rules.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

namespace msv {

void SimConfig::validate() const {
    if (n_gauss < 0 || n_uniform < 0 || m() < 1) throw UsageError("no candidates configured");
    if (n_voters < 1) throw UsageError("need at least one voter");
    if (trials < 1) throw UsageError("need at least one trial");
    if (k2 < 1 || k2 > m()) throw UsageError("k2 out of range");
    if (k1_values.empty()) throw UsageError("no k1 values configured");
    for (int k1 : k1_values) {
        if (k1 < k2) throw UsageError("k1 below k2: " + std::to_string(k1));
        if (k1 > m()) throw UsageError("k1 above candidate count: " + std::to_string(k1));
    }
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derived_seed(std::uint64_t seed, int k1, int trial) {
    return seed ^ splitmix64(splitmix64(static_cast<std::uint64_t>(k1)) +
                             static_cast<std::uint64_t>(trial));
}

void sample_instance(const SimConfig& cfg, std::uint64_t seed,
                     std::vector<Point2D>& candidates, std::vector<Point2D>& voters) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gx(cfg.gauss_center.x, cfg.gauss_sigma);
    std::normal_distribution<double> gy(cfg.gauss_center.y, cfg.gauss_sigma);
    std::uniform_real_distribution<double> box(cfg.box_min, cfg.box_max);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    candidates.clear();
    candidates.reserve(cfg.m());
    for (int i = 0; i < cfg.n_gauss; ++i) {
        double x = gx(rng);
        double y = gy(rng);
        candidates.push_back({x, y});
    }
    for (int i = 0; i < cfg.n_uniform; ++i) {
        double x = box(rng);
        double y = box(rng);
        candidates.push_back({x, y});
    }

    voters.clear();
    voters.reserve(cfg.n_voters);
    const double two_pi = 2.0 * std::acos(-1.0);
    for (int i = 0; i < cfg.n_voters; ++i) {
        double r = cfg.disc_radius * std::sqrt(unit(rng));
        double theta = two_pi * unit(rng);
        voters.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
}

Election profile_from_points(const std::vector<Point2D>& candidates,
                             const std::vector<Point2D>& voters) {
    if (candidates.empty() || voters.empty())
        throw UsageError("profile_from_points: empty point set");
    Election e;
    const int m = static_cast<int>(candidates.size());
    for (int i = 0; i < m; ++i) e.labels.push_back(std::to_string(i));
    for (const auto& v : voters) {
        RankedBallot b;
        b.weight = 1;
        b.ranking.resize(m);
        std::iota(b.ranking.begin(), b.ranking.end(), 0);
        std::vector<double> d2(m);
        for (int i = 0; i < m; ++i) {
            double dx = candidates[i].x - v.x;
            double dy = candidates[i].y - v.y;
            d2[i] = dx * dx + dy * dy;
        }
        std::sort(b.ranking.begin(), b.ranking.end(), [&](int a, int c) {
            if (d2[a] != d2[c]) return d2[a] < d2[c];
            return a < c;
        });
        e.ranked.push_back(std::move(b));
    }
    e.validate();
    e.canonicalize();
    return e;
}

Rational gini_quadrants(const std::vector<Point2D>& winners) {
    if (winners.empty()) throw UsageError("gini_quadrants: empty winner set");
    long long n[4] = {0, 0, 0, 0};
    for (const auto& p : winners) {
        if (p.x >= 0)
            ++n[p.y >= 0 ? 0 : 3];
        else
            ++n[p.y >= 0 ? 1 : 2];
    }
    long long num = 0, total = 0;
    for (int i = 0; i < 4; ++i) {
        total += n[i];
        for (int j = 0; j < 4; ++j) num += std::llabs(n[i] - n[j]);
    }
    return Rational(num, 8 * total);
}

SweepResult run_sweep(const SimConfig& cfg, const MultiStageOptions& opt) {
    cfg.validate();
    ParsedRule rule = parse_rule_descriptor(cfg.rule);
    if (rule.thiele) throw UsageError("the sweep needs a score-based rule");
    MultiStageScoreRule msr{rule.stages};

    SweepResult out;
    out.records.reserve(cfg.k1_values.size() * static_cast<size_t>(cfg.trials));
    std::vector<int> k1s = cfg.k1_values;
    std::sort(k1s.begin(), k1s.end());
    k1s.erase(std::unique(k1s.begin(), k1s.end()), k1s.end());

    for (int k1 : k1s) {
        StageVector v;
        v.sizes = {k1, cfg.k2};
        v.relaxed = true;
        for (int trial = 0; trial < cfg.trials; ++trial) {
            std::vector<Point2D> cands, voters;
            sample_instance(cfg, derived_seed(cfg.seed, k1, trial), cands, voters);
            Election e = profile_from_points(cands, voters);

            TrialRecord rec;
            rec.k1 = k1;
            rec.trial = trial;
            Committee pool = full_pool(e);
            auto stages = effective_stages(v, e.m());
            Rational score = 0;
            for (const auto& [k, stage_index] : stages) {
                const ScoreRule& sr = stage_rule(msr, stage_index, v.sizes.size());
                WinnerSet ws = stage_winners(sr, e, pool, k, opt.enumeration);
                pool = ws.committees.front();
                score = ws.max_score;
            }
            rec.committee = pool;
            rec.score = score;
            std::vector<Point2D> winner_points;
            for (int c : rec.committee) winner_points.push_back(cands[c]);
            rec.gini = gini_quadrants(winner_points);
            out.records.push_back(std::move(rec));
        }
    }

    for (int k1 : k1s) {
        Aggregate agg;
        agg.k1 = k1;
        std::vector<double> scores, ginis;
        for (const auto& r : out.records)
            if (r.k1 == k1) {
                scores.push_back(to_double(r.score));
                ginis.push_back(to_double(r.gini));
            }
        auto stats = [](const std::vector<double>& xs, double& mean, double& sd) {
            mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
            double var = 0;
            for (double x : xs) var += (x - mean) * (x - mean);
            sd = std::sqrt(var / xs.size());
        };
        stats(scores, agg.mean_score, agg.std_score);
        stats(ginis, agg.mean_gini, agg.std_gini);
        out.aggregates.push_back(agg);
    }
    return out;
}

void emit_csv(const std::vector<TrialRecord>& records, const std::string& path) {
    if (records.empty()) throw UsageError("emit_csv: no records");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << "k1,trial,score,gini,committee\n";
    for (const auto& r : records) {
        out << r.k1 << ',' << r.trial << ',' << to_decimal_string(r.score, 6) << ','
            << to_decimal_string(r.gini, 6) << ',';
        for (size_t i = 0; i < r.committee.size(); ++i) {
            if (i) out << ';';
            out << r.committee[i];
        }
        out << '\n';
    }
    if (!out) throw Error("write failed: " + path);
}

void emit_svg(const std::vector<Aggregate>& aggregates, const std::string& metric,
              const std::string& path) {
    if (aggregates.empty()) throw UsageError("emit_svg: no aggregates");
    bool score = metric == "score";
    if (!score && metric != "gini") throw UsageError("unknown metric: " + metric);

    const double width = 640, height = 400, pad = 50;
    double xmin = aggregates.front().k1, xmax = aggregates.back().k1;
    if (xmax == xmin) xmax = xmin + 1;
    double ymin = 1e300, ymax = -1e300;
    auto mean_of = [&](const Aggregate& a) { return score ? a.mean_score : a.mean_gini; };
    auto std_of = [&](const Aggregate& a) { return score ? a.std_score : a.std_gini; };
    for (const auto& a : aggregates) {
        ymin = std::min(ymin, mean_of(a) - std_of(a));
        ymax = std::max(ymax, mean_of(a) + std_of(a));
    }
    if (ymax == ymin) ymax = ymin + 1;
    auto X = [&](double k1) { return pad + (k1 - xmin) / (xmax - xmin) * (width - 2 * pad); };
    auto Y = [&](double v) { return height - pad - (v - ymin) / (ymax - ymin) * (height - 2 * pad); };

    std::ostringstream band, mean;
    for (const auto& a : aggregates)
        band << (band.tellp() ? " L" : "M") << ' ' << X(a.k1) << ' '
             << Y(mean_of(a) + std_of(a));
    for (auto it = aggregates.rbegin(); it != aggregates.rend(); ++it)
        band << " L " << X(it->k1) << ' ' << Y(mean_of(*it) - std_of(*it));
    band << " Z";
    for (const auto& a : aggregates)
        mean << (mean.tellp() ? " L" : "M") << ' ' << X(a.k1) << ' ' << Y(mean_of(a));

    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open for writing: " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "  <path d=\"" << band.str()
        << "\" fill=\"#88cc88\" fill-opacity=\"0.4\" stroke=\"none\"/>\n"
        << "  <path d=\"" << mean.str()
        << "\" fill=\"none\" stroke=\"#227722\" stroke-width=\"2\"/>\n"
        << "  <text x=\"" << width / 2 << "\" y=\"" << height - 10
        << "\" text-anchor=\"middle\" font-size=\"14\">k1</text>\n"
        << "  <text x=\"15\" y=\"" << height / 2 << "\" text-anchor=\"middle\" font-size=\"14\""
        << " transform=\"rotate(-90 15 " << height / 2 << ")\">mean " << metric
        << " (+/- 1 std)</text>\n"
        << "</svg>\n";
    if (!out) throw Error("write failed: " + path);
}

}  // namespace msv
