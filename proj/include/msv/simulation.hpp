#pragma once

#include "msv/multistage.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace msv {

struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

// Euclidean two-stage sweep configuration. Defaults are the desk scale
// (m = 30, n = 60); the full-scale experiment uses 80 Gaussian + 120
// uniform candidates, 400 voters, k2 = 20.
struct SimConfig {
    int n_gauss = 12;
    int n_uniform = 18;
    Point2D gauss_center{1.0, 0.0};
    double gauss_sigma = 0.5;
    double box_min = -2.0, box_max = 1.0;  // uniform candidates on [min,max]^2
    int n_voters = 60;
    double disc_radius = 2.0;
    int k2 = 4;
    std::vector<int> k1_values;  // defaults to k2..m when empty
    int trials = 50;
    std::uint64_t seed = 42;
    std::string rule = "l1:plu";

    int m() const { return n_gauss + n_uniform; }
    void validate() const;
};

struct TrialRecord {
    int k1 = 0;
    int trial = 0;
    Committee committee;   // size k2, candidate indices
    Rational score;        // under the last effective stage's (m', k2) context
    Rational gini;
};

struct Aggregate {
    int k1 = 0;
    double mean_score = 0, std_score = 0;
    double mean_gini = 0, std_gini = 0;
};

struct SweepResult {
    std::vector<TrialRecord> records;  // sorted by (k1, trial)
    std::vector<Aggregate> aggregates;  // one per k1, ascending
};

std::uint64_t derived_seed(std::uint64_t seed, int k1, int trial);

void sample_instance(const SimConfig& cfg, std::uint64_t seed,
                     std::vector<Point2D>& candidates, std::vector<Point2D>& voters);

// Each voter ranks candidates by increasing squared distance, ties broken
// by candidate index. Labels are the candidate indices as strings.
Election profile_from_points(const std::vector<Point2D>& candidates,
                             const std::vector<Point2D>& voters);

// Quadrant-count dispersion G = sum_ij |n_i - n_j| / (2 sum_ij n_i) with
// quadrants (x>=0,y>=0), (x<0,y>=0), (x<0,y<0), (x>=0,y<0).
Rational gini_quadrants(const std::vector<Point2D>& winners);

SweepResult run_sweep(const SimConfig& cfg, const MultiStageOptions& opt = {});

void emit_csv(const std::vector<TrialRecord>& records, const std::string& path);
// metric is "score" or "gini"
void emit_svg(const std::vector<Aggregate>& aggregates, const std::string& metric,
              const std::string& path);

}  // namespace msv
