#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wcc/pivot.hpp"

namespace wcc {

enum class Family { UniformProbability, MetricTriangle };

struct GeneratorConfig {
    int n = 0;
    uint64_t seed = 0;
    Family family = Family::UniformProbability;
};

// Each pair draws w- uniformly from {0, 1/1000, ..., 1}; w+ = 1 - w-.
WeightedInstance gen_probability_instance(const GeneratorConfig& cfg);

// Vertices are random points on a 1000x1000 grid in the unit square;
// w-(i,j) = min(1, Manhattan distance). The truncated metric keeps every
// triangle inequality, which the constructor re-validates.
WeightedInstance gen_triangle_instance(const GeneratorConfig& cfg);

struct RatioRecord {
    uint64_t instance_seed = 0;
    Rational opt_cost;
    Rational mean_cost;          // exact mean of per-trial costs
    Rational mean_controlled;    // exact per-trial decomposition means
    Rational mean_uncontrolled;
    double std_error = 0.0;
    int trials = 0;
    double empirical_ratio = 0.0;  // mean/opt; meaningless when zero_opt
    bool zero_opt = false;
};

struct RatioReport {
    Mode mode;
    Family family;
    int n = 0;
    int trials = 0;
    uint64_t base_seed = 0;
    std::vector<RatioRecord> records;

    std::string to_text() const;
};

// Monte Carlo study: per generated instance, the exhaustive optimum versus
// the empirical mean pivot cost over `trials` seeded runs, with the
// controlled/uncontrolled split. Instance i is generated with seed
// base_seed + i; its trial t runs with seed splitmix64(base_seed + i) + t.
RatioReport ratio_experiment(int instances, int n, int trials, Mode mode, uint64_t base_seed);

// Pure seeded pair-to-weight map for benchmark runs: w- in {0,...,999}/1000,
// never materialized. Symmetric by pair normalization.
struct WeightOracle {
    uint64_t seed = 0;

    // w- numerator in thousandths.
    int w_minus_millis(int i, int j) const;
    Rational w_minus(int i, int j) const { return make_rational(w_minus_millis(i, j), 1000); }
};

// One oracle-driven run; returns the number of (pivot, candidate) membership
// evaluations. w_minus_millis maps a vertex pair to thousandths in [0, 1000].
long long count_membership_tests(int n, Mode mode, uint64_t seed,
                                 const std::function<int(int, int)>& w_minus_millis);

struct ScalingRow {
    int n = 0;
    double mean_membership_tests = 0.0;
    double mean_wall_ms = 0.0;
};

struct ScalingReport {
    Mode mode;
    int trials = 0;
    uint64_t seed = 0;
    std::vector<ScalingRow> rows;
    std::vector<double> doubling_ratios;  // rows[i+1].tests / rows[i].tests

    std::string to_text() const;
};

// Counts (pivot, candidate) membership evaluations per run under oracle
// weight access; trial t uses seed + t.
ScalingReport scaling_benchmark(const std::vector<int>& sizes, Mode mode, int trials,
                                uint64_t seed);

}  // namespace wcc
