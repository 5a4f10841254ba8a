#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wcc/instance.hpp"
#include "wcc/rounding.hpp"

namespace wcc {

// One pivoting step: the cluster formed is {pivot} plus joined, all drawn
// from remaining_before. Vertices in joined are in ascending order.
struct TraceStep {
    int pivot;
    std::vector<int> joined;
    std::vector<int> remaining_before;
};

// Complete record of a run; the clusters formed at the steps partition the
// vertex set.
struct RunTrace {
    int n = 0;
    std::vector<TraceStep> steps;

    std::string serialize() const;
    static RunTrace parse(std::string_view text);
    Clustering clustering() const;
};

struct CostDecomposition {
    Rational controlled;
    Rational uncontrolled;
};

struct QuickClusterResult {
    Clustering clustering;
    RunTrace trace;
};

struct OptimumResult {
    Clustering clustering;
    Rational cost;
};

inline constexpr int kDefaultExactGuard = 13;  // Bell(13) ~ 27.6M partitions

// Randomized pivot clustering. Each step consumes one draw for the pivot
// (index into the remaining vertices, kept ascending) and one draw per other
// remaining vertex, tested in ascending order, joined iff draw < f+(w-).
// Pure function of (instance, mode, seed).
QuickClusterResult quick_cluster(const WeightedInstance& inst, Mode mode, uint64_t seed);

// Prior combinatorial pivot baseline: same pivot selection, but membership
// is deterministic: join iff w+ >= w-.
Clustering ailon_pivot(const WeightedInstance& inst, uint64_t seed);

// Exhaustive optimum over all set partitions (restricted-growth order,
// lexicographically smallest minimizer). Guarded by max_n.
OptimumResult exact_optimal(const WeightedInstance& inst, int max_n = kDefaultExactGuard);

// Splits the traced run's realized cost by whether each pair's last common
// step was pivoted by one of the pair (controlled) or a third vertex
// (uncontrolled). controlled + uncontrolled equals the run's total cost.
CostDecomposition decompose_costs(const WeightedInstance& inst, const RunTrace& trace);

}  // namespace wcc
