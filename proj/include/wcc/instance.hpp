#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wcc/rational.hpp"

namespace wcc {

enum class Regime { General, Probability, ProbabilityAndTriangle };

std::string_view regime_name(Regime regime);
Regime regime_from_name(std::string_view name);

// Index of the unordered pair (i, j), i < j, in lexicographic order.
inline size_t pair_index(int i, int j, int n) {
    return static_cast<size_t>(i) * n - static_cast<size_t>(i) * (i + 1) / 2 + (j - i - 1);
}

// Complete weighted instance: (w+, w-) for every unordered pair, plus the
// declared constraint regime. Immutable after construction; the constructor
// validates nonnegativity and the declared regime's constraints.
class WeightedInstance {
public:
    WeightedInstance(int n, Regime regime,
                     std::vector<std::pair<Rational, Rational>> weights);

    static WeightedInstance parse(std::string_view text);
    std::string serialize() const;

    int n() const { return n_; }
    Regime regime() const { return regime_; }
    size_t pair_count() const { return weights_.size(); }

    // Symmetric lookups; (i, j) and (j, i) return the same value.
    const Rational& w_plus(int i, int j) const { return weights_[index(i, j)].first; }
    const Rational& w_minus(int i, int j) const { return weights_[index(i, j)].second; }

    bool operator==(const WeightedInstance& other) const = default;

private:
    size_t index(int i, int j) const;
    void validate() const;

    int n_;
    Regime regime_;
    std::vector<std::pair<Rational, Rational>> weights_;
};

// Partition of {0, ..., n-1} stored as per-vertex labels. Labels are
// canonicalized to first-appearance order starting at 0, so clusterings
// compare by value.
class Clustering {
public:
    Clustering() = default;
    explicit Clustering(std::vector<int> labels);

    static Clustering parse(std::string_view text);
    std::string serialize() const;

    int n() const { return static_cast<int>(labels_.size()); }
    int label(int v) const { return labels_[v]; }
    int cluster_count() const { return cluster_count_; }
    const std::vector<int>& labels() const { return labels_; }

    bool operator==(const Clustering& other) const { return labels_ == other.labels_; }

private:
    std::vector<int> labels_;
    int cluster_count_ = 0;
};

// Pair labeling x: 0 means same cluster, 1 different; fractional values in
// [0, 1] are allowed for objective evaluation.
class XLabeling {
public:
    XLabeling(int n, Rational fill = Rational(0));

    int n() const { return n_; }
    const Rational& x(int i, int j) const;
    void set(int i, int j, Rational value);

private:
    int n_;
    std::vector<Rational> values_;
};

Rational clustering_cost(const WeightedInstance& inst, const Clustering& c);
Rational lp_objective_integral(const WeightedInstance& inst, const XLabeling& x);
XLabeling labeling_from_clustering(const Clustering& c);

}  // namespace wcc
