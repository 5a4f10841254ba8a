#include "wcc/pivot.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "wcc/rng.hpp"

namespace wcc {

namespace {

void require_mode(const WeightedInstance& inst, Mode mode) {
    if (mode == Mode::Probability) {
        if (inst.regime() == Regime::General)
            throw Error("probability mode requires a probability-regime instance");
    } else {
        if (inst.regime() != Regime::ProbabilityAndTriangle)
            throw Error("triangle mode requires a probability-triangle instance");
    }
}

}  // namespace

QuickClusterResult quick_cluster(const WeightedInstance& inst, Mode mode, uint64_t seed) {
    require_mode(inst, mode);
    SeededRng rng(seed);
    int n = inst.n();
    std::vector<int> remaining(n);
    for (int v = 0; v < n; ++v) remaining[v] = v;

    RunTrace trace;
    trace.n = n;
    std::vector<int> labels(n, 0);
    int next_cluster = 0;

    while (!remaining.empty()) {
        TraceStep step;
        step.remaining_before = remaining;
        step.pivot = remaining[rng.index_below(remaining.size())];
        for (int u : remaining) {
            if (u == step.pivot) continue;
            if (rng.bernoulli(f_plus(inst.w_minus(u, step.pivot), mode)))
                step.joined.push_back(u);
        }
        labels[step.pivot] = next_cluster;
        for (int u : step.joined) labels[u] = next_cluster;
        ++next_cluster;

        std::vector<int> survivors;
        survivors.reserve(remaining.size());
        for (int u : remaining) {
            if (u == step.pivot) continue;
            if (!std::binary_search(step.joined.begin(), step.joined.end(), u))
                survivors.push_back(u);
        }
        remaining = std::move(survivors);
        trace.steps.push_back(std::move(step));
    }

    return {Clustering(std::move(labels)), std::move(trace)};
}

Clustering ailon_pivot(const WeightedInstance& inst, uint64_t seed) {
    if (inst.regime() == Regime::General)
        throw Error("pivot baseline requires a probability-regime instance");
    SeededRng rng(seed);
    int n = inst.n();
    std::vector<int> remaining(n);
    for (int v = 0; v < n; ++v) remaining[v] = v;

    std::vector<int> labels(n, 0);
    int next_cluster = 0;
    while (!remaining.empty()) {
        int pivot = remaining[rng.index_below(remaining.size())];
        std::vector<int> survivors;
        survivors.reserve(remaining.size());
        labels[pivot] = next_cluster;
        for (int u : remaining) {
            if (u == pivot) continue;
            if (inst.w_plus(u, pivot) >= inst.w_minus(u, pivot))
                labels[u] = next_cluster;
            else
                survivors.push_back(u);
        }
        ++next_cluster;
        remaining = std::move(survivors);
    }
    return Clustering(std::move(labels));
}

namespace {

// Depth-first search over restricted-growth strings with incremental exact
// costs and a lower bound on the unassigned remainder.
struct PartitionSearch {
    const WeightedInstance& inst;
    int n;
    std::vector<int> labels;
    std::vector<std::vector<int>> members;  // per open cluster
    std::vector<Rational> row_plus;         // sum_{u<v} w+(u,v)
    std::vector<Rational> suffix_lb;        // sum over t>v of sum_{u<t} min(w+,w-)
    std::optional<Rational> best_cost;
    std::vector<int> best_labels;

    explicit PartitionSearch(const WeightedInstance& wi) : inst(wi), n(wi.n()) {
        labels.assign(n, -1);
        row_plus.assign(n, Rational(0));
        std::vector<Rational> row_min(n, Rational(0));
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                row_plus[v] += inst.w_plus(u, v);
                row_min[v] += std::min(inst.w_plus(u, v), inst.w_minus(u, v));
            }
        suffix_lb.assign(n + 1, Rational(0));
        for (int v = n - 1; v >= 0; --v) suffix_lb[v] = suffix_lb[v + 1] + row_min[v];
    }

    void run() {
        if (n == 0) {
            best_cost = Rational(0);
            best_labels = {};
            return;
        }
        Rational zero(0);
        descend(0, zero);
    }

    void descend(int v, const Rational& cost_so_far) {
        if (best_cost && cost_so_far + suffix_lb[v] >= *best_cost) return;
        if (v == n) {
            best_cost = cost_so_far;
            best_labels = labels;
            return;
        }
        int open = static_cast<int>(members.size());
        for (int c = 0; c <= open && c <= v; ++c) {
            Rational cost = cost_so_far + row_plus[v];
            if (c < open)
                for (int u : members[c])
                    cost += inst.w_minus(u, v) - inst.w_plus(u, v);
            if (c == open) members.emplace_back();
            members[c].push_back(v);
            labels[v] = c;
            descend(v + 1, cost);
            members[c].pop_back();
            if (c == open) members.pop_back();
        }
        labels[v] = -1;
    }
};

}  // namespace

OptimumResult exact_optimal(const WeightedInstance& inst, int max_n) {
    if (inst.n() > max_n)
        throw Error("exact optimum guard: n = " + std::to_string(inst.n()) + " exceeds " +
                    std::to_string(max_n));
    PartitionSearch search(inst);
    search.run();
    return {Clustering(std::move(search.best_labels)), *search.best_cost};
}

Clustering RunTrace::clustering() const {
    std::vector<int> labels(n, -1);
    int cluster = 0;
    for (const TraceStep& step : steps) {
        labels.at(step.pivot) = cluster;
        for (int u : step.joined) labels.at(u) = cluster;
        ++cluster;
    }
    for (int v = 0; v < n; ++v)
        if (labels[v] < 0) throw Error("trace does not cover vertex " + std::to_string(v));
    return Clustering(std::move(labels));
}

CostDecomposition decompose_costs(const WeightedInstance& inst, const RunTrace& trace) {
    if (trace.n != inst.n()) throw Error("trace size mismatch");
    int n = inst.n();
    std::vector<int> removal_step(n, -1);
    // Validate the chain: each step removes exactly its cluster.
    std::vector<int> expected(n);
    for (int v = 0; v < n; ++v) expected[v] = v;
    for (size_t t = 0; t < trace.steps.size(); ++t) {
        const TraceStep& step = trace.steps[t];
        if (step.remaining_before != expected) throw Error("incomplete trace: bad remaining set");
        std::vector<int> removed = step.joined;
        removed.push_back(step.pivot);
        std::sort(removed.begin(), removed.end());
        for (int u : removed) {
            if (removal_step[u] != -1) throw Error("incomplete trace: vertex removed twice");
            removal_step[u] = static_cast<int>(t);
        }
        std::vector<int> next;
        next.reserve(expected.size());
        for (int u : expected)
            if (!std::binary_search(removed.begin(), removed.end(), u)) next.push_back(u);
        expected = std::move(next);
    }
    if (!expected.empty()) throw Error("incomplete trace: vertices left unassigned");

    CostDecomposition d{Rational(0), Rational(0)};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int last_common = std::min(removal_step[i], removal_step[j]);
            bool same_cluster = removal_step[i] == removal_step[j];
            const Rational& cost = same_cluster ? inst.w_minus(i, j) : inst.w_plus(i, j);
            int pivot = trace.steps[last_common].pivot;
            if (pivot == i || pivot == j)
                d.controlled += cost;
            else
                d.uncontrolled += cost;
        }
    return d;
}

std::string RunTrace::serialize() const {
    std::ostringstream out;
    out << "trace v1\n";
    out << "n " << n << "\n";
    for (const TraceStep& step : steps) {
        out << "step " << step.pivot;
        for (int u : step.joined) out << " " << u;
        out << "\n";
    }
    return out.str();
}

RunTrace RunTrace::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != "trace v1") throw Error("bad trace header");
    long long n;
    std::string key;
    if (!std::getline(in, line)) throw Error("missing trace vertex count");
    std::istringstream nline(line);
    nline >> key >> n;
    if (key != "n" || nline.fail() || n < 0) throw Error("bad trace vertex count");

    RunTrace trace;
    trace.n = static_cast<int>(n);
    std::vector<int> remaining(trace.n);
    for (int v = 0; v < trace.n; ++v) remaining[v] = v;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        ls >> key;
        if (key != "step") throw Error("bad trace line '" + line + "'");
        TraceStep step;
        step.remaining_before = remaining;
        if (!(ls >> step.pivot)) throw Error("bad trace line '" + line + "'");
        int u;
        while (ls >> u) step.joined.push_back(u);
        std::sort(step.joined.begin(), step.joined.end());
        std::vector<int> removed = step.joined;
        removed.push_back(step.pivot);
        std::sort(removed.begin(), removed.end());
        std::vector<int> next;
        for (int r : remaining)
            if (!std::binary_search(removed.begin(), removed.end(), r)) next.push_back(r);
        if (remaining.size() - next.size() != removed.size())
            throw Error("trace step removes a vertex not in the remaining set");
        remaining = std::move(next);
        trace.steps.push_back(std::move(step));
    }
    return trace;
}

}  // namespace wcc
