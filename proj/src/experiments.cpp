#include "wcc/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "wcc/rng.hpp"

namespace wcc {

WeightedInstance gen_probability_instance(const GeneratorConfig& cfg) {
    if (cfg.family != Family::UniformProbability) throw Error("wrong family for generator");
    if (cfg.n < 0) throw Error("negative vertex count");
    SeededRng rng(cfg.seed);
    size_t pairs = cfg.n > 0 ? static_cast<size_t>(cfg.n) * (cfg.n - 1) / 2 : 0;
    std::vector<std::pair<Rational, Rational>> weights;
    weights.reserve(pairs);
    for (int i = 0; i < cfg.n; ++i)
        for (int j = i + 1; j < cfg.n; ++j) {
            Rational wm = make_rational(static_cast<long>(rng.index_below(1001)), 1000);
            weights.emplace_back(1 - wm, wm);
        }
    return WeightedInstance(cfg.n, Regime::Probability, std::move(weights));
}

WeightedInstance gen_triangle_instance(const GeneratorConfig& cfg) {
    if (cfg.family != Family::MetricTriangle) throw Error("wrong family for generator");
    if (cfg.n < 0) throw Error("negative vertex count");
    SeededRng rng(cfg.seed);
    std::vector<std::pair<long, long>> pts(cfg.n);
    for (auto& p : pts) {
        p.first = static_cast<long>(rng.index_below(1000));
        p.second = static_cast<long>(rng.index_below(1000));
    }
    size_t pairs = cfg.n > 0 ? static_cast<size_t>(cfg.n) * (cfg.n - 1) / 2 : 0;
    std::vector<std::pair<Rational, Rational>> weights;
    weights.reserve(pairs);
    for (int i = 0; i < cfg.n; ++i)
        for (int j = i + 1; j < cfg.n; ++j) {
            long dist = std::labs(pts[i].first - pts[j].first) +
                        std::labs(pts[i].second - pts[j].second);
            Rational wm = make_rational(std::min(dist, 1000L), 1000);
            weights.emplace_back(1 - wm, wm);
        }
    return WeightedInstance(cfg.n, Regime::ProbabilityAndTriangle, std::move(weights));
}

RatioReport ratio_experiment(int instances, int n, int trials, Mode mode, uint64_t base_seed) {
    if (n > kDefaultExactGuard) throw Error("ratio experiment needs n within the exact guard");
    if (trials < 100) throw Error("ratio experiment needs at least 100 trials");
    Family family =
        mode == Mode::Probability ? Family::UniformProbability : Family::MetricTriangle;

    RatioReport report;
    report.mode = mode;
    report.family = family;
    report.n = n;
    report.trials = trials;
    report.base_seed = base_seed;

    for (int i = 0; i < instances; ++i) {
        uint64_t inst_seed = base_seed + static_cast<uint64_t>(i);
        GeneratorConfig cfg{n, inst_seed, family};
        WeightedInstance inst = family == Family::UniformProbability
                                    ? gen_probability_instance(cfg)
                                    : gen_triangle_instance(cfg);
        OptimumResult opt = exact_optimal(inst);

        Rational sum(0), sum_sq(0), sum_controlled(0), sum_uncontrolled(0);
        uint64_t trial_base = splitmix64(inst_seed);
        for (int t = 0; t < trials; ++t) {
            QuickClusterResult run = quick_cluster(inst, mode, trial_base + t);
            Rational cost = clustering_cost(inst, run.clustering);
            if (cost < opt.cost)
                throw Error("clustering beat the exhaustive optimum; enumeration bug");
            CostDecomposition split = decompose_costs(inst, run.trace);
            if (split.controlled + split.uncontrolled != cost)
                throw Error("cost decomposition identity violated");
            sum += cost;
            sum_sq += cost * cost;
            sum_controlled += split.controlled;
            sum_uncontrolled += split.uncontrolled;
        }

        RatioRecord rec;
        rec.instance_seed = inst_seed;
        rec.opt_cost = opt.cost;
        rec.trials = trials;
        rec.mean_cost = sum / trials;
        rec.mean_controlled = sum_controlled / trials;
        rec.mean_uncontrolled = sum_uncontrolled / trials;
        if (trials > 1) {
            Rational variance = (sum_sq - sum * sum / trials) / (trials - 1);
            rec.std_error = std::sqrt(to_double(variance) / trials);
        }
        rec.zero_opt = opt.cost == 0;
        rec.empirical_ratio = rec.zero_opt ? 0.0 : to_double(rec.mean_cost / opt.cost);
        report.records.push_back(std::move(rec));
    }
    return report;
}

std::string RatioReport::to_text() const {
    std::ostringstream out;
    out << "ratio-report v1\n";
    out << "mode = " << mode_name(mode) << "\n";
    out << "family = "
        << (family == Family::UniformProbability ? "uniform-probability" : "metric-triangle")
        << "\n";
    out << "n = " << n << "\n";
    out << "trials = " << trials << "\n";
    out << "base_seed = " << base_seed << "\n";
    out << "# exact columns: opt mean_cost mean_controlled mean_uncontrolled; decimal columns "
           "(labeled): ratio stderr\n";
    out << "# instance\topt\tmean_cost\tratio\tstderr\tmean_controlled\tmean_uncontrolled\tflag\n";
    char buf[64];
    for (size_t i = 0; i < records.size(); ++i) {
        const RatioRecord& r = records[i];
        out << i << "\t" << format_rational(r.opt_cost) << "\t" << format_rational(r.mean_cost);
        std::snprintf(buf, sizeof buf, "%.6f", r.empirical_ratio);
        out << "\t" << (r.zero_opt ? "n/a" : buf);
        std::snprintf(buf, sizeof buf, "%.6f", r.std_error);
        out << "\t" << buf << "\t" << format_rational(r.mean_controlled) << "\t"
            << format_rational(r.mean_uncontrolled) << "\t"
            << (r.zero_opt ? "exact-zero-opt" : "ok") << "\n";
    }
    return out.str();
}

int WeightOracle::w_minus_millis(int i, int j) const {
    if (i == j) throw Error("oracle pair needs distinct vertices");
    uint64_t lo = static_cast<uint64_t>(std::min(i, j));
    uint64_t hi = static_cast<uint64_t>(std::max(i, j));
    uint64_t z = splitmix64(seed ^ splitmix64(lo + 1));
    z = splitmix64(z ^ splitmix64(hi + 0x9e3779b97f4a7c15ULL));
    return static_cast<int>((static_cast<unsigned __int128>(z) * 1000) >> 64);
}

namespace {

// f+ for an oracle weight k/1000, as a fraction over a fixed denominator;
// the join test compares the raw 64-bit draw exactly in 128-bit arithmetic.
struct FPlusTable {
    long den;
    std::array<long, 1001> num;

    explicit FPlusTable(Mode mode) {
        if (mode == Mode::Probability) {
            den = 1000;
            for (int k = 0; k <= 1000; ++k) num[k] = 1000 - k;
        } else {
            den = 7000;
            for (int k = 0; k <= 1000; ++k) {
                if (k <= 350)
                    num[k] = 7000;
                else if (k >= 630)
                    num[k] = 0;
                else
                    num[k] = 15750 - 25L * k;
            }
        }
    }

    bool join(uint64_t draw, int k) const {
        unsigned __int128 lhs = static_cast<unsigned __int128>(draw) * den;
        unsigned __int128 rhs = static_cast<unsigned __int128>(num[k]) << 64;
        return lhs < rhs;
    }
};

}  // namespace

long long count_membership_tests(int n, Mode mode, uint64_t seed,
                                 const std::function<int(int, int)>& w_minus_millis) {
    FPlusTable table(mode);
    SeededRng rng(seed);
    long long tests = 0;
    std::vector<int> remaining(n);
    for (int v = 0; v < n; ++v) remaining[v] = v;
    std::vector<char> joined(n, 0);
    while (!remaining.empty()) {
        int pivot = remaining[rng.index_below(remaining.size())];
        for (int u : remaining) {
            if (u == pivot) continue;
            ++tests;
            int k = w_minus_millis(u, pivot);
            if (k < 0 || k > 1000) throw Error("oracle weight out of range");
            joined[u] = table.join(rng.next_u64(), k);
        }
        std::vector<int> survivors;
        survivors.reserve(remaining.size());
        for (int u : remaining) {
            if (u == pivot) continue;
            if (joined[u])
                joined[u] = 0;
            else
                survivors.push_back(u);
        }
        remaining = std::move(survivors);
    }
    return tests;
}

ScalingReport scaling_benchmark(const std::vector<int>& sizes, Mode mode, int trials,
                                uint64_t seed) {
    for (size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1]) throw Error("benchmark sizes must be ascending");
    ScalingReport report;
    report.mode = mode;
    report.trials = trials;
    report.seed = seed;

    WeightOracle oracle{seed};
    auto lookup = [&oracle](int i, int j) { return oracle.w_minus_millis(i, j); };
    for (int n : sizes) {
        long long total_tests = 0;
        double total_ms = 0.0;
        for (int t = 0; t < trials; ++t) {
            auto start = std::chrono::steady_clock::now();
            total_tests += count_membership_tests(n, mode, seed + static_cast<uint64_t>(t),
                                                  lookup);
            total_ms += std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        }
        ScalingRow row;
        row.n = n;
        row.mean_membership_tests = static_cast<double>(total_tests) / trials;
        row.mean_wall_ms = total_ms / trials;
        report.rows.push_back(row);
    }
    for (size_t i = 1; i < report.rows.size(); ++i)
        report.doubling_ratios.push_back(report.rows[i].mean_membership_tests /
                                         report.rows[i - 1].mean_membership_tests);
    return report;
}

std::string ScalingReport::to_text() const {
    std::ostringstream out;
    out << "scaling-report v1\n";
    out << "# cost model: membership tests under O(1) oracle weight access; reading explicit "
           "weights alone would be quadratic\n";
    out << "mode = " << mode_name(mode) << "\n";
    out << "trials = " << trials << "\n";
    out << "seed = " << seed << "\n";
    out << "# n\tmean_membership_tests\tratio_vs_prev\n";
    char buf[64];
    for (size_t i = 0; i < rows.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.2f", rows[i].mean_membership_tests);
        out << rows[i].n << "\t" << buf << "\t";
        if (i == 0) {
            out << "-";
        } else {
            std::snprintf(buf, sizeof buf, "%.4f", doubling_ratios[i - 1]);
            out << buf;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace wcc
