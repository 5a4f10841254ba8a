// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wcc/certificate.hpp"
#include "wcc/cli.hpp"
#include "wcc/experiments.hpp"
#include "wcc/pivot.hpp"
#include "wcc/rng.hpp"

using namespace wcc;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int number, const std::string& name, bool ok, const std::string& detail) {
    if (!ok) ++failures;
    std::printf("criterion %d (%s): %s%s%s\n", number, name.c_str(), ok ? "PASS" : "FAIL",
                detail.empty() ? "" : " - ", detail.c_str());
    std::fflush(stdout);
}

std::string stat(const CertificateReport& r, const std::string& key) {
    for (const auto& [k, v] : r.stats)
        if (k == key) return v;
    return "<missing>";
}

char detail_buf[512];

// 1. Exact reproduction of the 28x4 omega table in under a second, through
// the command-line surface.
void criterion1() {
    Timer t;
    std::ostringstream out, err;
    int code = run_cli({"verify", "--suite", "table2"}, out, err);
    double secs = t.seconds();
    CertificateReport r = reproduce_table2();
    bool ok = code == 0 && out.str().find("table2: 112/112 match") != std::string::npos &&
              r.pass && r.checked_points == 112 && r.mismatches.empty() &&
              stat(r, "rows_enumerated") == "28" && secs < 1.0;
    std::snprintf(detail_buf, sizeof detail_buf, "exit %d, %lld/112 entries match, %.2fs", code,
                  r.checked_points - static_cast<long long>(r.mismatches.size()), secs);
    report(1, "table2 reproduction", ok, detail_buf);
}

// 2. Tight-slice cases: argmax values exact and no grid point above the
// stated maxima at denominator 1400, in under 30 s.
void criterion2() {
    Timer t;
    CertificateReport r = verify_appendix_b_cases(1400);
    double secs = t.seconds();
    bool argmax_ok = stat(r, "argmax_matches") == "48/48";
    bool sweep_ok = stat(r, "sweep_violations") == "0";
    bool ok = r.pass && argmax_ok && sweep_ok && secs < 30.0;
    std::ostringstream detail;
    detail << "argmax " << stat(r, "argmax_matches") << ", sweep violations "
           << stat(r, "sweep_violations");
    if (!r.mismatches.empty())
        detail << " (first: " << r.mismatches.front().location << " reaches "
               << r.mismatches.front().computed << ", bound " << r.mismatches.front().expected
               << ")";
    detail << ", overall max " << format_rational(r.worst_value);
    std::snprintf(detail_buf, sizeof detail_buf, "%s, %.1fs", detail.str().c_str(), secs);
    report(2, "tight-slice case maxima", ok, detail_buf);
}

// 3. Delta nonpositive on both mode/alpha pairs at denominator 1400, with the
// four reference interval maxima attained exactly.
void criterion3() {
    CertificateReport prob = verify_condition1(Mode::Probability, Rational(3), 1400);
    CertificateReport tri = verify_condition1(Mode::Triangle, make_rational(8, 5), 1400);
    bool bounds_ok = stat(tri, "max_delta_x1_I1") == "-69/100" &&
                     stat(tri, "max_delta_x0_I2") == "-28311/140000" &&
                     stat(tri, "max_delta_x1_I2") == "-30551/140000" &&
                     stat(tri, "max_delta_x0_I3") == "-319/500";
    bool ok = prob.pass && tri.pass && bounds_ok;
    std::snprintf(detail_buf, sizeof detail_buf,
                  "prob worst %s, tri worst %s, interval maxima %s",
                  format_rational(prob.worst_value).c_str(),
                  format_rational(tri.worst_value).c_str(), bounds_ok ? "exact" : "WRONG");
    report(3, "condition 1 margins", ok, detail_buf);
}

// 4. Omega nonpositive over L x grid^3 at denominator 100 for alpha = 3 with
// the phi identity exact everywhere; alpha = 29/10 fails at the stated
// witness. Under two minutes.
void criterion4() {
    Timer t;
    CertificateReport pass3 = verify_condition2_probability(Rational(3), 100);
    CertificateReport fail29 = verify_condition2_probability(make_rational(29, 10), 100);
    double secs = t.seconds();
    bool pass_ok = pass3.pass && pass3.checked_points == 5LL * 101 * 101 * 101 &&
                   stat(pass3, "identity_mismatches") == "0";
    bool witness_ok = !fail29.pass && fail29.worst_value == make_rational(1, 10) &&
                      fail29.worst_w == "(1,0,0)" && fail29.worst_x == "(1,1,0)";
    bool ok = pass_ok && witness_ok && secs < 120.0;
    std::snprintf(detail_buf, sizeof detail_buf,
                  "alpha=3 worst %s over %lld points (identity clean), alpha=29/10 witness "
                  "w=%s x=%s value %s, %.1fs",
                  format_rational(pass3.worst_value).c_str(), pass3.checked_points,
                  fail29.worst_w.c_str(), fail29.worst_x.c_str(),
                  format_rational(fail29.worst_value).c_str(), secs);
    report(4, "condition 2 probability", ok, detail_buf);
}

// 5. Exact cyclic and swap invariance on 10^4 samples in both modes.
void criterion5() {
    CertificateReport r = check_omega_symmetries(10000, 20240401);
    bool ok = r.pass && r.worst_value == 0;
    std::snprintf(detail_buf, sizeof detail_buf, "%lld sample evaluations, %s violations",
                  r.checked_points, stat(r, "violations").c_str());
    report(5, "omega symmetries", ok, detail_buf);
}

// 6. Expectation bounds as statistics: every instance's mean within
// alpha * OPT + 3 stderr, for both regimes. Under two minutes.
void criterion6() {
    Timer t;
    bool ok = true;
    std::string worst_note = "all within bound";
    for (Mode mode : {Mode::Probability, Mode::Triangle}) {
        Rational alpha = mode == Mode::Probability ? Rational(3) : make_rational(8, 5);
        RatioReport report_ = ratio_experiment(30, 8, 500, mode, 52000);
        for (const RatioRecord& rec : report_.records) {
            Rational slack = rec.mean_cost - alpha * rec.opt_cost;  // exact
            if (to_double(slack) > 3.0 * rec.std_error) {
                ok = false;
                worst_note = std::string(mode_name(mode)) + " instance seed " +
                             std::to_string(rec.instance_seed) + " exceeds bound";
            }
        }
    }
    double secs = t.seconds();
    std::snprintf(detail_buf, sizeof detail_buf, "2x30 instances x 500 trials, %s, %.1fs",
                  worst_note.c_str(), secs);
    report(6, "empirical ratio bounds", ok, detail_buf);
}

// 7. No sampled clustering ever beats the exhaustive optimum, exactly.
void criterion7() {
    SeededRng rng(321);
    bool ok = true;
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        int n = 2 + static_cast<int>(rng.index_below(7));
        bool triangle = i % 2 == 1;
        GeneratorConfig cfg{n, rng.next_u64(),
                            triangle ? Family::MetricTriangle : Family::UniformProbability};
        WeightedInstance inst =
            triangle ? gen_triangle_instance(cfg) : gen_probability_instance(cfg);
        Rational opt = exact_optimal(inst).cost;
        Mode mode = triangle ? Mode::Triangle : Mode::Probability;
        Rational qc = clustering_cost(inst, quick_cluster(inst, mode, rng.next_u64()).clustering);
        Rational ap = clustering_cost(inst, ailon_pivot(inst, rng.next_u64()));
        ++checked;
        if (qc < opt || ap < opt) ok = false;
    }
    std::snprintf(detail_buf, sizeof detail_buf, "%d instances, both algorithms", checked);
    report(7, "oracle dominance", ok, detail_buf);
}

// 8. controlled + uncontrolled equals the run total on 1000 traced runs.
void criterion8() {
    SeededRng rng(654);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
        int n = 2 + static_cast<int>(rng.index_below(7));
        bool triangle = i % 2 == 1;
        GeneratorConfig cfg{n, rng.next_u64(),
                            triangle ? Family::MetricTriangle : Family::UniformProbability};
        WeightedInstance inst =
            triangle ? gen_triangle_instance(cfg) : gen_probability_instance(cfg);
        Mode mode = triangle ? Mode::Triangle : Mode::Probability;
        QuickClusterResult run = quick_cluster(inst, mode, rng.next_u64());
        CostDecomposition split = decompose_costs(inst, run.trace);
        if (split.controlled + split.uncontrolled != clustering_cost(inst, run.clustering))
            ok = false;
    }
    report(8, "decomposition identity", ok, "1000 traced runs, exact equality");
}

// 9. Doubling ratios of mean membership-test counts stay at most 3.0 under
// the uniform oracle. Under two minutes.
void criterion9() {
    Timer t;
    ScalingReport r =
        scaling_benchmark({1024, 2048, 4096, 8192, 16384, 32768}, Mode::Probability, 20, 99);
    double secs = t.seconds();
    bool ok = secs < 120.0;
    std::ostringstream ratios;
    for (size_t i = 0; i < r.doubling_ratios.size(); ++i) {
        if (r.doubling_ratios[i] > 3.0) ok = false;
        if (i) ratios << " ";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", r.doubling_ratios[i]);
        ratios << buf;
    }
    std::snprintf(detail_buf, sizeof detail_buf, "ratios [%s], %.1fs", ratios.str().c_str(),
                  secs);
    report(9, "membership-test scaling", ok, detail_buf);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (failures == 0)
        std::printf("acceptance: all criteria PASS\n");
    else
        std::printf("acceptance: %d criterion(s) FAIL\n", failures);
    return failures == 0 ? 0 : 1;
}
