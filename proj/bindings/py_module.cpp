#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wcc/certificate.hpp"
#include "wcc/experiments.hpp"
#include "wcc/pivot.hpp"

namespace py = pybind11;
using namespace wcc;

namespace {

// Exact values cross the boundary as `p/q` strings; python callers can wrap
// them in fractions.Fraction.
std::string rat(const Rational& r) { return format_rational(r); }

TripleWeights triple_w(const std::vector<std::string>& w) {
    if (w.size() != 3) throw Error("expected three weights");
    return {parse_rational(w[0]), parse_rational(w[1]), parse_rational(w[2])};
}

XTriple triple_x(const std::vector<std::string>& x) {
    if (x.size() != 3) throw Error("expected three x values");
    return {parse_rational(x[0]), parse_rational(x[1]), parse_rational(x[2])};
}

py::dict report_dict(const CertificateReport& r) {
    py::dict d;
    d["suite"] = r.suite;
    d["pass"] = r.pass;
    d["checked_points"] = r.checked_points;
    d["worst_value"] = rat(r.worst_value);
    d["worst_x"] = r.worst_x;
    d["worst_w"] = r.worst_w;
    d["mismatches"] = r.mismatches.size();
    py::dict stats;
    for (const auto& [k, v] : r.stats) stats[py::str(k)] = v;
    d["stats"] = stats;
    d["text"] = r.to_text();
    return d;
}

}  // namespace

PYBIND11_MODULE(wccpy, m) {
    m.doc() = "weighted correlation clustering: pivot algorithms and the exact certificate";

    py::register_exception<Error>(m, "WccError");

    py::class_<WeightedInstance>(m, "Instance")
        .def_static("parse", [](const std::string& text) { return WeightedInstance::parse(text); })
        .def("serialize", &WeightedInstance::serialize)
        .def_property_readonly("n", &WeightedInstance::n)
        .def_property_readonly("regime",
                               [](const WeightedInstance& inst) {
                                   return std::string(regime_name(inst.regime()));
                               })
        .def("w_plus",
             [](const WeightedInstance& inst, int i, int j) { return rat(inst.w_plus(i, j)); })
        .def("w_minus",
             [](const WeightedInstance& inst, int i, int j) { return rat(inst.w_minus(i, j)); })
        .def("__eq__", [](const WeightedInstance& a, const WeightedInstance& b) { return a == b; });

    m.def("generate_probability", [](int n, uint64_t seed) {
        return gen_probability_instance({n, seed, Family::UniformProbability});
    });
    m.def("generate_triangle", [](int n, uint64_t seed) {
        return gen_triangle_instance({n, seed, Family::MetricTriangle});
    });

    m.def("clustering_cost", [](const WeightedInstance& inst, const std::vector<int>& labels) {
        return rat(clustering_cost(inst, Clustering(labels)));
    });

    m.def(
        "quick_cluster",
        [](const WeightedInstance& inst, const std::string& mode, uint64_t seed) {
            QuickClusterResult run = quick_cluster(inst, mode_from_name(mode), seed);
            CostDecomposition split = decompose_costs(inst, run.trace);
            py::dict d;
            d["labels"] = run.clustering.labels();
            d["cost"] = rat(clustering_cost(inst, run.clustering));
            d["controlled"] = rat(split.controlled);
            d["uncontrolled"] = rat(split.uncontrolled);
            d["trace"] = run.trace.serialize();
            return d;
        },
        py::arg("instance"), py::arg("mode"), py::arg("seed"));

    m.def("ailon_pivot", [](const WeightedInstance& inst, uint64_t seed) {
        return ailon_pivot(inst, seed).labels();
    });

    m.def(
        "exact_optimal",
        [](const WeightedInstance& inst, int max_n) {
            OptimumResult opt = exact_optimal(inst, max_n);
            return py::make_tuple(opt.clustering.labels(), rat(opt.cost));
        },
        py::arg("instance"), py::arg("max_n") = kDefaultExactGuard);

    m.def("h", [](const std::string& w) { return rat(rounding_h(parse_rational(w))); });
    m.def("f_minus", [](const std::string& w, const std::string& mode) {
        return rat(f_minus(parse_rational(w), mode_from_name(mode)));
    });
    m.def("delta", [](const std::string& x, const std::string& wm, const std::string& mode,
                      const std::string& alpha) {
        Rational w = parse_rational(wm);
        return rat(delta(parse_rational(x), w, 1 - w, mode_from_name(mode),
                         parse_rational(alpha)));
    });
    m.def("phi", [](const std::vector<std::string>& w, const std::string& mode) {
        TripleWeights wm = triple_w(w);
        TripleWeights wp{1 - wm.ij, 1 - wm.jk, 1 - wm.ki};
        return rat(phi(wm, wp, mode_from_name(mode)));
    });
    m.def("psi", [](const std::vector<std::string>& x, const std::vector<std::string>& w,
                    const std::string& mode) {
        TripleWeights wm = triple_w(w);
        TripleWeights wp{1 - wm.ij, 1 - wm.jk, 1 - wm.ki};
        return rat(psi(triple_x(x), wm, wp, mode_from_name(mode)));
    });
    m.def("omega", [](const std::vector<std::string>& x, const std::vector<std::string>& w,
                      const std::string& mode, const std::string& alpha) {
        TripleWeights wm = triple_w(w);
        TripleWeights wp{1 - wm.ij, 1 - wm.jk, 1 - wm.ki};
        return rat(omega(triple_x(x), wm, wp, mode_from_name(mode), parse_rational(alpha)));
    });

    m.def(
        "verify",
        [](const std::string& suite, const std::string& alpha, int grid_denominator,
           uint64_t seed, int samples) {
            if (suite == "condition1-probability")
                return report_dict(verify_condition1(
                    Mode::Probability, alpha.empty() ? Rational(3) : parse_rational(alpha),
                    grid_denominator ? grid_denominator : 1400));
            if (suite == "condition1-triangle")
                return report_dict(verify_condition1(
                    Mode::Triangle, alpha.empty() ? make_rational(8, 5) : parse_rational(alpha),
                    grid_denominator ? grid_denominator : 1400));
            if (suite == "condition2-prob")
                return report_dict(verify_condition2_probability(
                    alpha.empty() ? Rational(3) : parse_rational(alpha),
                    grid_denominator ? grid_denominator : 100));
            if (suite == "table2") return report_dict(reproduce_table2());
            if (suite == "appendix-b")
                return report_dict(
                    verify_appendix_b_cases(grid_denominator ? grid_denominator : 1400));
            if (suite == "symmetries") return report_dict(check_omega_symmetries(samples, seed));
            throw Error("unknown suite '" + suite + "'");
        },
        py::arg("suite"), py::arg("alpha") = "", py::arg("grid_denominator") = 0,
        py::arg("seed") = 0, py::arg("samples") = 10000);

    m.def(
        "scaling_benchmark",
        [](const std::vector<int>& sizes, const std::string& mode, int trials, uint64_t seed) {
            ScalingReport report = scaling_benchmark(sizes, mode_from_name(mode), trials, seed);
            py::dict d;
            py::list rows;
            for (const ScalingRow& row : report.rows) {
                py::dict r;
                r["n"] = row.n;
                r["mean_membership_tests"] = row.mean_membership_tests;
                rows.append(r);
            }
            d["rows"] = rows;
            d["doubling_ratios"] = report.doubling_ratios;
            d["text"] = report.to_text();
            return d;
        },
        py::arg("sizes"), py::arg("mode"), py::arg("trials"), py::arg("seed"));

    m.def(
        "ratio_experiment",
        [](int instances, int n, int trials, const std::string& mode, uint64_t base_seed) {
            RatioReport report = ratio_experiment(instances, n, trials, mode_from_name(mode),
                                                  base_seed);
            py::list records;
            for (const RatioRecord& rec : report.records) {
                py::dict d;
                d["opt"] = rat(rec.opt_cost);
                d["mean_cost"] = rat(rec.mean_cost);
                d["mean_controlled"] = rat(rec.mean_controlled);
                d["mean_uncontrolled"] = rat(rec.mean_uncontrolled);
                d["std_error"] = rec.std_error;
                d["ratio"] = rec.empirical_ratio;
                d["zero_opt"] = rec.zero_opt;
                records.append(d);
            }
            return records;
        },
        py::arg("instances"), py::arg("n"), py::arg("trials"), py::arg("mode"),
        py::arg("base_seed"));
}
