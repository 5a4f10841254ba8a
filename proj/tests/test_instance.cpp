#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wcc/experiments.hpp"
#include "wcc/instance.hpp"
#include "wcc/rng.hpp"

using namespace wcc;

namespace {

WeightedInstance two_vertex() {
    return WeightedInstance::parse("wcc v1\nn 2\nregime probability\n0 1 3/10 7/10\n");
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/10") == make_rational(3, 10));
    CHECK(parse_rational("0.35") == make_rational(7, 20));
    CHECK(parse_rational("-0.25") == make_rational(-1, 4));
    CHECK(parse_rational("1") == 1);
    CHECK(parse_rational("6/4") == make_rational(3, 2));
    CHECK(format_rational(make_rational(7, 20)) == "7/20");
    CHECK(format_rational(Rational(2)) == "2");
    CHECK(make_rational(1, 3) + make_rational(1, 6) == make_rational(1, 2));
    CHECK_THROWS_AS(parse_rational("1e-3"), Error);
    CHECK_THROWS_AS(parse_rational("."), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("instance parse basics") {
    WeightedInstance inst = two_vertex();
    CHECK(inst.n() == 2);
    CHECK(inst.regime() == Regime::Probability);
    CHECK(inst.w_plus(0, 1) == make_rational(3, 10));
    CHECK(inst.w_minus(0, 1) == make_rational(7, 10));
    CHECK(inst.w_minus(1, 0) == inst.w_minus(0, 1));
}

TEST_CASE("instance parse errors") {
    CHECK_THROWS_WITH_AS(
        (void)WeightedInstance::parse("wcc v1\nn 2\nregime probability\n0 1 3/10 6/10\n"),
        "probability constraint violated at (0,1): sum 9/10", Error);

    // Triangle violation names the offending triple.
    std::string tri =
        "wcc v1\nn 3\nregime probability-triangle\n"
        "0 1 0.8 0.2\n0 2 0.8 0.2\n1 2 0.1 0.9\n";
    CHECK_THROWS_WITH_AS((void)WeightedInstance::parse(tri),
                         "triangle constraint violated at (0,1,2)", Error);

    CHECK_THROWS_AS((void)WeightedInstance::parse("wcc v2\nn 0\nregime general\n"), Error);
    CHECK_THROWS_AS(
        (void)WeightedInstance::parse("wcc v1\nn 2\nregime probability\n0 1 1/2 1/2 9\n"), Error);
    // Duplicate and missing pairs.
    CHECK_THROWS_AS((void)WeightedInstance::parse(
                        "wcc v1\nn 2\nregime probability\n0 1 1/2 1/2\n0 1 1/2 1/2\n"),
                    Error);
    CHECK_THROWS_AS((void)WeightedInstance::parse("wcc v1\nn 3\nregime probability\n0 1 1/2 1/2\n"),
                    Error);
    // Negative weights are rejected in every regime.
    CHECK_THROWS_AS((void)WeightedInstance::parse("wcc v1\nn 2\nregime general\n0 1 -1 0\n"),
                    Error);
    CHECK_THROWS_AS((void)WeightedInstance::parse("wcc v1\nn 2 junk\nregime general\n0 1 1 0\n"),
                    Error);
    CHECK_THROWS_AS((void)WeightedInstance::parse("wcc v1\nn 9999999\nregime general\n"), Error);
}

TEST_CASE("serialize canonical form and exactness") {
    WeightedInstance inst = two_vertex();
    std::string text = inst.serialize();
    CHECK(text == "wcc v1\nn 2\nregime probability\n0 1 3/10 7/10\n");

    WeightedInstance third =
        WeightedInstance(2, Regime::Probability, {{make_rational(1, 3), make_rational(2, 3)}});
    CHECK(third.serialize().find("1/3") != std::string::npos);
    CHECK(third.serialize().find("0.3") == std::string::npos);

    WeightedInstance empty(0, Regime::General, {});
    CHECK(empty.serialize() == "wcc v1\nn 0\nregime general\n");
    CHECK(WeightedInstance::parse(empty.serialize()) == empty);
}

TEST_CASE("round trip over random instances") {
    for (uint64_t seed = 0; seed < 12; ++seed) {
        GeneratorConfig cfg{static_cast<int>(seed % 7), seed, Family::UniformProbability};
        WeightedInstance inst = gen_probability_instance(cfg);
        CHECK(WeightedInstance::parse(inst.serialize()) == inst);
    }
    GeneratorConfig cfg{6, 99, Family::MetricTriangle};
    WeightedInstance inst = gen_triangle_instance(cfg);
    CHECK(WeightedInstance::parse(inst.serialize()) == inst);
}

TEST_CASE("comments and decimals in files") {
    WeightedInstance inst = WeightedInstance::parse(
        "wcc v1\n# a comment\nn 2\nregime probability\n0 1 0.35 0.65  # inline\n");
    CHECK(inst.w_plus(0, 1) == make_rational(7, 20));
    CHECK(inst.w_minus(0, 1) == make_rational(13, 20));
}

TEST_CASE("clustering canonicalization and parsing") {
    Clustering c(std::vector<int>{7, 7, 3, 7, 3});
    CHECK(c.labels() == std::vector<int>{0, 0, 1, 0, 1});
    CHECK(c.cluster_count() == 2);
    CHECK(c == Clustering(std::vector<int>{1, 1, 0, 1, 0}));

    Clustering parsed = Clustering::parse("0 4\n1 4\n2 9\n");
    CHECK(parsed.labels() == std::vector<int>{0, 0, 1});
    CHECK(parsed.serialize() == "0 0\n1 0\n2 1\n");
    CHECK_THROWS_AS((void)Clustering::parse("1 0\n0 0\n"), Error);
}

TEST_CASE("clustering cost") {
    WeightedInstance inst = two_vertex();
    CHECK(clustering_cost(inst, Clustering({0, 0})) == make_rational(7, 10));
    CHECK(clustering_cost(inst, Clustering({0, 1})) == make_rational(3, 10));

    WeightedInstance agree(3, Regime::Probability,
                           {{Rational(1), Rational(0)},
                            {Rational(1), Rational(0)},
                            {Rational(1), Rational(0)}});
    CHECK(clustering_cost(agree, Clustering({0, 0, 0})) == 0);
    CHECK_THROWS_AS((void)clustering_cost(inst, Clustering({0, 0, 0})), Error);
}

TEST_CASE("lp objective at integral and fractional points") {
    WeightedInstance inst = two_vertex();
    XLabeling zero(2);
    CHECK(lp_objective_integral(inst, zero) == make_rational(7, 10));

    WeightedInstance agree(3, Regime::Probability,
                           {{Rational(1), Rational(0)},
                            {Rational(1), Rational(0)},
                            {Rational(1), Rational(0)}});
    XLabeling ones(3, Rational(1));
    CHECK(lp_objective_integral(agree, ones) == 3);

    WeightedInstance half(2, Regime::Probability, {{make_rational(1, 2), make_rational(1, 2)}});
    XLabeling mid(2, make_rational(1, 2));
    CHECK(lp_objective_integral(half, mid) == make_rational(1, 2));

    XLabeling bad(2, make_rational(3, 2));
    CHECK_THROWS_AS((void)lp_objective_integral(half, bad), Error);
}

TEST_CASE("labeling from clustering") {
    Clustering c({0, 0, 1});
    XLabeling x = labeling_from_clustering(c);
    CHECK(x.x(0, 1) == 0);
    CHECK(x.x(0, 2) == 1);
    CHECK(x.x(1, 2) == 1);

    XLabeling all_zero = labeling_from_clustering(Clustering({0, 0, 0, 0}));
    XLabeling all_one = labeling_from_clustering(Clustering({0, 1, 2, 3}));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            CHECK(all_zero.x(i, j) == 0);
            CHECK(all_one.x(i, j) == 1);
        }
}

TEST_CASE("cost equals objective at the induced labeling, and relabeling invariance") {
    SeededRng rng(42);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng.index_below(7));
        GeneratorConfig cfg{n, rng.next_u64(), Family::UniformProbability};
        WeightedInstance inst = gen_probability_instance(cfg);
        std::vector<int> labels(n), permuted(n);
        size_t offset = rng.index_below(5) + 1;
        for (int v = 0; v < n; ++v) {
            labels[v] = static_cast<int>(rng.index_below(n));
            permuted[v] = static_cast<int>((labels[v] + offset) * 3 + 1);
        }
        Clustering c(labels);
        CHECK(clustering_cost(inst, c) == lp_objective_integral(inst, labeling_from_clustering(c)));
        CHECK(clustering_cost(inst, c) == clustering_cost(inst, Clustering(permuted)));

        // The induced labeling satisfies every triangle constraint.
        XLabeling x = labeling_from_clustering(c);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    if (i == j || j == k || i == k) continue;
                    CHECK(x.x(i, k) <= x.x(i, j) + x.x(j, k));
                }
    }
}

TEST_CASE("degenerate instances") {
    WeightedInstance empty(0, Regime::Probability, {});
    CHECK(clustering_cost(empty, Clustering(std::vector<int>{})) == 0);
    WeightedInstance single(1, Regime::ProbabilityAndTriangle, {});
    CHECK(clustering_cost(single, Clustering({0})) == 0);
}
