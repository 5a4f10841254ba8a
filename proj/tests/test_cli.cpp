#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "wcc/cli.hpp"
#include "wcc/instance.hpp"
#include "wcc/pivot.hpp"
#include "wcc/rng.hpp"

using namespace wcc;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) {
        path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") + "/wcc_test_" +
               name;
    }
    ~TempFile() { std::remove(path.c_str()); }
    std::string slurp() const {
        std::ifstream in(path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    void write(const std::string& content) const {
        std::ofstream out(path);
        out << content;
    }
};

}  // namespace

TEST_CASE("generate emits a valid deterministic instance") {
    CliResult a = run({"generate", "--mode", "probability", "--n", "6", "--seed", "4"});
    CliResult b = run({"generate", "--mode", "probability", "--n", "6", "--seed", "4"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    WeightedInstance inst = WeightedInstance::parse(a.out);
    CHECK(inst.n() == 6);
    CHECK(inst.regime() == Regime::Probability);

    CliResult tri = run({"generate", "--mode", "triangle", "--n", "5", "--seed", "4"});
    CHECK(WeightedInstance::parse(tri.out).regime() == Regime::ProbabilityAndTriangle);

    CHECK(run({"generate", "--mode", "probability", "--n", "6"}).code == 2);  // no seed
}

TEST_CASE("cluster and eval round trip") {
    TempFile inst_file("inst.wcc"), clu_file("run.clu"), trace_file("run.trace");
    CHECK(run({"generate", "--mode", "probability", "--n", "7", "--seed", "2", "--output",
               inst_file.path})
              .code == 0);

    CliResult c1 = run({"cluster", "--input", inst_file.path, "--mode", "probability", "--seed",
                        "7", "--output", clu_file.path, "--trace", trace_file.path});
    CHECK(c1.code == 0);
    std::string first = clu_file.slurp();
    CliResult c2 = run({"cluster", "--input", inst_file.path, "--mode", "probability", "--seed",
                        "7", "--output", clu_file.path});
    CHECK(c2.code == 0);
    CHECK(clu_file.slurp() == first);  // byte-identical reruns

    CliResult ev = run({"eval", "--input", inst_file.path, clu_file.path, "--trace",
                        trace_file.path});
    CHECK(ev.code == 0);
    CHECK(ev.out.find("optimum = ") != std::string::npos);
    CHECK(ev.out.find("cost = ") != std::string::npos);
    CHECK(ev.out.find("controlled = ") != std::string::npos);

    CliResult ailon = run({"cluster", "--input", inst_file.path, "--algorithm", "ailon", "--seed",
                           "3"});
    CHECK(ailon.code == 0);
    CHECK(run({"cluster", "--input", inst_file.path, "--algorithm", "ailon", "--seed", "3",
               "--trace", trace_file.path})
              .code == 2);  // no trace for the baseline
}

TEST_CASE("eval guard switch") {
    TempFile inst_file("guard.wcc");
    run({"generate", "--mode", "probability", "--n", "6", "--seed", "5", "--output",
         inst_file.path});
    CliResult ev = run({"eval", "--input", inst_file.path, "--max-exact-n", "4"});
    CHECK(ev.code == 0);
    CHECK(ev.out.find("optimum skipped") != std::string::npos);
}

TEST_CASE("verify table2 headline") {
    CliResult r = run({"verify", "--suite", "table2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("table2: 112/112 match") != std::string::npos);
    CHECK(r.out.find("verdict = pass") != std::string::npos);
}

TEST_CASE("verify condition2 tightness witness") {
    CliResult r = run({"verify", "--suite", "condition2-prob", "--alpha", "29/10",
                       "--grid-denominator", "20"});
    CHECK(r.code == 1);
    CHECK(r.out.find("witness: w=(1,0,0) x=(1,1,0) omega=1/10") != std::string::npos);
}

TEST_CASE("verify condition1 and symmetries") {
    CliResult c1 = run({"verify", "--suite", "condition1", "--grid-denominator", "700"});
    CHECK(c1.code == 0);
    CHECK(c1.out.find("max_delta_x1_I1 = -69/100") != std::string::npos);

    CliResult sym = run({"verify", "--suite", "symmetries", "--trials", "200", "--seed", "5"});
    CHECK(sym.code == 0);
}

TEST_CASE("verify writes the tabular dump") {
    TempFile dump("dump.tsv");
    CliResult r = run({"verify", "--suite", "table2", "--output", dump.path});
    CHECK(r.code == 0);
    std::string tsv = dump.slurp();
    CHECK(tsv.find("suite\tlocation\tx\tw\tvalue") == 0);
    CHECK(tsv.find("table2\t") != std::string::npos);
}

TEST_CASE("usage and input errors exit 2") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
    CHECK(run({"cluster", "--input", "/nonexistent.wcc", "--seed", "1"}).code == 2);
    CHECK(run({"generate", "--mode", "probability", "--n", "3", "--seed", "1", "--bogus"}).code ==
          2);
    CHECK(run({}).code == 2);

    TempFile bad("bad.wcc");
    bad.write("wcc v1\nn 2\nregime probability\n0 1 3/10 6/10\n");
    CliResult r = run({"eval", "--input", bad.path});
    CHECK(r.code == 2);
    CHECK(r.err.find("probability constraint violated at (0,1): sum 9/10") != std::string::npos);
}

TEST_CASE("regime/mode mismatch is a usage error") {
    TempFile inst_file("mismatch.wcc");
    run({"generate", "--mode", "probability", "--n", "4", "--seed", "6", "--output",
         inst_file.path});
    CliResult r = run({"cluster", "--input", inst_file.path, "--mode", "triangle", "--seed", "1"});
    CHECK(r.code == 2);
}

TEST_CASE("bench output is deterministic and carries ratios") {
    CliResult a = run({"bench", "--mode", "probability", "--seed", "3", "--trials", "3",
                       "--sizes", "64,128,256"});
    CliResult b = run({"bench", "--mode", "probability", "--seed", "3", "--trials", "3",
                       "--sizes", "64,128,256"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("scaling-report v1") == 0);
    CHECK(a.err.find("timing") != std::string::npos);
    CHECK(run({"bench", "--mode", "probability", "--trials", "3"}).code == 2);  // no seed
}

TEST_CASE("help exits zero") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"verify", "--help"}).code == 0);
}

TEST_CASE("fuzzed flags never crash and keep the exit-code contract") {
    const std::vector<std::string> pool = {
        "generate", "cluster",  "eval",   "bench",   "--mode",  "probability", "triangle",
        "--n",      "4",        "--seed", "1",       "--input", "/nope.wcc",   "--bogus",
        "-x",       "12",       "3/4",    "--output", "--algorithm", "ailon",  "--trials",
        "--sizes",  "8,16",     "",       "verify?",
    };
    SeededRng rng(8080);
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<std::string> args;
        size_t len = rng.index_below(6);
        for (size_t k = 0; k < len; ++k) args.push_back(pool[rng.index_below(pool.size())]);
        CliResult r = run(args);
        CHECK((r.code == 0 || r.code == 1 || r.code == 2));
    }
}
