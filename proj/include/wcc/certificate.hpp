#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wcc/rounding.hpp"

namespace wcc {

struct TripleWeights {
    Rational ij, jk, ki;
};

struct XTriple {
    Rational ij, jk, ki;
};

// Sum over the triple's three edges of f+f+ w- + (f+f- + f-f+) w+, where each
// edge's f factors come from the other two edges.
Rational phi(const TripleWeights& w_minus, const TripleWeights& w_plus, Mode mode);

// Same coefficient structure applied to the objective terms x w+ + (1-x) w-.
Rational psi(const XTriple& x, const TripleWeights& w_minus, const TripleWeights& w_plus,
             Mode mode);

Rational omega(const XTriple& x, const TripleWeights& w_minus, const TripleWeights& w_plus,
               Mode mode, const Rational& alpha);

// Per-pair margin (f+ w- + f- w+) - alpha ((1-x) w- + x w+).
Rational delta(const Rational& x, const Rational& w_minus, const Rational& w_plus, Mode mode,
               const Rational& alpha);

struct CertificateReport {
    struct Mismatch {
        std::string location;
        std::string expected;
        std::string computed;
    };
    struct DumpRow {
        std::string location;
        std::string x;
        std::string w;
        std::string value;
    };

    std::string suite;
    bool pass = false;
    long long checked_points = 0;
    Rational worst_value;
    std::string worst_x;
    std::string worst_w;
    std::vector<Mismatch> mismatches;
    std::vector<std::pair<std::string, std::string>> stats;
    std::vector<std::string> notes;
    std::vector<DumpRow> rows;

    // Line-oriented `key = value` rendering.
    std::string to_text() const;
    // Machine-readable dump, one tab-separated row per checked extremal point.
    std::string rows_tsv() const;
};

// Sweeps delta over x in {0,1} and w- on the grid {k/denominator} plus the
// breakpoints and parabola vertices; reports per-interval maxima.
CertificateReport verify_condition1(Mode mode, const Rational& alpha, int grid_denominator);

// Sweeps omega over the polytope vertex set L and the full weight grid, and
// checks the three-product identity for phi at every grid point.
CertificateReport verify_condition2_probability(const Rational& alpha, int grid_denominator);

// Recomputes the breakpoint-grid omega table (triangle mode, alpha = 8/5) and
// compares every entry against the embedded reference fractions.
CertificateReport reproduce_table2();

// For each tight-triangle interval cell and each L_T vertex: checks omega at
// the embedded argmax against the embedded maximum, then sweeps the cell's
// tight slice {(a, b, a+b)} on the grid for values above that maximum.
CertificateReport verify_appendix_b_cases(int grid_denominator);

// Exact cyclic and swap invariance of omega on random rational samples, in
// both modes.
CertificateReport check_omega_symmetries(int sample_count, uint64_t seed);

namespace reference {

// x vertex sets of the triangle polytope; LT is the swap-reduced form.
const std::array<std::array<int, 3>, 5>& l_vertices();
const std::array<std::array<int, 3>, 4>& lt_vertices();

struct Table2Row {
    std::array<Rational, 3> w;
    std::array<Rational, 4> omega_by_x;  // columns in lt_vertices() order
};
const std::vector<Table2Row>& table2();

// One tight-slice case: weight intervals (1..3) per coordinate, the x vertex,
// and the reference argmax/maximum for omega restricted to that cell.
struct TightCase {
    std::array<int, 3> cell;
    std::array<int, 3> x;
    std::array<Rational, 3> argmax;
    Rational max_value;
};
const std::vector<TightCase>& tight_cases();

}  // namespace reference

}  // namespace wcc
