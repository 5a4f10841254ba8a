#include "wcc/certificate.hpp"

#include <algorithm>
#include <sstream>

#include "wcc/rng.hpp"

namespace wcc {

std::string_view mode_name(Mode mode) {
    return mode == Mode::Probability ? "probability" : "triangle";
}

Mode mode_from_name(std::string_view name) {
    if (name == "probability") return Mode::Probability;
    if (name == "triangle") return Mode::Triangle;
    throw Error("unknown mode '" + std::string(name) + "'");
}

Rational rounding_h(const Rational& w) {
    if (w < 0 || w > 1) throw Error("h argument outside [0,1]: " + format_rational(w));
    if (w <= h_breakpoint_lo()) return Rational(0);
    if (w >= h_breakpoint_hi()) return Rational(1);
    static const Rational slope = make_rational(25, 7);
    static const Rational intercept = make_rational(-5, 4);
    return slope * w + intercept;
}

Rational f_minus(const Rational& w_minus, Mode mode) {
    if (w_minus < 0 || w_minus > 1)
        throw Error("f argument outside [0,1]: " + format_rational(w_minus));
    return mode == Mode::Probability ? w_minus : rounding_h(w_minus);
}

Rational f_plus(const Rational& w_minus, Mode mode) { return 1 - f_minus(w_minus, mode); }

namespace {

// References to one edge's weight and membership-probability values; sweeps
// point these at precomputed grid arrays.
struct EdgeRefs {
    const Rational* wm;
    const Rational* wp;
    const Rational* fm;
    const Rational* fp;
};

struct TripleCore {
    Rational phi;
    std::array<Rational, 3> coeff;  // per-edge psi coefficient
};

// Evaluates the three displayed edge terms; edge e's factors come from the
// other two edges: (ij -> ki,jk), (jk -> ij,ki), (ki -> jk,ij).
TripleCore triple_core(const EdgeRefs& e1, const EdgeRefs& e2, const EdgeRefs& e3) {
    const EdgeRefs* edges[3] = {&e1, &e2, &e3};
    constexpr int others[3][2] = {{2, 1}, {0, 2}, {1, 0}};
    TripleCore out;
    out.phi = 0;
    for (int e = 0; e < 3; ++e) {
        const EdgeRefs& a = *edges[others[e][0]];
        const EdgeRefs& b = *edges[others[e][1]];
        Rational pp = *a.fp * *b.fp;
        Rational pm = *a.fp * *b.fm;
        Rational mp = *a.fm * *b.fp;
        out.phi += pp * *edges[e]->wm + (pm + mp) * *edges[e]->wp;
        out.coeff[e] = pp + pm + mp;
    }
    return out;
}

TripleCore core_for(const TripleWeights& wm, const TripleWeights& wp, Mode mode) {
    Rational fm1 = f_minus(wm.ij, mode), fm2 = f_minus(wm.jk, mode), fm3 = f_minus(wm.ki, mode);
    Rational fp1 = 1 - fm1, fp2 = 1 - fm2, fp3 = 1 - fm3;
    EdgeRefs e1{&wm.ij, &wp.ij, &fm1, &fp1};
    EdgeRefs e2{&wm.jk, &wp.jk, &fm2, &fp2};
    EdgeRefs e3{&wm.ki, &wp.ki, &fm3, &fp3};
    return triple_core(e1, e2, e3);
}

std::string triple_str(const Rational& a, const Rational& b, const Rational& c) {
    return "(" + format_rational(a) + "," + format_rational(b) + "," + format_rational(c) + ")";
}

std::string triple_str(const std::array<int, 3>& v) {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) +
           ")";
}

// Keeps the sweep maximum. Ties are resolved deterministically by the key,
// toward the lexicographically largest by default (smallest on request), so
// reported witnesses are independent of scan order. The key is only
// materialized for candidate updates.
class WorstTracker {
public:
    explicit WorstTracker(bool prefer_largest = true) : prefer_largest_(prefer_largest) {}

    template <typename KeyFn>
    bool offer(const Rational& value, KeyFn&& make_key) {
        if (has_ && value < value_) return false;
        std::array<Rational, 6> key = make_key();
        if (has_ && value == value_ && !tie_wins(key)) return false;
        has_ = true;
        value_ = value;
        key_ = std::move(key);
        return true;
    }

    bool has() const { return has_; }
    const Rational& value() const { return value_; }
    const std::array<Rational, 6>& key() const { return key_; }

private:
    bool tie_wins(const std::array<Rational, 6>& key) const {
        for (int i = 0; i < 6; ++i) {
            if (key[i] != key_[i]) return prefer_largest_ ? key[i] > key_[i] : key[i] < key_[i];
        }
        return false;
    }

    bool prefer_largest_;
    bool has_ = false;
    Rational value_;
    std::array<Rational, 6> key_;
};

Rational alpha_for(Mode mode) {
    return mode == Mode::Probability ? Rational(3) : make_rational(8, 5);
}

}  // namespace

Rational phi(const TripleWeights& w_minus, const TripleWeights& w_plus, Mode mode) {
    return core_for(w_minus, w_plus, mode).phi;
}

Rational psi(const XTriple& x, const TripleWeights& w_minus, const TripleWeights& w_plus,
             Mode mode) {
    TripleCore core = core_for(w_minus, w_plus, mode);
    const Rational* xs[3] = {&x.ij, &x.jk, &x.ki};
    const Rational* wm[3] = {&w_minus.ij, &w_minus.jk, &w_minus.ki};
    const Rational* wp[3] = {&w_plus.ij, &w_plus.jk, &w_plus.ki};
    Rational total(0);
    for (int e = 0; e < 3; ++e)
        total += core.coeff[e] * (*xs[e] * *wp[e] + (1 - *xs[e]) * *wm[e]);
    return total;
}

Rational omega(const XTriple& x, const TripleWeights& w_minus, const TripleWeights& w_plus,
               Mode mode, const Rational& alpha) {
    return phi(w_minus, w_plus, mode) - alpha * psi(x, w_minus, w_plus, mode);
}

Rational delta(const Rational& x, const Rational& w_minus, const Rational& w_plus, Mode mode,
               const Rational& alpha) {
    Rational fm = f_minus(w_minus, mode);
    Rational fp = 1 - fm;
    return (fp * w_minus + fm * w_plus) - alpha * ((1 - x) * w_minus + x * w_plus);
}

std::string CertificateReport::to_text() const {
    std::ostringstream out;
    out << "suite = " << suite << "\n";
    out << "verdict = " << (pass ? "pass" : "fail") << "\n";
    out << "checked_points = " << checked_points << "\n";
    out << "worst_value = " << format_rational(worst_value) << "\n";
    out << "worst_witness_x = " << worst_x << "\n";
    out << "worst_witness_w = " << worst_w << "\n";
    out << "mismatches = " << mismatches.size() << "\n";
    for (const auto& [key, value] : stats) out << key << " = " << value << "\n";
    for (const std::string& note : notes) out << "note = " << note << "\n";
    for (const Mismatch& m : mismatches)
        out << "mismatch = " << m.location << " expected " << m.expected << " got " << m.computed
            << "\n";
    return out.str();
}

std::string CertificateReport::rows_tsv() const {
    std::ostringstream out;
    out << "location\tx\tw\tvalue\n";
    for (const DumpRow& r : rows) out << r.location << "\t" << r.x << "\t" << r.w << "\t"
                                      << r.value << "\n";
    return out.str();
}

CertificateReport verify_condition1(Mode mode, const Rational& alpha, int grid_denominator) {
    if (grid_denominator < 100) throw Error("condition1 grid denominator must be >= 100");
    CertificateReport report;
    report.suite = "condition1";
    report.stats.emplace_back("mode", std::string(mode_name(mode)));
    report.stats.emplace_back("alpha", format_rational(alpha));
    report.stats.emplace_back("grid_denominator", std::to_string(grid_denominator));

    std::vector<Rational> points;
    points.reserve(grid_denominator + 6);
    for (int k = 0; k <= grid_denominator; ++k)
        points.push_back(make_rational(k, grid_denominator));
    // Breakpoints of h, the two interior parabola vertices of the middle-piece
    // margins (off-grid even when the breakpoints are on it), and one extra
    // interior sample.
    for (const char* s : {"7/20", "63/100", "383/1000", "607/1000", "607/1400"})
        points.push_back(parse_rational(s));
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    // Ties resolve toward the smallest (x, w) maximizer.
    WorstTracker worst(false);
    // Per (x, interval) maxima; intervals indexed 1..3, breakpoints in both.
    std::array<std::array<Rational, 4>, 2> interval_max;
    std::array<std::array<bool, 4>, 2> interval_has{};
    const Rational& lo = h_breakpoint_lo();
    const Rational& hi = h_breakpoint_hi();

    for (int xi = 0; xi <= 1; ++xi) {
        Rational x(xi);
        for (const Rational& w : points) {
            Rational value = delta(x, w, 1 - w, mode, alpha);
            ++report.checked_points;
            worst.offer(value, [&] {
                return std::array<Rational, 6>{x, w, Rational(0), Rational(0), Rational(0),
                                               Rational(0)};
            });
            auto fold = [&](int iv) {
                if (!interval_has[xi][iv] || value > interval_max[xi][iv]) {
                    interval_max[xi][iv] = value;
                    interval_has[xi][iv] = true;
                }
            };
            if (w <= lo) fold(1);
            if (w >= lo && w <= hi) fold(2);
            if (w >= hi) fold(3);
        }
    }

    report.worst_value = worst.value();
    report.worst_x = format_rational(worst.key()[0]);
    report.worst_w = format_rational(worst.key()[1]);
    for (int xi = 0; xi <= 1; ++xi)
        for (int iv = 1; iv <= 3; ++iv) {
            std::string key = "max_delta_x" + std::to_string(xi) + "_I" + std::to_string(iv);
            report.stats.emplace_back(key, format_rational(interval_max[xi][iv]));
            report.rows.push_back({key, std::to_string(xi), "I" + std::to_string(iv),
                                   format_rational(interval_max[xi][iv])});
        }
    report.pass = report.worst_value <= 0;
    return report;
}

CertificateReport verify_condition2_probability(const Rational& alpha, int grid_denominator) {
    if (grid_denominator < 20) throw Error("condition2 grid denominator must be >= 20");
    CertificateReport report;
    report.suite = "condition2-prob";
    report.stats.emplace_back("mode", "probability");
    report.stats.emplace_back("alpha", format_rational(alpha));
    report.stats.emplace_back("grid_denominator", std::to_string(grid_denominator));

    const int d = grid_denominator;
    std::vector<Rational> wm(d + 1), wp(d + 1);
    for (int k = 0; k <= d; ++k) {
        wm[k] = make_rational(k, d);
        wp[k] = 1 - wm[k];
    }
    const auto& lx = reference::l_vertices();

    WorstTracker worst;
    long long identity_checks = 0, identity_bad = 0;
    for (int k1 = 0; k1 <= d; ++k1)
        for (int k2 = 0; k2 <= d; ++k2)
            for (int k3 = 0; k3 <= d; ++k3) {
                // Probability mode: f- is the weight itself.
                EdgeRefs e1{&wm[k1], &wp[k1], &wm[k1], &wp[k1]};
                EdgeRefs e2{&wm[k2], &wp[k2], &wm[k2], &wp[k2]};
                EdgeRefs e3{&wm[k3], &wp[k3], &wm[k3], &wp[k3]};
                TripleCore core = triple_core(e1, e2, e3);

                Rational identity = 3 * (wm[k1] * wp[k2] * wp[k3] + wp[k1] * wm[k2] * wp[k3] +
                                         wp[k1] * wp[k2] * wm[k3]);
                ++identity_checks;
                if (identity != core.phi) {
                    ++identity_bad;
                    if (report.mismatches.size() < 20)
                        report.mismatches.push_back(
                            {"phi identity at w=" + triple_str(wm[k1], wm[k2], wm[k3]),
                             format_rational(identity), format_rational(core.phi)});
                }

                const Rational* m[3] = {&wm[k1], &wm[k2], &wm[k3]};
                const Rational* p[3] = {&wp[k1], &wp[k2], &wp[k3]};
                for (const auto& x : lx) {
                    Rational psi_val(0);
                    for (int e = 0; e < 3; ++e)
                        psi_val += core.coeff[e] * (x[e] ? *p[e] : *m[e]);
                    Rational value = core.phi - alpha * psi_val;
                    ++report.checked_points;
                    worst.offer(value, [&] {
                        return std::array<Rational, 6>{wm[k1], wm[k2], wm[k3], Rational(x[0]),
                                                       Rational(x[1]), Rational(x[2])};
                    });
                }
            }

    report.worst_value = worst.value();
    report.worst_x = triple_str(worst.key()[3], worst.key()[4], worst.key()[5]);
    report.worst_w = triple_str(worst.key()[0], worst.key()[1], worst.key()[2]);
    report.stats.emplace_back("identity_checks", std::to_string(identity_checks));
    report.stats.emplace_back("identity_mismatches", std::to_string(identity_bad));
    report.rows.push_back({"worst", report.worst_x, report.worst_w,
                           format_rational(report.worst_value)});
    report.pass = report.worst_value <= 0 && identity_bad == 0;
    return report;
}

CertificateReport reproduce_table2() {
    CertificateReport report;
    report.suite = "table2";
    static const Rational alpha = make_rational(8, 5);

    // Independent enumeration of the breakpoint triples satisfying all three
    // triangle inequalities, in lexicographic order.
    std::array<Rational, 4> bp = {Rational(0), h_breakpoint_lo(), h_breakpoint_hi(), Rational(1)};
    std::vector<std::array<Rational, 3>> enumerated;
    for (const Rational& a : bp)
        for (const Rational& b : bp)
            for (const Rational& c : bp)
                if (a <= b + c && b <= a + c && c <= a + b) enumerated.push_back({a, b, c});

    const auto& expected_rows = reference::table2();
    report.stats.emplace_back("rows_enumerated", std::to_string(enumerated.size()));
    report.stats.emplace_back("rows_expected", std::to_string(expected_rows.size()));
    bool rows_agree = enumerated.size() == expected_rows.size();
    if (rows_agree)
        for (size_t r = 0; r < enumerated.size(); ++r)
            if (!(enumerated[r][0] == expected_rows[r].w[0] &&
                  enumerated[r][1] == expected_rows[r].w[1] &&
                  enumerated[r][2] == expected_rows[r].w[2]))
                rows_agree = false;
    if (!rows_agree)
        report.mismatches.push_back({"row enumeration", "reference row set", "differs"});

    const auto& lt = reference::lt_vertices();
    WorstTracker worst;
    long long matched = 0;
    for (size_t r = 0; r < enumerated.size() && rows_agree; ++r) {
        TripleWeights w{enumerated[r][0], enumerated[r][1], enumerated[r][2]};
        TripleWeights p{1 - w.ij, 1 - w.jk, 1 - w.ki};
        for (size_t c = 0; c < lt.size(); ++c) {
            XTriple x{Rational(lt[c][0]), Rational(lt[c][1]), Rational(lt[c][2])};
            Rational value = omega(x, w, p, Mode::Triangle, alpha);
            ++report.checked_points;
            worst.offer(value, [&] {
                return std::array<Rational, 6>{w.ij, w.jk, w.ki, x.ij, x.jk, x.ki};
            });
            std::string loc = "w=" + triple_str(w.ij, w.jk, w.ki) + " x=" + triple_str(lt[c]);
            report.rows.push_back({loc, triple_str(lt[c]), triple_str(w.ij, w.jk, w.ki),
                                   format_rational(value)});
            if (value == expected_rows[r].omega_by_x[c]) {
                ++matched;
            } else {
                report.mismatches.push_back({loc, format_rational(expected_rows[r].omega_by_x[c]),
                                             format_rational(value)});
            }
        }
    }

    report.worst_value = worst.has() ? worst.value() : Rational(0);
    report.worst_x =
        worst.has() ? triple_str(worst.key()[3], worst.key()[4], worst.key()[5]) : "-";
    report.worst_w =
        worst.has() ? triple_str(worst.key()[0], worst.key()[1], worst.key()[2]) : "-";
    report.stats.emplace_back("entries_matched", std::to_string(matched));
    report.stats.emplace_back("entries_total", std::to_string(report.checked_points));
    report.pass = report.mismatches.empty() && report.worst_value <= 0;
    return report;
}

namespace {

// Inclusive grid index range [ceil(lo*d), floor(hi*d)] of interval iv.
std::pair<long, long> interval_grid_range(int iv, int d) {
    auto bound = [&](const Rational& r, bool ceil_mode) {
        mpz_class num = r.get_num() * d;
        mpz_class q;
        if (ceil_mode)
            mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
        else
            mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
        return q.get_si();
    };
    switch (iv) {
        case 1: return {0, bound(h_breakpoint_lo(), false)};
        case 2: return {bound(h_breakpoint_lo(), true), bound(h_breakpoint_hi(), false)};
        case 3: return {bound(h_breakpoint_hi(), true), d};
    }
    throw Error("bad interval index");
}

std::string cell_str(const std::array<int, 3>& cell) {
    return "I" + std::to_string(cell[0]) + "I" + std::to_string(cell[1]) + "I" +
           std::to_string(cell[2]);
}

}  // namespace

CertificateReport verify_appendix_b_cases(int grid_denominator) {
    if (grid_denominator < 200) throw Error("tight-slice grid denominator must be >= 200");
    CertificateReport report;
    report.suite = "appendix-b";
    report.stats.emplace_back("grid_denominator", std::to_string(grid_denominator));
    report.notes.push_back(
        "interpretation: omega is piecewise linear in each weight coordinate separately (all "
        "three partials are step functions), so maxima lie on breakpoint triples or where a "
        "triangle constraint is tight; the sweep covers the tight slice in the "
        "w_ki = w_ij + w_jk orientation and relies on the exact symmetry checks for the others");

    static const Rational alpha = make_rational(8, 5);
    const auto& cases = reference::tight_cases();
    const int d = grid_denominator;

    // (a) exact evaluation at every embedded argmax.
    long long argmax_matches = 0;
    for (const auto& tc : cases) {
        TripleWeights w{tc.argmax[0], tc.argmax[1], tc.argmax[2]};
        TripleWeights p{1 - w.ij, 1 - w.jk, 1 - w.ki};
        XTriple x{Rational(tc.x[0]), Rational(tc.x[1]), Rational(tc.x[2])};
        Rational value = omega(x, w, p, Mode::Triangle, alpha);
        ++report.checked_points;
        std::string loc = cell_str(tc.cell) + " x=" + triple_str(tc.x) + " argmax";
        report.rows.push_back({loc, triple_str(tc.x), triple_str(w.ij, w.jk, w.ki),
                               format_rational(value)});
        if (value == tc.max_value) {
            ++argmax_matches;
        } else {
            report.mismatches.push_back(
                {loc, format_rational(tc.max_value), format_rational(value)});
        }
    }
    report.stats.emplace_back("argmax_matches",
                              std::to_string(argmax_matches) + "/" +
                                  std::to_string(cases.size()));

    // (b) sweep each cell's tight slice on the grid.
    std::vector<Rational> wm(d + 1), wp(d + 1), fm(d + 1), fp(d + 1);
    for (int k = 0; k <= d; ++k) {
        wm[k] = make_rational(k, d);
        wp[k] = 1 - wm[k];
        fm[k] = rounding_h(wm[k]);
        fp[k] = 1 - fm[k];
    }

    WorstTracker worst;
    long long sweep_violations = 0;
    // One sweep per distinct cell; the four x vertices share each point.
    for (size_t base = 0; base < cases.size(); base += 4) {
        const auto cell = cases[base].cell;
        auto [a_lo, a_hi] = interval_grid_range(cell[0], d);
        auto [b_lo, b_hi] = interval_grid_range(cell[1], d);
        auto [c_lo, c_hi] = interval_grid_range(cell[2], d);

        // Worst in-cell violation per x vertex, recorded once.
        std::array<WorstTracker, 4> cell_worst;
        std::array<long long, 4> cell_violations{};
        for (long k1 = a_lo; k1 <= a_hi; ++k1) {
            long k2_lo = std::max(b_lo, c_lo - k1);
            long k2_hi = std::min({b_hi, c_hi - k1, static_cast<long>(d) - k1});
            for (long k2 = k2_lo; k2 <= k2_hi; ++k2) {
                long k3 = k1 + k2;
                EdgeRefs e1{&wm[k1], &wp[k1], &fm[k1], &fp[k1]};
                EdgeRefs e2{&wm[k2], &wp[k2], &fm[k2], &fp[k2]};
                EdgeRefs e3{&wm[k3], &wp[k3], &fm[k3], &fp[k3]};
                TripleCore core = triple_core(e1, e2, e3);
                const Rational* m[3] = {&wm[k1], &wm[k2], &wm[k3]};
                const Rational* p[3] = {&wp[k1], &wp[k2], &wp[k3]};
                for (size_t c = 0; c < 4; ++c) {
                    const auto& tc = cases[base + c];
                    Rational psi_val(0);
                    for (int e = 0; e < 3; ++e)
                        psi_val += core.coeff[e] * (tc.x[e] ? *p[e] : *m[e]);
                    Rational value = core.phi - alpha * psi_val;
                    ++report.checked_points;
                    auto make_key = [&] {
                        return std::array<Rational, 6>{wm[k1], wm[k2], wm[k3], Rational(tc.x[0]),
                                                       Rational(tc.x[1]), Rational(tc.x[2])};
                    };
                    worst.offer(value, make_key);
                    if (value > tc.max_value) {
                        ++sweep_violations;
                        ++cell_violations[c];
                        cell_worst[c].offer(value, make_key);
                    }
                }
            }
        }
        for (size_t c = 0; c < 4; ++c) {
            if (!cell_worst[c].has()) continue;
            const auto& tc = cases[base + c];
            std::string worst_w = triple_str(cell_worst[c].key()[0], cell_worst[c].key()[1],
                                             cell_worst[c].key()[2]);
            std::string loc = cell_str(cell) + " x=" + triple_str(tc.x) + " sweep (" +
                              std::to_string(cell_violations[c]) + " grid points above bound, " +
                              "worst at w=" + worst_w + ")";
            report.mismatches.push_back({loc, "<= " + format_rational(tc.max_value),
                                         format_rational(cell_worst[c].value())});
        }
    }

    report.worst_value = worst.value();
    report.worst_x = triple_str(worst.key()[3], worst.key()[4], worst.key()[5]);
    report.worst_w = triple_str(worst.key()[0], worst.key()[1], worst.key()[2]);
    report.stats.emplace_back("sweep_violations", std::to_string(sweep_violations));
    report.pass = report.mismatches.empty() && report.worst_value <= 0;
    return report;
}

CertificateReport check_omega_symmetries(int sample_count, uint64_t seed) {
    if (sample_count < 1) throw Error("sample count must be >= 1");
    CertificateReport report;
    report.suite = "symmetries";
    report.stats.emplace_back("samples", std::to_string(sample_count));
    report.stats.emplace_back("seed", std::to_string(seed));

    SeededRng rng(seed);
    Rational worst_diff(0);
    long long bad = 0;
    for (int s = 0; s < sample_count; ++s) {
        std::array<Rational, 3> x, w;
        for (auto& v : x) v = make_rational(static_cast<long>(rng.index_below(1001)), 1000);
        for (auto& v : w) v = make_rational(static_cast<long>(rng.index_below(1001)), 1000);

        for (Mode mode : {Mode::Probability, Mode::Triangle}) {
            Rational alpha = alpha_for(mode);
            auto omega_at = [&](std::array<int, 3> perm) {
                TripleWeights wm{w[perm[0]], w[perm[1]], w[perm[2]]};
                TripleWeights wpl{1 - wm.ij, 1 - wm.jk, 1 - wm.ki};
                XTriple xt{x[perm[0]], x[perm[1]], x[perm[2]]};
                return omega(xt, wm, wpl, mode, alpha);
            };
            Rational base = omega_at({0, 1, 2});
            ++report.checked_points;
            for (std::array<int, 3> perm : {std::array<int, 3>{2, 0, 1},
                                            std::array<int, 3>{1, 2, 0},
                                            std::array<int, 3>{1, 0, 2}}) {
                Rational diff = abs(omega_at(perm) - base);
                if (diff > worst_diff) worst_diff = diff;
                if (diff != 0) {
                    ++bad;
                    if (report.mismatches.size() < 20)
                        report.mismatches.push_back(
                            {"permutation (" + std::to_string(perm[0]) + "," +
                                 std::to_string(perm[1]) + "," + std::to_string(perm[2]) +
                                 ") at w=" + triple_str(w[0], w[1], w[2]) + " x=" +
                                 triple_str(x[0], x[1], x[2]) + " mode=" +
                                 std::string(mode_name(mode)),
                             "0", format_rational(diff)});
                }
            }
        }
    }
    report.worst_value = worst_diff;
    report.worst_x = "-";
    report.worst_w = "-";
    report.stats.emplace_back("violations", std::to_string(bad));
    report.pass = bad == 0;
    return report;
}

}  // namespace wcc
