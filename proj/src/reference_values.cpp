// Reference values for the rounding certificate: the breakpoint-grid omega
// table and the tight-slice case maxima. Embedded comparison targets for
// the verifier, never recomputed here.

#include "wcc/certificate.hpp"

namespace wcc::reference {

const std::array<std::array<int, 3>, 5>& l_vertices() {
    static const std::array<std::array<int, 3>, 5> v = {{
        {0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1},
    }};
    return v;
}

const std::array<std::array<int, 3>, 4>& lt_vertices() {
    static const std::array<std::array<int, 3>, 4> v = {{
        {0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1},
    }};
    return v;
}

namespace {

Rational q(const char* s) { return parse_rational(s); }

Table2Row row(const char* w1, const char* w2, const char* w3, const char* v0, const char* v1,
              const char* v2, const char* v3) {
    return Table2Row{{q(w1), q(w2), q(w3)}, {q(v0), q(v1), q(v2), q(v3)}};
}

TightCase tc(int c1, int c2, int c3, std::array<int, 3> x, const char* a1, const char* a2,
             const char* a3, const char* mx) {
    return TightCase{{c1, c2, c3}, x, {q(a1), q(a2), q(a3)}, q(mx)};
}

}  // namespace

const std::vector<Table2Row>& table2() {
    // Rows in lexicographic weight order; columns follow lt_vertices().
    static const std::vector<Table2Row> t = {
        row("0", "0", "0", "0", "-16/5", "-16/5", "-24/5"),
        row("0", "7/20", "7/20", "-21/50", "-5/2", "-69/50", "-149/50"),
        row("0", "63/100", "63/100", "-319/250", "-43/50", "-111/250", "-111/250"),
        row("0", "1", "1", "-16/5", "-8/5", "0", "0"),
        row("7/20", "0", "7/20", "-21/50", "-5/2", "-5/2", "-149/50"),
        row("7/20", "7/20", "0", "-21/50", "-69/50", "-5/2", "-149/50"),
        row("7/20", "7/20", "7/20", "-63/100", "-159/100", "-159/100", "-207/100"),
        row("7/20", "7/20", "63/100", "-99/500", "-579/500", "-131/500", "-371/500"),
        row("7/20", "63/100", "7/20", "-99/500", "-131/500", "-131/500", "-371/500"),
        row("7/20", "63/100", "63/100", "-319/250", "-43/50", "-111/250", "-111/250"),
        row("7/20", "1", "1", "-16/5", "-8/5", "0", "0"),
        row("63/100", "0", "63/100", "-319/250", "-43/50", "-43/50", "-111/250"),
        row("63/100", "7/20", "7/20", "-99/500", "-131/500", "-579/500", "-371/500"),
        row("63/100", "7/20", "63/100", "-319/250", "-43/50", "-43/50", "-111/250"),
        row("63/100", "63/100", "0", "-319/250", "-111/250", "-43/50", "-111/250"),
        row("63/100", "63/100", "7/20", "-319/250", "-111/250", "-43/50", "-111/250"),
        row("63/100", "63/100", "63/100", "0", "0", "0", "0"),
        row("63/100", "63/100", "1", "0", "0", "0", "0"),
        row("63/100", "1", "63/100", "0", "0", "0", "0"),
        row("63/100", "1", "1", "0", "0", "0", "0"),
        row("1", "0", "1", "-16/5", "-8/5", "-8/5", "0"),
        row("1", "7/20", "1", "-16/5", "-8/5", "-8/5", "0"),
        row("1", "63/100", "63/100", "0", "0", "0", "0"),
        row("1", "63/100", "1", "0", "0", "0", "0"),
        row("1", "1", "0", "-16/5", "0", "-8/5", "0"),
        row("1", "1", "7/20", "-16/5", "0", "-8/5", "0"),
        row("1", "1", "63/100", "0", "0", "0", "0"),
        row("1", "1", "1", "0", "0", "0", "0"),
    };
    return t;
}

const std::vector<TightCase>& tight_cases() {
    constexpr std::array<int, 3> x000 = {0, 0, 0};
    constexpr std::array<int, 3> x110 = {1, 1, 0};
    constexpr std::array<int, 3> x011 = {0, 1, 1};
    constexpr std::array<int, 3> x111 = {1, 1, 1};
    static const std::vector<TightCase> t = {
        tc(1, 1, 1, x000, "0", "0", "0", "0"),
        tc(1, 1, 1, x110, "0", "7/20", "7/20", "-5/2"),
        tc(1, 1, 1, x011, "0", "7/20", "7/20", "-69/50"),
        tc(1, 1, 1, x111, "0", "7/20", "7/20", "-149/50"),

        tc(1, 1, 2, x000, "241/1000", "7/20", "591/1000", "-719/140000"),
        tc(1, 1, 2, x110, "7/25", "7/20", "63/100", "-6/5"),
        tc(1, 1, 2, x011, "7/25", "7/20", "63/100", "-2/25"),
        tc(1, 1, 2, x111, "7/25", "7/20", "63/100", "-98/125"),

        tc(1, 1, 3, x000, "7/25", "7/20", "63/100", "-2/125"),
        tc(1, 1, 3, x110, "7/25", "7/20", "63/100", "-6/5"),
        tc(1, 1, 3, x011, "7/25", "7/20", "63/100", "-2/25"),
        tc(1, 1, 3, x111, "7/20", "7/20", "7/10", "-14/25"),

        tc(1, 2, 2, x000, "241/1000", "7/20", "591/1000", "-719/140000"),
        tc(1, 2, 2, x110, "0", "63/100", "63/100", "-43/50"),
        tc(1, 2, 2, x011, "21/100", "21/50", "63/100", "-69/2000"),
        tc(1, 2, 2, x111, "0", "63/100", "63/100", "-111/250"),

        tc(1, 2, 3, x000, "7/25", "7/20", "63/100", "-2/125"),
        tc(1, 2, 3, x110, "0", "63/100", "63/100", "-43/50"),
        tc(1, 2, 3, x011, "7/20", "903/2000", "1603/2000", "-513/80000"),
        tc(1, 2, 3, x111, "7/20", "1143/2000", "1843/2000", "-117351/560000"),

        tc(1, 3, 3, x000, "0", "63/100", "63/100", "-319/250"),
        tc(1, 3, 3, x110, "0", "63/100", "63/100", "-43/50"),
        tc(1, 3, 3, x011, "0", "1", "1", "0"),
        tc(1, 3, 3, x111, "0", "1", "1", "0"),

        tc(2, 1, 2, x000, "7/20", "241/1000", "591/1000", "-719/140000"),
        tc(2, 1, 2, x110, "63/100", "0", "63/100", "-43/50"),
        tc(2, 1, 2, x011, "7/20", "7/25", "63/100", "-38/125"),
        tc(2, 1, 2, x111, "63/100", "0", "63/100", "-111/250"),

        tc(2, 1, 3, x000, "7/20", "7/25", "63/100", "-2/125"),
        tc(2, 1, 3, x110, "63/100", "0", "63/100", "-43/50"),
        tc(2, 1, 3, x011, "7/20", "7/20", "7/10", "-2/25"),
        tc(2, 1, 3, x111, "1143/2000", "7/20", "1843/2000", "-117351/560000"),

        tc(2, 2, 3, x000, "7/20", "7/20", "7/10", "-6/25"),
        tc(2, 2, 3, x110, "7/20", "7/20", "7/10", "-6/5"),
        tc(2, 2, 3, x011, "7/20", "903/2000", "1603/2000", "-513/80000"),
        tc(2, 2, 3, x111, "1/2", "1/2", "1", "-247/3920"),

        tc(2, 3, 3, x000, "37/100", "63/100", "1", "-14547/7000"),
        tc(2, 3, 3, x110, "37/100", "63/100", "1", "-11843/7000"),
        tc(2, 3, 3, x011, "37/100", "63/100", "1", "-1443/7000"),
        tc(2, 3, 3, x111, "37/100", "63/100", "1", "-1443/7000"),

        tc(3, 1, 3, x000, "63/100", "0", "63/100", "-319/250"),
        tc(3, 1, 3, x110, "63/100", "0", "63/100", "-43/50"),
        tc(3, 1, 3, x011, "63/100", "7/20", "49/50", "-13/20"),
        tc(3, 1, 3, x111, "1", "0", "1", "0"),

        tc(3, 2, 3, x000, "63/100", "37/100", "1", "-14547/7000"),
        tc(3, 2, 3, x110, "63/100", "37/100", "1", "-11843/7000"),
        tc(3, 2, 3, x011, "63/100", "37/100", "1", "-4147/7000"),
        tc(3, 2, 3, x111, "63/100", "37/100", "1", "-1443/7000"),
    };
    return t;
}

}  // namespace wcc::reference
