#pragma once

#include <string_view>

#include "wcc/rational.hpp"

namespace wcc {

// Which membership-probability map the pivot algorithm uses:
//   Probability: f-(w) = w            (probability-constrained instances)
//   Triangle:    f-(w) = h(w)         (probability + triangle instances)
// In both, f+(w) = 1 - f-(w).
enum class Mode { Probability, Triangle };

std::string_view mode_name(Mode mode);
Mode mode_from_name(std::string_view name);

// Piecewise-linear rounding map on [0,1]:
//   0 on [0, 7/20], (25/7)w - 5/4 on [7/20, 63/100], 1 on [63/100, 1].
Rational rounding_h(const Rational& w);

Rational f_minus(const Rational& w_minus, Mode mode);
Rational f_plus(const Rational& w_minus, Mode mode);

inline const Rational& h_breakpoint_lo() {
    static const Rational v = make_rational(7, 20);
    return v;
}
inline const Rational& h_breakpoint_hi() {
    static const Rational v = make_rational(63, 100);
    return v;
}

}  // namespace wcc
