#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wcc {

// Exact rational scalar. mpq_class keeps values in lowest terms with a
// positive denominator; every operation below is exact.
using Rational = mpq_class;

// Raised for malformed input, constraint violations and guard overruns.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts `p/q`, plain integers, and finite decimals (e.g. 0.35 -> 7/20).
Rational parse_rational(std::string_view text);

// `p/q`, or just `p` when the denominator is 1.
std::string format_rational(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace wcc
