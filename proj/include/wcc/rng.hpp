#pragma once

#include <cstdint>
#include <random>

#include "wcc/rational.hpp"

namespace wcc {

inline uint64_t splitmix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seeded deterministic source. mt19937_64 is fully specified by the
// standard, so identical seeds give identical streams on every platform.
class SeededRng {
public:
    explicit SeededRng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // One draw mapped to {0, ..., n-1} by 128-bit multiply-shift.
    size_t index_below(size_t n) {
        uint64_t u = next_u64();
        return static_cast<size_t>((static_cast<unsigned __int128>(u) * n) >> 64);
    }

    // One draw u, joined iff u/2^64 < p, compared exactly. Probabilities 0
    // and 1 are therefore never and always taken, respectively.
    bool bernoulli(const Rational& p) {
        uint64_t u = next_u64();
        mpz_class lhs = mpz_class(static_cast<unsigned long>(u)) * p.get_den();
        mpz_class rhs = p.get_num();
        rhs <<= 64;
        return lhs < rhs;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace wcc
