#pragma once

#include <random>

#include "rnagell/rnagell.hpp"

namespace rnagell_test {

using rnagell::Integer;
using rnagell::QuadInt;
using rnagell::RingParams;

inline Integer random_integer(std::mt19937_64& rng, int words = 4) {
    Integer v = 0;
    for (int i = 0; i < words; ++i) {
        v <<= 64;
        v += Integer(static_cast<unsigned long>(rng()));
    }
    if (rng() & 1)
        v = -v;
    return v;
}

inline QuadInt random_quadint(std::mt19937_64& rng, const RingParams& p, int words = 4) {
    return QuadInt(random_integer(rng, words), random_integer(rng, words), p);
}

/// Oracle: x^m by plain repeated multiplication, independent of QuadInt::pow.
inline QuadInt naive_pow(const QuadInt& x, unsigned long m) {
    QuadInt r = QuadInt::one(x.params());
    for (unsigned long i = 0; i < m; ++i)
        r = r * x;
    return r;
}

/// Oracle: factor p out of |n| by repeated division, independent of v_p.
inline unsigned long factor_out(const Integer& p, Integer n) {
    n = abs(n);
    unsigned long v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace rnagell_test
