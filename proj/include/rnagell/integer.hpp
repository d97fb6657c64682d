#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rnagell {

using Integer = mpz_class;

/// Floor of the square root, by Newton iteration on integers.
/// The result r is certified by the post-check r^2 <= v < (r+1)^2;
/// no floating point is involved at any step.
inline Integer isqrt(const Integer& v) {
    if (v < 0)
        throw std::domain_error("isqrt: negative input");
    if (v == 0)
        return 0;
    // Start from 2^ceil(bits/2) >= sqrt(v); iterates decrease toward the root.
    const std::size_t bits = mpz_sizeinbase(v.get_mpz_t(), 2);
    Integer x = Integer(1) << static_cast<unsigned long>((bits + 1) / 2);
    for (;;) {
        Integer y = (x + v / x) >> 1;
        if (y >= x)
            break;
        x = y;
    }
    if (!(x * x <= v && v < (x + 1) * (x + 1)))
        throw std::logic_error("isqrt: post-check failed");
    return x;
}

inline bool is_perfect_square(const Integer& v) {
    if (v < 0)
        return false;
    const Integer r = isqrt(v);
    return r * r == v;
}

inline bool is_power_of_two(const Integer& v) {
    return v > 0 && mpz_popcount(v.get_mpz_t()) == 1;
}

/// Exponent k with v = 2^k. Only valid when is_power_of_two(v).
inline unsigned long log2_exact(const Integer& v) {
    if (!is_power_of_two(v))
        throw std::domain_error("log2_exact: not a power of two");
    return mpz_scan1(v.get_mpz_t(), 0);
}

/// Primality by trial division. The primes this project feeds in are
/// single-digit; correctness matters here, speed does not.
inline bool is_prime(const Integer& n) {
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (n % 2 == 0)
        return false;
    for (Integer i = 3; i * i <= n; i += 2)
        if (n % i == 0)
            return false;
    return true;
}

inline Integer pow_integer(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

}  // namespace rnagell
