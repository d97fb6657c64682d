#pragma once

#include <ostream>
#include <stdexcept>

#include "rnagell/integer.hpp"

namespace rnagell {

/**
 * A p-adic valuation: a non-negative integer, or INFINITE for the input 0.
 * INFINITE compares greater than every finite value and absorbs addition.
 */
class Valuation {
public:
    static Valuation finite(unsigned long v) { return Valuation(false, v); }
    static Valuation infinite() { return Valuation(true, 0); }

    bool is_infinite() const noexcept { return infinite_; }

    unsigned long value() const {
        if (infinite_)
            throw std::domain_error("Valuation: no finite value, input was 0");
        return value_;
    }

    bool operator==(const Valuation& o) const {
        return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
    }
    bool operator!=(const Valuation& o) const { return !(*this == o); }
    bool operator<(const Valuation& o) const {
        if (infinite_)
            return false;
        if (o.infinite_)
            return true;
        return value_ < o.value_;
    }
    bool operator<=(const Valuation& o) const { return *this < o || *this == o; }
    bool operator>(const Valuation& o) const { return o < *this; }
    bool operator>=(const Valuation& o) const { return o <= *this; }

    bool operator==(unsigned long v) const { return !infinite_ && value_ == v; }
    bool operator>=(unsigned long v) const { return infinite_ || value_ >= v; }
    bool operator<(unsigned long v) const { return !infinite_ && value_ < v; }

    Valuation operator+(const Valuation& o) const {
        if (infinite_ || o.infinite_)
            return infinite();
        return finite(value_ + o.value_);
    }
    Valuation operator+(unsigned long v) const {
        return infinite_ ? infinite() : finite(value_ + v);
    }

    friend Valuation min(const Valuation& x, const Valuation& y) { return x < y ? x : y; }

    friend std::ostream& operator<<(std::ostream& os, const Valuation& v) {
        if (v.infinite_)
            return os << "infinity";
        return os << v.value_;
    }

private:
    Valuation(bool inf, unsigned long v) : infinite_(inf), value_(v) {}
    bool infinite_;
    unsigned long value_;
};

/// Exact exponent of the prime p in n (computed on |n|); INFINITE for n = 0.
inline Valuation v_p(const Integer& p, const Integer& n) {
    if (!is_prime(p))
        throw std::invalid_argument("v_p: p is not prime");
    if (n == 0)
        return Valuation::infinite();
    Integer m = abs(n);
    unsigned long v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return Valuation::finite(v);
}

/**
 * Lifting the Exponent for an odd prime p with p | a - 1:
 *
 *     v_p(a^n - 1) = v_p(a - 1) + v_p(n).
 *
 * The formula result is verified against a direct factor-out of a^n - 1
 * whenever the power fits the budget, and the two must agree exactly.
 */
inline Valuation lte_pow_sub_one(const Integer& p, const Integer& a, unsigned long n) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("lte_pow_sub_one: p must be an odd prime");
    if (n == 0)
        throw std::invalid_argument("lte_pow_sub_one: n must be positive");
    if ((a - 1) % p != 0)
        throw std::invalid_argument("lte_pow_sub_one: p does not divide a - 1");
    if (a % p == 0)
        throw std::invalid_argument("lte_pow_sub_one: p divides a");

    const Valuation result = v_p(p, a - 1) + v_p(p, Integer(n));

    // Direct verification when a^n stays below ~4M bits.
    const std::size_t bits = mpz_sizeinbase(a.get_mpz_t(), 2);
    if (bits * n <= 4'000'000) {
        const Valuation direct = v_p(p, pow_integer(a, n) - 1);
        if (direct != result)
            throw std::logic_error("lte_pow_sub_one: formula disagrees with direct computation");
    }
    return result;
}

/// base^exp mod modulus in [0, modulus), by binary exponentiation.
inline Integer pow_mod(const Integer& base, unsigned long exp, const Integer& modulus) {
    if (modulus < 1)
        throw std::invalid_argument("pow_mod: modulus must be positive");
    Integer result = 1 % modulus;
    Integer b = base % modulus;
    if (b < 0)
        b += modulus;
    while (exp > 0) {
        if (exp & 1)
            result = result * b % modulus;
        b = b * b % modulus;
        exp >>= 1;
    }
    return result;
}

}  // namespace rnagell
