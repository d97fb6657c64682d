#pragma once

#include <utility>

#include "rnagell/padic.hpp"
#include "rnagell/quadratic_ring.hpp"

namespace rnagell {

/// The integer components of (1 + sqrt(-7))^d = A_d + B_d * sqrt(-7):
///   A_d = sum_j C(d, 2j)   * (-7)^j   (even-indexed terms)
///   B_d = sum_j C(d, 2j+1) * (-7)^j   (odd-indexed terms)
struct BinomialPair {
    long d;
    Integer a_part;
    Integer b_part;
};

/// Direct summation with exact binomial coefficients, maintained by the
/// running product C(d, k+1) = C(d, k) * (d - k) / (k + 1).
inline BinomialPair binom_sums(long d) {
    if (d < 1)
        throw std::invalid_argument("binom_sums: d must be positive");
    Integer a_part = 0, b_part = 0;
    Integer binom = 1;   // C(d, k)
    Integer pow7 = 1;    // (-7)^floor(k/2)
    for (long k = 0; k <= d; ++k) {
        if (k % 2 == 0) {
            a_part += binom * pow7;
        } else {
            b_part += binom * pow7;
            pow7 *= -7;
        }
        binom = binom * (d - k) / (k + 1);
    }
    return {d, std::move(a_part), std::move(b_part)};
}

/// A'_d = (1 - A_d) / 7. Integral for every d >= 1: the j = 0 term of A_d
/// is 1 and every other even-indexed term carries a factor of 7.
inline Integer a_prime(long d) {
    const Integer t = 1 - binom_sums(d).a_part;
    if (t % 7 != 0)
        throw std::logic_error("a_prime: 7 does not divide 1 - A_d; implementation bug");
    return t / 7;
}

/// theta^m - theta'^m written as s * sqrt(-7), together with B_m. The two
/// are tied by the unconditional identity B_m = s * 2^(m-1); the equation
/// theta^m - theta'^m = -sqrt(-7) holds exactly when B_m = -2^(m-1).
struct ThetaDifference {
    Integer b_m;         // odd-indexed binomial sum B_m
    Integer sqrt_coeff;  // s with theta^m - theta'^m = s * sqrt(-7)
};

inline ThetaDifference theta_difference_via_B(long m) {
    if (m < 1 || m % 2 == 0)
        throw std::invalid_argument("theta_difference_via_B: m must be odd and positive");
    Integer b_m = binom_sums(m).b_part;

    const QuadInt diff =
        q7::theta().pow(static_cast<unsigned long>(m)) -
        q7::theta_prime().pow(static_cast<unsigned long>(m));
    // A trace-zero element of Z[w] is s * (2w - 1): coordinates (-s, 2s).
    if (diff.trace() != 0 || diff.b() % 2 != 0)
        throw std::logic_error("theta_difference_via_B: difference is not a sqrt(-7) multiple");
    Integer s = diff.b() / 2;
    if (diff.a() != -s)
        throw std::logic_error("theta_difference_via_B: difference is not a sqrt(-7) multiple");
    return {std::move(b_m), std::move(s)};
}

/**
 * The unconditional precursor of the trace identity P * B_d = 1 - 7A'_d - 2^d:
 *
 *   2^d * (theta^(m1+d) - theta'^(m1+d))
 *     = A_d * (theta^m1 - theta'^m1) + Tr(theta^m1) * B_d * (2w - 1),
 *
 * checked exactly as an equality of ring elements. The conditional identity
 * follows when both exponents satisfy the theta equation.
 */
inline bool shift_identity_check(long m1, long d) {
    if (m1 < 3 || m1 % 2 == 0)
        throw std::invalid_argument("shift_identity_check: m1 must be odd and >= 3");
    if (d < 1)
        throw std::invalid_argument("shift_identity_check: d must be positive");

    const RingParams& p = q7::params();
    const QuadInt theta = q7::theta();
    const QuadInt theta_p = q7::theta_prime();
    const BinomialPair bp = binom_sums(d);

    const QuadInt lhs =
        QuadInt::from_integer(Integer(1) << static_cast<unsigned long>(d), p) *
        (theta.pow(static_cast<unsigned long>(m1 + d)) -
         theta_p.pow(static_cast<unsigned long>(m1 + d)));

    const QuadInt pow_m1 = theta.pow(static_cast<unsigned long>(m1));
    const QuadInt rhs =
        QuadInt::from_integer(bp.a_part, p) *
            (pow_m1 - theta_p.pow(static_cast<unsigned long>(m1))) +
        QuadInt::from_integer(pow_m1.trace() * bp.b_part, p) * q7::sqrt_minus_seven();

    return lhs == rhs;
}

/// (v7(B_d), v7(d)). The engine asserts equality for the d it consumes.
inline std::pair<Valuation, Valuation> valuation_lemma_B(long d) {
    const BinomialPair bp = binom_sums(d);
    return {v_p(7, bp.b_part), v_p(7, Integer(d))};
}

/// True iff 7^(v7(d)) divides A'_d.
inline bool valuation_lemma_A_prime(long d) {
    const unsigned long l = v_p(7, Integer(d)).value();
    const Integer ap = a_prime(d);
    if (ap == 0)
        return true;
    return ap % pow_integer(7, l) == 0;
}

}  // namespace rnagell
