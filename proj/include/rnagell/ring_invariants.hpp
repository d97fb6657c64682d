#pragma once

#include <algorithm>
#include <vector>

#include "rnagell/quadratic_ring.hpp"

namespace rnagell {

/// Discriminant of the basis {1, w}; also the determinant of the trace matrix
/// [[Tr(1), Tr(w)], [Tr(w), Tr(w^2)]].
inline Integer discriminant(const RingParams& p) { return p.form_discriminant(); }

/// The full unit group of an imaginary quadratic order, as an explicit list.
/// Every element has norm 1 and the set is closed under negation.
struct UnitSet {
    std::vector<QuadInt> elements;

    bool contains(const QuadInt& x) const {
        return std::find(elements.begin(), elements.end(), x) != elements.end();
    }
    std::size_t size() const { return elements.size(); }
};

/**
 * Enumerates all solutions of N(a + bw) = a^2 + e*a*b - d*b^2 = 1.
 *
 * Requires a negative discriminant, so the norm form is positive definite
 * and the solutions lie inside an ellipse: 4*N = (2a + eb)^2 + |disc| b^2,
 * hence |disc| * b^2 <= 4. For each admissible b the quadratic in a is
 * solved exactly (integer square root plus a parity check).
 */
inline UnitSet enumerate_units(const RingParams& p) {
    const Integer disc = discriminant(p);
    if (disc >= 0)
        throw std::invalid_argument(
            "enumerate_units: non-negative discriminant; the unit group is infinite");
    const Integer abs_disc = -disc;

    std::vector<QuadInt> found;
    for (Integer b = 0; b * b * abs_disc <= 4; ++b) {
        for (int sign = 0; sign < 2; ++sign) {
            if (sign == 1 && b == 0)
                continue;
            const Integer bb = (sign == 0) ? b : Integer(-b);
            // a^2 + (e*bb)*a - (d*bb^2 + 1) = 0, solved over Z.
            const Integer delta = disc * bb * bb + 4;
            if (delta < 0 || !is_perfect_square(delta))
                continue;
            const Integer r = isqrt(delta);
            for (const Integer& root : {r, Integer(-r)}) {
                const Integer num = -p.e() * bb + root;
                if (num % 2 == 0)
                    found.emplace_back(num / 2, bb, p);
                if (r == 0)
                    break;
            }
        }
    }

    std::sort(found.begin(), found.end(), [](const QuadInt& x, const QuadInt& y) {
        return x.a() != y.a() ? x.a() < y.a() : x.b() < y.b();
    });
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return UnitSet{std::move(found)};
}

/**
 * Irreducibility certificate by prime norm: when |N(x)| is a rational prime,
 * any factorization x = y*z forces N(y) = 1 or N(z) = 1, i.e. a unit factor.
 * A false return means "not certified by this criterion", not "reducible".
 */
inline bool irreducible_by_norm(const QuadInt& x) {
    if (discriminant(x.params()) >= 0)
        throw std::invalid_argument("irreducible_by_norm: requires negative discriminant");
    return is_prime(abs(x.norm()));
}

/// True iff x = u*y for some unit u of the (shared) presentation.
inline bool associated(const QuadInt& x, const QuadInt& y) {
    if (x.params() != y.params())
        throw std::invalid_argument("associated: mismatched ring presentations");
    const UnitSet units = enumerate_units(x.params());
    return std::any_of(units.elements.begin(), units.elements.end(),
                       [&](const QuadInt& u) { return x == u * y; });
}

/**
 * Minkowski hypothesis check: |disc| < pi^2, which makes the Minkowski bound
 * (2/pi)*sqrt(|disc|) < 2 and forces class number 1. Decided exactly through
 * the rational lower bound pi > 333/106: |disc| * 106^2 < 333^2 implies the
 * inequality with no floating point. A false return is inconclusive.
 */
inline bool minkowski_pid_check(const RingParams& p) {
    const Integer disc = discriminant(p);
    if (disc >= 0)
        throw std::invalid_argument("minkowski_pid_check: requires negative discriminant");
    return -disc * (106 * 106) < 333 * 333;
}

}  // namespace rnagell
