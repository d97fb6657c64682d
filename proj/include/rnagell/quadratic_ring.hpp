#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "rnagell/integer.hpp"

namespace rnagell {

/**
 * Presentation (d, e) of a quadratic order Z[w] with w^2 = d + e*w.
 *
 * The form discriminant e^2 + 4d must not be a perfect square; otherwise
 * t^2 - e*t - d splits over Z and the ring degenerates. Construction
 * rejects such presentations.
 */
class RingParams {
public:
    RingParams(Integer d, Integer e) : d_(std::move(d)), e_(std::move(e)) {
        if (is_perfect_square(e_ * e_ + 4 * d_))
            throw std::invalid_argument(
                "RingParams: e^2 + 4d is a perfect square; Z[w] is not a rank-2 domain");
    }

    const Integer& d() const noexcept { return d_; }
    const Integer& e() const noexcept { return e_; }

    /// Discriminant of the basis {1, w}: e^2 + 4d.
    Integer form_discriminant() const { return e_ * e_ + 4 * d_; }

    bool operator==(const RingParams& o) const { return d_ == o.d_ && e_ == o.e_; }
    bool operator!=(const RingParams& o) const { return !(*this == o); }

private:
    Integer d_, e_;
};

/**
 * An element a + b*w of Z[w], carrying its presentation.
 *
 * Values are immutable after construction; all operations are pure and
 * return fresh values, so elements may be shared freely between threads.
 * Arithmetic between elements of different presentations is a hard error.
 */
class QuadInt {
public:
    QuadInt(Integer a, Integer b, RingParams params)
        : a_(std::move(a)), b_(std::move(b)), params_(std::move(params)) {}

    static QuadInt zero(const RingParams& p) { return QuadInt(0, 0, p); }
    static QuadInt one(const RingParams& p) { return QuadInt(1, 0, p); }
    static QuadInt omega(const RingParams& p) { return QuadInt(0, 1, p); }
    static QuadInt from_integer(Integer n, const RingParams& p) {
        return QuadInt(std::move(n), 0, p);
    }

    const Integer& a() const noexcept { return a_; }
    const Integer& b() const noexcept { return b_; }
    const RingParams& params() const noexcept { return params_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// Elements are equal iff they share a presentation and have equal coordinates.
    bool operator==(const QuadInt& o) const {
        return params_ == o.params_ && a_ == o.a_ && b_ == o.b_;
    }
    bool operator!=(const QuadInt& o) const { return !(*this == o); }

    QuadInt operator-() const { return QuadInt(-a_, -b_, params_); }

    QuadInt operator+(const QuadInt& o) const {
        require_same_params(o);
        return QuadInt(a_ + o.a_, b_ + o.b_, params_);
    }

    QuadInt operator-(const QuadInt& o) const {
        require_same_params(o);
        return QuadInt(a_ - o.a_, b_ - o.b_, params_);
    }

    /// Product, rewriting w^2 = d + e*w:
    /// (a1 + b1 w)(a2 + b2 w) = (a1 a2 + d b1 b2) + (a1 b2 + a2 b1 + e b1 b2) w.
    QuadInt operator*(const QuadInt& o) const {
        require_same_params(o);
        const Integer cross = b_ * o.b_;
        return QuadInt(a_ * o.a_ + params_.d() * cross,
                       a_ * o.b_ + o.a_ * b_ + params_.e() * cross, params_);
    }

    /// Galois conjugate: sends w to the other root e - w of t^2 - e*t - d.
    QuadInt conj() const { return QuadInt(a_ + params_.e() * b_, -b_, params_); }

    /// N(a + bw) = a^2 + e*a*b - d*b^2; equals x * conj(x) and is multiplicative.
    Integer norm() const {
        return a_ * a_ + params_.e() * a_ * b_ - params_.d() * b_ * b_;
    }

    /// Tr(a + bw) = 2a + e*b; the 1-coordinate of x + conj(x).
    Integer trace() const { return 2 * a_ + params_.e() * b_; }

    /// x^m by binary exponentiation; x^0 = 1.
    QuadInt pow(unsigned long m) const {
        QuadInt result = one(params_);
        QuadInt base = *this;
        while (m > 0) {
            if (m & 1)
                result = result * base;
            base = base * base;
            m >>= 1;
        }
        return result;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadInt& x) {
        return os << "(" << x.a_ << ", " << x.b_ << ")";
    }

private:
    void require_same_params(const QuadInt& o) const {
        if (params_ != o.params_)
            throw std::invalid_argument("QuadInt: mismatched ring presentations");
    }

    Integer a_, b_;
    RingParams params_;
};

/**
 * Exact division in Z[w] via the conjugate trick: q = x * conj(y) / N(y),
 * returned only when both coordinates of the rational quotient are integral.
 * Since the presentation is non-degenerate, N(y) = 0 only for y = 0.
 */
inline std::optional<QuadInt> exact_div(const QuadInt& x, const QuadInt& y) {
    if (x.params() != y.params())
        throw std::invalid_argument("exact_div: mismatched ring presentations");
    if (y.is_zero())
        throw std::domain_error("exact_div: division by zero");
    const Integer n = y.norm();
    const QuadInt z = x * y.conj();
    if (z.a() % n != 0 || z.b() % n != 0)
        return std::nullopt;
    return QuadInt(z.a() / n, z.b() / n, x.params());
}

inline bool divides(const QuadInt& y, const QuadInt& x) {
    return exact_div(x, y).has_value();
}

/// The ring Z[(1 + sqrt(-7))/2], presented as w^2 = -2 + w. Its generator
/// theta and the conjugate theta' = 1 - theta satisfy theta*theta' = 2 and
/// theta - theta' = sqrt(-7).
namespace q7 {

inline const RingParams& params() {
    static const RingParams p(-2, 1);
    return p;
}

inline QuadInt theta() { return QuadInt(0, 1, params()); }
inline QuadInt theta_prime() { return QuadInt(1, -1, params()); }
inline QuadInt sqrt_minus_seven() { return QuadInt(-1, 2, params()); }

}  // namespace q7

}  // namespace rnagell
