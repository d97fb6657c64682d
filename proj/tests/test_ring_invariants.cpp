#include <catch2/catch_amalgamated.hpp>

#include "rnagell/ring_invariants.hpp"
#include "support.hpp"

using namespace rnagell;

namespace {

/// Oracle: discriminant as the determinant of the trace matrix
/// [[Tr(1), Tr(w)], [Tr(w), Tr(w^2)]], computed through ring operations.
Integer disc_via_trace_matrix(const RingParams& p) {
    const QuadInt one = QuadInt::one(p);
    const QuadInt w = QuadInt::omega(p);
    const Integer t1 = one.trace();
    const Integer tw = w.trace();
    const Integer tww = (w * w).trace();
    return t1 * tww - tw * tw;
}

/// Oracle: all norm-1 elements with coordinates in [-2, 2].
std::vector<QuadInt> units_brute_force(const RingParams& p) {
    std::vector<QuadInt> out;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) {
            QuadInt x(a, b, p);
            if (x.norm() == 1)
                out.push_back(x);
        }
    return out;
}

}  // namespace

TEST_CASE("discriminant") {
    CHECK(discriminant(RingParams(-2, 1)) == -7);
    CHECK(discriminant(RingParams(-7, 0)) == -28);
    CHECK(discriminant(RingParams(-1, 1)) == -3);
    for (const RingParams& p : {RingParams(-2, 1), RingParams(-7, 0), RingParams(-1, 1)})
        CHECK(discriminant(p) == disc_via_trace_matrix(p));
}

TEST_CASE("unit enumeration") {
    const UnitSet rn = enumerate_units(RingParams(-2, 1));
    REQUIRE(rn.size() == 2);
    CHECK(rn.contains(QuadInt::one(RingParams(-2, 1))));
    CHECK(rn.contains(-QuadInt::one(RingParams(-2, 1))));

    const UnitSet gauss = enumerate_units(RingParams(-1, 0));
    CHECK(gauss.size() == 4);
    const UnitSet eisenstein = enumerate_units(RingParams(-1, 1));
    CHECK(eisenstein.size() == 6);

    for (const RingParams& p : {RingParams(-2, 1), RingParams(-1, 0), RingParams(-1, 1)}) {
        const UnitSet units = enumerate_units(p);
        const std::vector<QuadInt> brute = units_brute_force(p);
        REQUIRE(units.size() == brute.size());
        for (const QuadInt& u : brute)
            CHECK(units.contains(u));
    }

    CHECK_THROWS_AS(enumerate_units(RingParams(5, 1)), std::invalid_argument);
}

TEST_CASE("unit sets are groups") {
    for (const RingParams& p : {RingParams(-2, 1), RingParams(-1, 0), RingParams(-1, 1)}) {
        const UnitSet units = enumerate_units(p);
        for (const QuadInt& u : units.elements) {
            CHECK(u.norm() == 1);
            CHECK(units.contains(-u));
            bool has_inverse = false;
            for (const QuadInt& v : units.elements) {
                CHECK(units.contains(u * v));
                has_inverse = has_inverse || u * v == QuadInt::one(p);
            }
            CHECK(has_inverse);
        }
    }
}

TEST_CASE("irreducibility by prime norm") {
    CHECK(irreducible_by_norm(q7::theta()));
    CHECK(irreducible_by_norm(q7::theta_prime()));
    CHECK_FALSE(irreducible_by_norm(QuadInt(2, 0, q7::params())));  // 2 = theta * theta'

    // Oracle: no factorization x = y*z with both norms strictly between
    // 1 and N(x) exists, by scanning all small-coordinate candidates.
    for (const QuadInt& x : {q7::theta(), q7::theta_prime(), q7::sqrt_minus_seven()}) {
        REQUIRE(irreducible_by_norm(x));
        const Integer nx = x.norm();
        for (long a = -5; a <= 5; ++a)
            for (long b = -5; b <= 5; ++b) {
                const QuadInt y(a, b, q7::params());
                const Integer ny = y.norm();
                if (ny <= 1 || ny >= nx)
                    continue;
                const auto z = exact_div(x, y);
                if (z.has_value())
                    CHECK(z->norm() <= 1);
            }
    }
}

TEST_CASE("association") {
    CHECK(associated(q7::theta(), q7::theta()));
    CHECK_FALSE(associated(q7::theta(), q7::theta_prime()));
    CHECK(associated(q7::theta(), -q7::theta()));

    const RingParams other(-1, 0);
    CHECK_THROWS_AS(associated(q7::theta(), QuadInt(0, 1, other)), std::invalid_argument);

    // Equivalence relation on a finite sample.
    const std::vector<QuadInt> sample = {
        q7::theta(),  q7::theta_prime(),      -q7::theta(),       -q7::theta_prime(),
        QuadInt::one(q7::params()), QuadInt(2, 0, q7::params()), q7::theta().pow(2),
        q7::sqrt_minus_seven()};
    for (const QuadInt& x : sample) {
        CHECK(associated(x, x));
        for (const QuadInt& y : sample) {
            CHECK(associated(x, y) == associated(y, x));
            for (const QuadInt& z : sample)
                if (associated(x, y) && associated(y, z))
                    CHECK(associated(x, z));
        }
    }
}

TEST_CASE("Minkowski hypothesis check") {
    CHECK(minkowski_pid_check(RingParams(-2, 1)));   // |disc| = 7 < pi^2
    CHECK(minkowski_pid_check(RingParams(-1, 0)));   // |disc| = 4
    CHECK(minkowski_pid_check(RingParams(-2, 0)));   // |disc| = 8
    CHECK_FALSE(minkowski_pid_check(RingParams(-3, 1)));  // |disc| = 11 > pi^2
    CHECK_FALSE(minkowski_pid_check(RingParams(-3, 0)));  // |disc| = 12
    CHECK_THROWS_AS(minkowski_pid_check(RingParams(5, 1)), std::invalid_argument);
}

TEST_CASE("invariant chain for the Ramanujan-Nagell order") {
    const RingParams p(-2, 1);
    CHECK(discriminant(p) == -7);
    CHECK(minkowski_pid_check(p));
    CHECK(enumerate_units(p).size() == 2);
    CHECK(irreducible_by_norm(q7::theta()));
    CHECK(irreducible_by_norm(q7::theta_prime()));
    CHECK_FALSE(associated(q7::theta(), q7::theta_prime()));
}
