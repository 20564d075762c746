#include "doctest.h"
#include "gln/params.hpp"
#include "gln/qfun.hpp"

#include <random>

using namespace gln;

TEST_CASE("pochhammer examples") {
    Rational x(2, 7), q(3, 5);
    CHECK(poch(x, q, 0) == Rational(1));
    CHECK(poch(x, q, 2) == (Rational(1) - x) * (Rational(1) - q * x));
    CHECK(poch(x, q, -1) == (Rational(1) - x / q).inv());
    CHECK(poch(x, q, -1) * poch(x / q, q, 1) == Rational(1));
    CHECK_THROWS(poch(q, q, -1));
}

TEST_CASE("pochhammer additivity") {
    std::mt19937_64 g(21);
    Rational q(-4, 3);
    for (int t = 0; t < 5; ++t) {
        Rational x = detail::draw_root<Rational>(g) * Rational(5, 11);
        for (int m = -4; m <= 4; ++m)
            for (int n = -4; n <= 4; ++n)
                CHECK(poch(x, q, m + n) == poch(x, q, m) * poch(x * power(q, m), q, n));
    }
}

TEST_CASE("brackets") {
    Rational ru(2, 3), rq(5, 7);
    Rational u = ru * ru, q = rq * rq;
    CHECK(bracket(ru, rq, 0) == Rational(1));
    CHECK(bracket(ru, rq, 1) == ru.inv() - ru);
    CHECK(bracket(ru, rq, 2) == (ru.inv() - ru) * (rq.inv() * ru.inv() - rq * ru));
    // the square has no roots left in it
    for (int n = -3; n <= 4; ++n) {
        Rational b = bracket(ru, rq, n);
        Rational sq_oracle = power(u, -n) * power(q, -n * (n - 1) / 2) * poch(u, q, n) * poch(u, q, n);
        CHECK(b * b == sq_oracle);
    }
    // [u;q]_n / [q^{1-n}/u;q]_n = (-1)^n, and [u;1/q]_n = [u q^{1-n};q]_n
    for (int n = 0; n <= 4; ++n) {
        Rational partner = power(rq, 1 - n) / ru;
        CHECK(bracket(ru, rq, n) / bracket(partner, rq, n) == sign_power<Rational>(n));
        CHECK(bracket(ru, rq.inv(), n) == bracket(ru * power(rq, 1 - n), rq, n));
    }
}

TEST_CASE("bracket ratios of finite length") {
    Rational ru(-3, 8), rq(4, 9);
    CHECK(bracket(ru, rq, 1) / bracket(ru, rq, 0) == bracket(ru, rq, 1));
    // [u;q]_3 = [u;q]_2 [q^2 u]_1
    CHECK(bracket(ru, rq, 3) == bracket(ru, rq, 2) * bracket(ru * rq * rq, rq, 1));
}

TEST_CASE("q-binomials and exponentials") {
    Rational q(2, 5);
    CHECK(qbinom(2, 1, q) == Rational(1) + q);
    CHECK(qbinom(6, 0, q) == Rational(1));
    CHECK(qbinom(3, 4, q) == Rational(0));
    // e_q(z) phi(z) = 1
    for (int n = 1; n <= 6; ++n) {
        Rational s(0);
        for (int k = 0; k <= n; ++k) s += eq_coeff(q, k) * phi_coeff(q, n - k);
        CHECK(s == Rational(0));
    }
    // phi(z) coefficients against the finite product (z;q)_n through degree n
    auto c = poch_poly(Rational(1), q, 3);
    CHECK(c[1] == -(Rational(1) + q + q * q));
    CHECK(qint_factorial_inv_base(q, 2) == Rational(1) + q.inv());
}
