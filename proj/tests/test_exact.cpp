#include "doctest.h"
#include "gln/params.hpp"

#include <random>

using namespace gln;

TEST_CASE("rational arithmetic stays reduced") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational::parse("6/8") == Rational(3, 4));
    CHECK(Rational(3, 4).inv() == Rational(4, 3));
    CHECK_THROWS(Rational(0).inv());
    CHECK(power(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("jet arithmetic") {
    Jet2 a = Jet2(1) + Jet2::h(), b = Jet2(1) - Jet2::h();
    CHECK(a * b == Jet2(1));
    Jet2 c(Rational(2), Rational(5));
    CHECK(c * c.inv() == Jet2(1));
    CHECK(Jet2(Rational(3), Rational(1)).slope() == Rational(1));
}

TEST_CASE("prime field inverses") {
    std::mt19937_64 g(11);
    for (int t = 0; t < 200; ++t) {
        ModP x = ModP::raw(1 + g() % (ModP::P - 1));
        CHECK(x * x.inv() == ModP(1));
    }
    CHECK(ModP(-1) + ModP(1) == ModP(0));
    CHECK(ModP(-1).value() == ModP::P - 1);
    CHECK(ModP::P == (std::uint64_t(1) << 61) - 1);
}

TEST_CASE("jet constant parts follow rational arithmetic") {
    std::mt19937_64 g(3);
    for (int seq = 0; seq < 1000; ++seq) {
        Rational r(1);
        Jet2 j(1);
        for (int step = 0; step < 6; ++step) {
            Rational x(1 + (long)(g() % 7), 1 + (long)(g() % 5));
            Jet2 jx(x, Rational((long)(g() % 9) - 4));
            switch (g() % 4) {
                case 0: r += x; j += jx; break;
                case 1: r -= x; j -= jx; break;
                case 2: r *= x; j *= jx; break;
                default: r /= x; j /= jx; break;
            }
        }
        REQUIRE(j.value() == r);
    }
}

TEST_CASE("mode names") {
    CHECK(parse_mode("rational") == Mode::Rational);
    CHECK(parse_mode("prime-field") == Mode::PrimeField);
    CHECK(mode_name(Mode::PrimeField) == "prime-field");
    CHECK_THROWS(parse_mode("float"));
}

TEST_CASE("sampling is deterministic and seed sensitive") {
    auto a = sample_params<Rational>(1, 2), b = sample_params<Rational>(1, 2), c = sample_params<Rational>(2, 2);
    CHECK(a.sqrt_q == b.sqrt_q);
    CHECK(a.sqrt_b == b.sqrt_b);
    CHECK(a.sqrt_d == b.sqrt_d);
    CHECK_FALSE(a.sqrt_q == c.sqrt_q);
    auto p = sample_params<Rational>(7, 3);
    CHECK_FALSE(p.q().is_zero());
    CHECK_FALSE(p.q() == Rational(1));
    CHECK_FALSE(p.q() == Rational(-1));
    CHECK_FALSE((p.b(1) * p.b(2) * p.b(3)).is_zero());
    CHECK_THROWS(sample_params<Rational>(1, 0));
}

TEST_CASE("root accessors square to the parameters") {
    for (int N = 1; N <= 4; ++N) {
        auto p = sample_params<ModP>(5, N);
        CHECK(p.sqrt_q * p.sqrt_q == p.q());
        CHECK(p.sqrt_kappa * p.sqrt_kappa == p.kappa());
        CHECK(p.q_half(3) * p.q_half(3) == power(p.q(), 3));
        ModP D(1);
        for (int i = 1; i <= N; ++i) {
            CHECK(p.rb(i) * p.rb(i) == p.b(i));
            CHECK(p.rd(i) * p.rd(i) == p.d(i));
            CHECK(p.rdbar(i) * p.rdbar(i) == p.dbar(i));
            D *= p.d(i) * p.dbar(i);
        }
        CHECK(p.D_N() == D);
        CHECK(p.b(0) == p.b(N));
    }
}
