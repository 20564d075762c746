#include "doctest.h"
#include "gln/jackson.hpp"

using namespace gln;

TEST_CASE("cocycle factors") {
    auto s = sample_cocycle_spec<Rational>(2, 3, 2);
    Rational z(5, 3);
    CHECK(cocycle_factor(s, 0, z) == (Rational(1) - z / s.a[1]) * (Rational(1) - z / s.a[2]));
    CHECK(cocycle_factor(s, 2, z) == (Rational(1) - s.b[0] * z) * (Rational(1) - s.b[1] * z));
    // degree N - 1: N nodes determine it, the leading coefficient is nonzero
    for (int l = 0; l < 3; ++l) {
        std::vector<Rational> xs{Rational(0), Rational(1), Rational(2), Rational(3)};
        Rational diff3(0);  // third finite difference vanishes for degree 2
        for (int k = 0; k < 4; ++k) diff3 += Rational(binomial(3, k)) * sign_power<Rational>(3 - k) * cocycle_factor(s, l, xs[k]);
        CHECK(diff3 == Rational(0));
    }
    CHECK_THROWS(cocycle_factor(s, 3, z));
}

TEST_CASE("cocycle basis small cases") {
    auto s0 = sample_cocycle_spec<Rational>(1, 2, 0);
    CHECK(cocycle_basis(s0, {0, 0}, {}) == Rational(1));
    auto s1 = sample_cocycle_spec<Rational>(1, 2, 1);
    Rational z(2, 7);
    CHECK(cocycle_basis(s1, {1, 0}, {z}) == cocycle_factor(s1, 0, z));
    auto s2 = sample_cocycle_spec<Rational>(1, 2, 2);
    CHECK_THROWS(cocycle_basis(s2, {1, 1}, {z, z}));
    CHECK_THROWS(cocycle_basis(s2, {1, 0}, {z, z + Rational(1)}));
}

TEST_CASE("cocycle ranks") {
    CHECK(cocycle_rank<Rational>(2, 0) == 1);
    CHECK(cocycle_rank<Rational>(2, 1) == 2);
    CHECK(cocycle_rank<Rational>(2, 2) == 3);
    CHECK(cocycle_rank<Rational>(3, 2) == 6);
    CHECK(cocycle_rank<ModP>(3, 3) == 10);
}

TEST_CASE("symmetry and polynomiality") {
    for (auto [N, M] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {2, 3}}) {
        auto s = sample_cocycle_spec<Rational>(4, N, M);
        std::vector<Rational> z;
        for (int i = 0; i < M; ++i) z.push_back(Rational(i + 2, 7 - i));
        for (const auto& r : compositions(N, M)) {
            CHECK(cocycle_symmetric(s, r, z));
            CHECK(cocycle_is_polynomial(s, r, 3));
        }
    }
}
