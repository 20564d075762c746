#include "doctest.h"
#include "gln/rmatrix.hpp"

using namespace gln;

TEST_CASE("phi_q special values") {
    Rational q(2, 5), l(3, 7), m(-4, 3);
    Exps b{2, 1};
    CHECK(phi_q<Rational>({3, 0}, b, l, m, q) == Rational(0));
    CHECK(phi_q<Rational>({0, 0}, b, l, m, q) == poch(m / l, q, 3) / poch(m, q, 3));
    CHECK(phi_q<Rational>(b, b, l, m, q) == power(m / l, 3) * poch(l, q, 3) / poch(m, q, 3));
}

TEST_CASE("transition property") {
    Rational q(3, 7);
    for (int n = 1; n <= 3; ++n) {
        auto r = check_transition<Rational>(n, 2, q, Rational(5), Rational(2, 9), Rational(-7, 4));
        INFO(r.first_failure);
        CHECK(r.pass);
        CHECK(r.cases > 0);
    }
}

TEST_CASE("empty weight") {
    auto s = sample_rspec<Rational>(1, 3, 0);
    auto R = r_closed(s);
    CHECK(R.rows() == 1);
    CHECK(R(0, 0) == Rational(1));
    CHECK(r_via_connection(s)(0, 0) == Rational(1));
}

TEST_CASE("closed form equals the connection solve") {
    for (auto [N, M] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 1}}) {
        auto s = sample_rspec<Rational>(5, N, M);
        auto Rc = r_via_connection(s);
        auto d = matrix_diff(r_closed(s), Rc, s.index());
        INFO(d.first);
        CHECK(d.equal);
        CHECK(Rc == r_via_elimination(s));
        CHECK(connection_residual_zero(s, Rc, 5, 3));
    }
}

TEST_CASE("a wrong matrix fails the residual") {
    auto s = sample_rspec<Rational>(2, 2, 2);
    auto R = r_closed(s);
    R(0, 1) += Rational(1);
    CHECK_FALSE(connection_residual_zero(s, R, 2, 3));
}

TEST_CASE("base matrices at the reference points") {
    for (auto [N, M] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}}) {
        auto s = sample_rspec<Rational>(3, N, M);
        CHECK(base_matrix(2, s) == B2_closed(s));
        CHECK((B2_inverse_closed(s) * base_matrix(2, s)).is_identity());
        Exps c(N, 2 * M + 1);
        auto si = with_integer_c(s, c);
        CHECK(base_matrix(1, si) == B1_closed_integer_c(si, c));
        CHECK(lambda_change_holds(s, s.Lam * Rational(3), 3));
    }
}

TEST_CASE("gauge to the truncated Hamiltonian for one box") {
    auto g = gauge_match_to_hamiltonian<Rational>({1, 0}, 7);
    INFO(g.detail);
    CHECK(g.found);
    for (const auto& k : g.K) CHECK(k.has_value());
}
