#include "doctest.h"
#include "gln/hamiltonian.hpp"

#include <random>

using namespace gln;

using S = Series<Rational>;

static S random_series(std::mt19937_64& g, int N, int D, int terms) {
    S s(N, D);
    for (int t = 0; t < terms; ++t) {
        Exps e(N, 0);
        int left = (int)(g() % (D + 1));
        for (int k = 0; k < left; ++k) e[g() % N]++;
        s.add(e, detail::draw_root<Rational>(g));
    }
    return s;
}

TEST_CASE("series storage") {
    S s(2, 3);
    s.add({1, 0}, Rational(2));
    s.add({1, 0}, Rational(-2));
    CHECK(s.empty());
    s.add({2, 2}, Rational(1));
    CHECK(s.empty());
    CHECK_THROWS(s.add({1}, Rational(1)));
    CHECK_THROWS(S(0, 2));
    auto a = S::monomial(2, 3, {1, 0}, Rational(3));
    auto b = S::monomial(2, 3, {0, 2}, Rational(1, 2));
    auto c = a * b;
    CHECK(c.coeff({1, 2}) == Rational(3, 2));
    CHECK((c * c).empty());
}

TEST_CASE("normal ordered examples") {
    Rational sq(3, 2), q = sq * sq;
    auto qtheta1_x1 = normal_ordered<Rational>([q](const Exps& nu, int a, int) {
        if (a == 1) return std::vector<Rational>{Rational(0), power(q, nu[0])};
        return std::vector<Rational>{Rational(1)};
    });
    auto s = S::monomial(2, 5, {2, 1}, Rational(1));
    CHECK(qtheta1_x1(s) == S::monomial(2, 5, {3, 1}, power(q, 2)));
    auto one = normal_ordered<Rational>([](const Exps&, int, int) { return std::vector<Rational>{Rational(1)}; });
    std::mt19937_64 g(2);
    auto r = random_series(g, 3, 4, 12);
    CHECK(one(r) == r);
    // :x_1 x_2 q^{theta_1 - theta_2}: on x_1
    auto op = normal_ordered<Rational>([q](const Exps& nu, int a, int) {
        if (a == 1) return std::vector<Rational>{Rational(0), power(q, nu[0] - nu[1])};
        return std::vector<Rational>{Rational(0), Rational(1)};
    });
    CHECK(op(S::monomial(2, 3, {1, 0}, Rational(1))) == S::monomial(2, 3, {2, 1}, q));
}

TEST_CASE("shift operators") {
    auto sh = shift_op<Rational>({Rational(2), Rational(3)});
    CHECK(sh(S::monomial(2, 4, {2, 1}, Rational(5))) == S::monomial(2, 4, {2, 1}, Rational(60)));
    std::mt19937_64 g(4);
    auto r = random_series(g, 2, 4, 10);
    CHECK(shift_op<Rational>({Rational(1), Rational(1)})(r) == r);
    CHECK_THROWS(shift_op<Rational>({Rational(0)}));
    for (int N = 1; N <= 4; ++N) {
        auto p = sample_params<Rational>(3, N);
        auto L = S::monomial(N, N, Exps(N, 1), Rational(1));
        CHECK(shift_T(p)(L) == L.scaled(power(p.kappa(), N)));
    }
}

TEST_CASE("quadratic q-power") {
    Rational sq(5, 3);
    auto Q = qdelta_op(sq, 1);
    CHECK(Q(S::monomial(2, 2, {1, 0}, Rational(1))) == S::monomial(2, 2, {1, 0}, sq));
    CHECK(Q(S::monomial(3, 6, {2, 2, 2}, Rational(1))) == S::monomial(3, 6, {2, 2, 2}, Rational(1)));
    CHECK(delta_form({1, 0}) == 1);
    CHECK(delta_form({3, 1, 2}) * 2 == (3 - 2) * (3 - 2) + (1 - 3) * (1 - 3) + (2 - 1) * (2 - 1));
}

TEST_CASE("q-exponentials invert") {
    auto p = sample_params<Rational>(6, 3);
    Rational q = p.q();
    std::mt19937_64 g(6);
    auto r = random_series(g, 3, 4, 10);
    for (int i = 1; i <= 3; ++i) {
        auto W = word_op<Rational>({Gen<Rational>::hat(i, p.alpha(i))}, p.sqrt_q);
        auto E = q_exponential(W, Rational(-1), q, QExp::E);
        auto P = q_exponential(W, Rational(-1), q, QExp::Phi);
        CHECK(E(P(r)) == r);
        CHECK(P(E(r)) == r);
    }
}

TEST_CASE("phi of Lambda to degree 3") {
    Rational q(2, 7);
    auto op = lambda_qexp<Rational>(2, Rational(1), q, QExp::Phi);
    S expect = S::one(2, 3);
    expect.add({1, 1}, -(Rational(1) - q).inv());
    CHECK(op(S::one(2, 3)) == expect);
}

TEST_CASE("theta powers commute past x with a q") {
    Rational sq(4, 3), q = sq * sq;
    std::mt19937_64 g(9);
    auto r = random_series(g, 3, 4, 10);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto P = diagonal<Rational>([q, i](const Exps& e) { return power(q, e[i]); });
            Exps sh(3, 0);
            sh[j] = 1;
            auto X = monomial_op<Rational>(sh);
            CHECK(compose<Rational>({P, X})(r) == compose<Rational>({X, P})(r).scaled(power(q, i == j)));
        }
}

TEST_CASE("adjoint of x_i by the quadratic power") {
    auto p = sample_params<Rational>(2, 3);
    Rational sq = p.sqrt_q;
    std::mt19937_64 g(10);
    auto r = random_series(g, 3, 5, 8);
    for (int i = 1; i <= 3; ++i)
        for (int n = 1; n <= 3; ++n) {
            int a = i - 1, b = (i + 1) % 3;
            auto C = [&](int sign) {
                return diagonal<Rational>([=](const Exps& e) {
                    long d = e[a] - e[b];
                    return power(sq, sign * d * d);
                });
            };
            Word<Rational> xs(n, Gen<Rational>::plain(i, p.alpha(i))), hats(n, Gen<Rational>::hat(i, p.alpha(i)));
            auto lhs = compose<Rational>({C(1), word_op(xs, sq), C(-1)});
            CHECK(lhs(r) == word_op(hats, sq)(r).scaled(power(sq, n)));
        }
}

TEST_CASE("operators are linear") {
    auto p = sample_params<Rational>(4, 2);
    std::mt19937_64 g(12);
    std::vector<Op<Rational>> ops{hamiltonian(p, Form::Simple), hamiltonian(p, Form::Normal), block_AC(p),
                                  shift_T(p), qdelta_op(p.sqrt_q, -1)};
    for (const auto& op : ops) {
        auto F = random_series(g, 2, 4, 8), G = random_series(g, 2, 4, 8);
        Rational a(3, 7), b(-2, 5);
        CHECK(op(F.scaled(a) + G.scaled(b)) == op(F).scaled(a) + op(G).scaled(b));
    }
}

TEST_CASE("word oracle in the abstract torus") {
    for (int N = 2; N <= 3; ++N) {
        auto p = sample_params<Rational>(5, N);
        CHECK(check_torus_representation(p, 4, Var::Hat, 1).pass);
        CHECK(check_torus_representation(p, 4, Var::Check, 2).pass);
    }
}

TEST_CASE("series exponential") {
    auto L = S::monomial(1, 6, {1}, Rational(1));
    auto E = series_exp(L);
    Rational f(1);
    for (int n = 0; n <= 6; ++n) {
        if (n) f *= Rational(n);
        CHECK(E.coeff({n}) == f.inv());
    }
    CHECK_THROWS(series_exp(S::one(1, 3)));
}

TEST_CASE("defect reports") {
    auto a = S::one(2, 3), b = S::one(2, 3);
    b.add({1, 1}, Rational(2));
    b.add({0, 1}, Rational(1));
    auto d = compare_series(a, b);
    CHECK_FALSE(d.zero);
    CHECK(d.first == Exps{0, 1});
    CHECK(d.nonzero_per_degree == std::vector<int>{0, 1, 1, 0});
    CHECK(compare_series(a, a).zero);
}
