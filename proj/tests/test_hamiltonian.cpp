#include "doctest.h"
#include "gln/hamiltonian.hpp"
#include "gln/nekrasov.hpp"

using namespace gln;

static void all_pass(const std::vector<OpCheck>& v) {
    for (const auto& c : v) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
}

TEST_CASE("A_C to first order") {
    auto p = sample_params<Rational>(2, 3);
    auto r = block_AC(p)(Series<Rational>::one(3, 1));
    CHECK(r.coeff({0, 0, 0}) == Rational(1));
    for (int k = 1; k <= 3; ++k) {
        Exps e(3, 0);
        e[k - 1] = 1;
        // e_q(z) = 1 + z/(1-q) + ...
        CHECK(r.coeff(e) == (p.d(k) + p.dbar(k)) / (Rational(1) - p.q()));
    }
}

TEST_CASE("H kills nothing and maps zero to zero") {
    auto p = sample_params<Rational>(2, 2);
    for (Form f : {Form::Simple, Form::Higher, Form::Normal}) CHECK(hamiltonian(p, f)(Series<Rational>(2, 3)).empty());
}

TEST_CASE("form names round trip") {
    for (Form f : {Form::Simple, Form::Higher, Form::Normal}) CHECK(parse_form(form_name(f)) == f);
    CHECK_THROWS(parse_form("cubic"));
}

TEST_CASE("gl1 eigenfunction in all forms") {
    auto p = sample_params<Rational>(1, 1);
    for (Form f : {Form::Simple, Form::Higher, Form::Normal}) {
        auto r = verify_conjecture(p, 6, f);
        CHECK(r.defect.zero);
    }
    auto psi = gl1_eigen_closed(p, 6);
    CHECK(compare_series(hamiltonian(p, Form::Simple)(psi), psi).zero);
}

TEST_CASE("gl2 and gl3 at low degree") {
    CHECK(verify_conjecture(sample_params<Rational>(2, 2), 3).defect.zero);
    CHECK(verify_conjecture(sample_params<ModP>(2, 2), 3, Form::Simple).defect.zero);
    CHECK(verify_conjecture(sample_params<ModP>(2, 3), 2, Form::Higher).defect.zero);
}

TEST_CASE("perturbed eigenfunction is detected") {
    auto p = sample_params<ModP>(3, 2);
    auto psi = psi_conjecture(p, 3);
    psi.add({1, 1}, ModP(1));
    auto H = hamiltonian(p, Form::Normal);
    auto d = compare_series(H(psi), psi);
    CHECK_FALSE(d.zero);
    CHECK(d.first == Exps{1, 1});
    // wrong parameters in H
    auto q = p;
    q.sqrt_d[0] *= ModP(2);
    CHECK_FALSE(compare_series(hamiltonian(q, Form::Normal)(psi_conjecture(p, 3)), psi_conjecture(p, 3)).zero);
}

TEST_CASE("three forms of the blocks agree") {
    for (int N = 2; N <= 3; ++N) all_pass(check_form_equivalence(sample_params<ModP>(8, N), 3));
}

TEST_CASE("form comparison catches a wrong block") {
    auto p = sample_params<ModP>(8, 3);
    auto q = p;
    q.sqrt_dbar[1] *= ModP(5);
    CHECK_FALSE(compare_ops<ModP>("A_R", block_AR(p, Form::Simple), block_AR(q, Form::Higher), 3, 2).pass);
    // A_L carries no mass parameters, only q
    CHECK(compare_ops<ModP>("A_L", block_AL(p, Form::Simple), block_AL(q, Form::Higher), 3, 2).pass);
    q.sqrt_q *= ModP(3);
    CHECK_FALSE(compare_ops<ModP>("A_L", block_AL(p, Form::Simple), block_AL(q, Form::Higher), 3, 2).pass);
}

TEST_CASE("pentagon and relabelings") {
    all_pass(check_pentagon(sample_params<ModP>(9, 3), 3));
    all_pass(check_dynkin(sample_params<ModP>(9, 3), 3));
    all_pass(check_alternative_forms(3, sample_params<ModP>(9, 3).sqrt_q, 2));
}

TEST_CASE("gl2 symmetric form") {
    auto p = sample_params<ModP>(2, 2);
    auto c = check_gl2_symmetric(p, 3);
    INFO(c.detail);
    CHECK(c.pass);
}

TEST_CASE("mass truncated eigenfunction") {
    auto p = sample_params<ModP>(3, 3);
    for (std::vector<int> m : {std::vector<int>{1, 0, 0}, {1, 2, 1}, {0, 2, 1}}) {
        auto r = check_mass_truncated(p, m, 4);
        INFO(r.support_detail);
        CHECK(r.support_ok);
        CHECK(r.equation.zero);
    }
    auto r = check_mass_truncated(sample_params<ModP>(3, 2), {2, 1}, 5);
    CHECK(r.support_ok);
    CHECK(r.equation.zero);
}

TEST_CASE("classical cyclic matrix") {
    auto c2 = classical_factorization_check<Rational>({Rational(2), Rational(-3)}, Rational(5));
    CHECK(c2.factorization);
    CHECK(c2.first_factor_form);
    auto c0 = classical_factorization_check<Rational>({Rational(0), Rational(0), Rational(0)}, Rational(7));
    CHECK(c0.factorization);
    auto c4 = classical_factorization_check<Rational>({Rational(3, 2), Rational(-1, 3), Rational(5), Rational(2, 7)},
                                                      Rational(4, 9));
    CHECK(c4.factorization);
    CHECK(c4.first_factor_form);
    CHECK_THROWS(classical_factorization_check<Rational>({Rational(1)}, Rational(1)));
}
