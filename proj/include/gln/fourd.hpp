#pragma once

// The h -> 0 degeneration: jet checks of the Pochhammer expansions, the
// symbol difference K_1 - K_2, the C^{-1}R transport lemma, the additive
// (4d) Laumon series and the FST operator acting on it.

#include "gln/scalar.hpp"
#include "gln/series.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gln {

// -------------------------------------------------------- jet expansions

// (q^a x;q)_b at q = 1 + h, b >= 0
Jet2 jet_poch(long a, long b, const Rational& x);
// (q^alpha x;q)_inf / (q^beta x;q)_inf for integer alpha, beta
Jet2 jet_ratio(long alpha, long beta, const Rational& x);
// (1-x)^b {1 - h x/(1-x) (ab + C(b,2))}
Jet2 poch_expansion(long a, long b, const Rational& x);
// (1-x)^{-alpha} {1 + (h/2) alpha(alpha-1) x/(1-x)}
Jet2 ratio_expansion(long alpha, const Rational& x);
// (-q^alpha x)_inf/(-q^beta x)_inf = (1+x)^{beta-alpha}{1 + (h/2)(beta-alpha)(alpha+beta-1) x/(1+x)}
Jet2 signed_ratio_expansion(long alpha, long beta, const Rational& x);

struct JetReport {
    bool pass = true;
    int instances = 0;
    std::string first_failure;
};

// random instances of the three expansions, compared with the finite products
JetReport check_jet_expansions(std::uint64_t seed, int instances);

// ------------------------------------------------------- symbol algebra

struct SymbolPoint {
    Rational theta, theta_prime, gamma, m, mt, x;
};

// K_{1,a} and K_{2,a} as displayed
Rational K1(const SymbolPoint& s);
Rational K2(const SymbolPoint& s);
// theta(theta' + gamma) + x/(1-x) (theta' + m)(theta' + mt)
Rational k_difference(const SymbolPoint& s);
// For integer theta', m, mt: the O(h) coefficient of the A_1 and A_2 symbols
// built from finite jet products, divided by their common h^0 part.
Rational K1_from_jets(const SymbolPoint& s);
Rational K2_from_jets(const SymbolPoint& s);

JetReport check_k_difference(std::uint64_t seed, int instances);

// ------------------------------------------------------ C^{-1} R lemma

// U_a = x_a + x_a x_{a+1} + ... + x_a...x_{a+N-1}, a is 0-based
Rational U_sum(const std::vector<Rational>& x, int a);
// C^{-1}R(x): y_a = x'_a U_{a+1}(x')/U_a(x') at x'_b = x_{b-1}
std::vector<Rational> cr_transform(const std::vector<Rational>& x);

using SymbolFn = std::function<Rational(const std::vector<Rational>&, const Exps&)>;

struct LemmaValues {
    Rational lhs, rhs;
};
LemmaValues lemma_cr_values(const SymbolFn& F, const Exps& nu, const std::vector<Rational>& x);

JetReport check_lemma_cr(int N, std::uint64_t seed, int instances);

// ---------------------------------------------------------- 4d Laumon

struct AdditiveParams {
    int N = 1;
    Rational eps;
    std::vector<Rational> beta, m, mt;  // 0-based
    Rational gamma(int a) const;        // eps + beta_a - beta_{a+1}
};

AdditiveParams sample_additive(std::uint64_t seed, int N);

// additive Nekrasov factor: bracket [e^{hU};e^h]_n -> prod_{k<n} (U + k)
Rational nek_additive(int N, int k, const Partition& lam, const Partition& mu, const Rational& U,
                      const Rational& eps, int* bracket_count = nullptr);

Series<Rational> laumon_4d(const AdditiveParams& p, int D);

// (1-x)^{m mt/eps} through degree D
Series<Rational> gl1_4d_closed(const AdditiveParams& p, int D);

struct FstReport {
    DefectReport defect;
    std::size_t terms = 0;
};

// (1-Lambda) sum_a theta_a(theta'_a + gamma_a) psi + sum_a U_a (m_a + theta'_a)(mt_a + theta'_a) psi
Series<Rational> fst_apply(const AdditiveParams& p, const Series<Rational>& psi);
FstReport fst_check(const AdditiveParams& p, int D);

}  // namespace gln
