#include "gln/fourd.hpp"

#include "gln/nekrasov.hpp"
#include "gln/parallel.hpp"
#include "gln/partitions.hpp"

#include <random>
#include <stdexcept>

namespace gln {

namespace {

Jet2 qpow(long n) { return Jet2(Rational(1), Rational(n)); }  // q^n = 1 + n h

Rational choose2(const Rational& u) { return u * (u - Rational(1)) / Rational(2); }

Rational rand_rational(std::mt19937_64& g, long num, long den) {
    long n = (long)(g() % (2 * num + 1)) - num;
    long d = 1 + (long)(g() % den);
    return Rational(n, d);
}

Rational rand_point(std::mt19937_64& g) {
    for (;;) {
        Rational x = rand_rational(g, 12, 13);
        if (!x.is_zero() && !(x == Rational(1)) && !(x == Rational(-1))) return x;
    }
}

void note_failure(JetReport& r, const std::string& what) {
    if (r.pass) r.first_failure = what;
    r.pass = false;
}

}  // namespace

Jet2 jet_poch(long a, long b, const Rational& x) {
    if (b < 0) throw std::invalid_argument("jet_poch needs b >= 0");
    Jet2 r(1);
    for (long k = 0; k < b; ++k) r *= Jet2(1) - qpow(a + k) * Jet2(x);
    return r;
}

Jet2 jet_ratio(long alpha, long beta, const Rational& x) {
    if (beta >= alpha) return jet_poch(alpha, beta - alpha, x);
    return jet_poch(beta, alpha - beta, x).inv();
}

Jet2 poch_expansion(long a, long b, const Rational& x) {
    Rational one(1), v = power(one - x, b);
    Rational c = Rational(a * b) + choose2(Rational(b));
    return Jet2(v, -(v * x / (one - x) * c));
}

Jet2 ratio_expansion(long alpha, const Rational& x) {
    Rational one(1), v = power(one - x, -alpha);
    return Jet2(v, v * Rational(alpha * (alpha - 1), 2) * x / (one - x));
}

Jet2 signed_ratio_expansion(long alpha, long beta, const Rational& x) {
    Rational one(1), v = power(one + x, beta - alpha);
    return Jet2(v, v * Rational((beta - alpha) * (alpha + beta - 1), 2) * x / (one + x));
}

JetReport check_jet_expansions(std::uint64_t seed, int instances) {
    std::mt19937_64 g(seed + 31);
    JetReport rep;
    for (int t = 0; t < instances; ++t) {
        long a = (long)(g() % 11) - 5, b = (long)(g() % 7), al = (long)(g() % 13) - 6, be = (long)(g() % 13) - 6;
        Rational x = rand_point(g);
        ++rep.instances;
        if (!(jet_poch(a, b, x) == poch_expansion(a, b, x)))
            note_failure(rep, "poch a=" + std::to_string(a) + " b=" + std::to_string(b) + " x=" + x.str());
        if (!(jet_ratio(al, 0, x) == ratio_expansion(al, x)))
            note_failure(rep, "ratio alpha=" + std::to_string(al) + " x=" + x.str());
        if (!(jet_ratio(al, be, -x) == signed_ratio_expansion(al, be, x)))
            note_failure(rep, "signed ratio alpha=" + std::to_string(al) + " beta=" + std::to_string(be) + " x=" + x.str());
    }
    return rep;
}

Rational K1(const SymbolPoint& s) {
    Rational one(1);
    return s.gamma * s.theta + s.x / (one - s.x) * choose2(s.theta_prime + s.mt);
}

Rational K2(const SymbolPoint& s) {
    Rational one(1), u = -s.theta_prime - s.mt;
    return -(s.theta * s.theta_prime) - s.x / (one - s.x) * ((s.mt - s.m) * u + choose2(u));
}

Rational k_difference(const SymbolPoint& s) {
    Rational one(1);
    return s.theta * (s.theta_prime + s.gamma) + s.x / (one - s.x) * (s.theta_prime + s.m) * (s.theta_prime + s.mt);
}

namespace {

long as_long(const Rational& r) {
    if (!r.is_integer()) throw std::invalid_argument("jet assembly needs integer exponents");
    return r.num().get_si();
}

Rational log_slope(const Jet2& j) { return j.slope() / j.value(); }

}  // namespace

Rational K1_from_jets(const SymbolPoint& s) {
    long u = as_long(s.theta_prime + s.mt);
    Jet2 j = jet_ratio(u, 0, s.x) * Jet2(Rational(1), s.gamma * s.theta);
    return log_slope(j);
}

Rational K2_from_jets(const SymbolPoint& s) {
    long mt = as_long(s.mt), m = as_long(s.m), tp = as_long(s.theta_prime);
    Jet2 j = jet_ratio(mt - m, -tp - m, s.x) * Jet2(Rational(1), -(s.theta * s.theta_prime));
    return log_slope(j);
}

JetReport check_k_difference(std::uint64_t seed, int instances) {
    std::mt19937_64 g(seed + 37);
    JetReport rep;
    for (long a = -3; a <= 3; ++a)
        if (!(choose2(Rational(a)) + choose2(Rational(-a)) == Rational(a * a)))
            note_failure(rep, "binomial identity at a=" + std::to_string(a));
    for (int t = 0; t < instances; ++t) {
        SymbolPoint s;
        s.theta = Rational((long)(g() % 9) - 4);
        s.theta_prime = Rational((long)(g() % 9) - 4);
        s.m = Rational((long)(g() % 9) - 4);
        s.mt = Rational((long)(g() % 9) - 4);
        s.gamma = rand_rational(g, 20, 9);
        s.x = rand_point(g);
        ++rep.instances;
        Rational d = k_difference(s);
        if (!(K1(s) - K2(s) == d)) note_failure(rep, "displayed K1-K2 at x=" + s.x.str());
        if (!(K1_from_jets(s) == K1(s))) note_failure(rep, "K1 jet at x=" + s.x.str());
        if (!(K2_from_jets(s) == K2(s))) note_failure(rep, "K2 jet at x=" + s.x.str());
        // non-integer exponents: only the displayed forms are available
        s.m = rand_rational(g, 20, 9);
        s.mt = rand_rational(g, 20, 9);
        s.theta_prime = rand_rational(g, 5, 3);
        if (!(K1(s) - K2(s) == k_difference(s))) note_failure(rep, "K1-K2 with rational masses");
    }
    return rep;
}

Rational U_sum(const std::vector<Rational>& x, int a) {
    const int N = (int)x.size();
    Rational s(0), p(1);
    for (int i = 0; i < N; ++i) {
        p *= x[(a + i) % N];
        s += p;
    }
    return s;
}

std::vector<Rational> cr_transform(const std::vector<Rational>& x) {
    const int N = (int)x.size();
    std::vector<Rational> xp(N), y(N);
    for (int b = 0; b < N; ++b) xp[b] = x[(b - 1 + N) % N];
    for (int a = 0; a < N; ++a) {
        Rational Ua = U_sum(xp, a);
        if (Ua.is_zero()) throw std::domain_error("U_a vanishes at the sample point");
        y[a] = xp[a] * U_sum(xp, (a + 1) % N) / Ua;
    }
    return y;
}

LemmaValues lemma_cr_values(const SymbolFn& F, const Exps& nu, const std::vector<Rational>& x) {
    const int N = (int)x.size();
    auto y = cr_transform(x);
    Rational one(1), lhs = F(y, nu), rhs = F(y, nu);
    for (int a = 0; a < N; ++a) {
        int tp = nu[a] - nu[(a - 1 + N) % N];
        lhs *= power(one - y[a], -tp) * power(y[a], nu[a]);
        rhs *= power(x[a], nu[a]);
    }
    return {lhs, rhs};
}

JetReport check_lemma_cr(int N, std::uint64_t seed, int instances) {
    std::mt19937_64 g(seed + 41);
    JetReport rep;
    std::vector<Rational> c;
    for (int i = 0; i <= N; ++i) c.push_back(rand_rational(g, 9, 7));
    SymbolFn F = [c](const std::vector<Rational>& x, const Exps& nu) {
        Rational s = c[0];
        for (size_t a = 0; a < x.size(); ++a) s += c[a + 1] * x[a] * Rational(nu[a] + 2);
        return s / (Rational(3) + x[0] * x[0]);
    };
    while (rep.instances < instances) {
        std::vector<Rational> x;
        Exps nu;
        for (int a = 0; a < N; ++a) {
            x.push_back(rand_point(g));
            nu.push_back((int)(g() % 7) - 3);
        }
        try {
            auto y = cr_transform(x);
            bool ok = true;
            for (const auto& v : y) ok = ok && !v.is_zero() && !(v == Rational(1));
            if (!ok) continue;
        } catch (const std::domain_error&) {
            continue;
        }
        ++rep.instances;
        auto v = lemma_cr_values(F, nu, x);
        if (!(v.lhs == v.rhs)) note_failure(rep, "nu=" + exps_str(nu));
    }
    return rep;
}

Rational AdditiveParams::gamma(int a) const { return eps + beta[a] - beta[(a + 1) % N]; }

AdditiveParams sample_additive(std::uint64_t seed, int N) {
    std::mt19937_64 g(seed * 0x9E3779B97F4A7C15ULL + 43);
    AdditiveParams p;
    p.N = N;
    p.eps = rand_rational(g, 20, 97);
    if (p.eps.is_zero()) p.eps = Rational(1, 3);
    for (int i = 0; i < N; ++i) {
        p.beta.push_back(rand_rational(g, 20, 97));
        p.m.push_back(rand_rational(g, 20, 97));
        p.mt.push_back(rand_rational(g, 20, 97));
    }
    return p;
}

namespace {

Rational additive_bracket(const Rational& U, int n, int* count) {
    Rational r(1);
    for (int k = 0; k < n; ++k) r *= U + Rational(k);
    if (count) *count += n;
    return r;
}

}  // namespace

Rational nek_additive(int N, int k, const Partition& lam, const Partition& mu, const Rational& U, const Rational& eps,
                      int* bracket_count) {
    Rational r(1);
    const int L = (int)lam.size(), Mu = (int)mu.size();
    for (int j = 1; j <= L; ++j)
        for (int i = 1; i <= j; ++i)
            if (cmod(j - i - k, N) == 0) {
                int n = part(lam, j) - part(lam, j + 1);
                r *= additive_bracket(U - Rational(part(mu, i)) + Rational(part(lam, j + 1)) + eps * Rational(j - i), n,
                                      bracket_count);
            }
    for (int be = 1; be <= Mu; ++be)
        for (int al = 1; al <= be; ++al)
            if (cmod(be - al + k + 1, N) == 0) {
                int n = part(mu, be) - part(mu, be + 1);
                r *= additive_bracket(U + Rational(part(lam, al)) - Rational(part(mu, be)) + eps * Rational(al - be - 1),
                                      n, bracket_count);
            }
    return r;
}

Series<Rational> laumon_4d(const AdditiveParams& p, int D) {
    const int N = p.N;
    // a_i -> 1 + eps + beta_{i-1} - m_{i-1},  c_i -> beta_i - mt_i
    std::vector<Rational> A(N), C(N);
    for (int i = 0; i < N; ++i) {
        int im = (i - 1 + N) % N;
        A[i] = Rational(1) + p.eps + p.beta[im] - p.m[im];
        C[i] = p.beta[i] - p.mt[i];
    }
    auto tuples = enumerate_tuples(N, D);
    auto terms = parallel_map<Rational>(tuples.size(), [&](std::size_t t) {
        const auto& lams = tuples[t];
        Rational num(1), den(1);
        int bal = 0;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                int col = cmod(j - i, N);
                int c1 = 0, c2 = 0, c3 = 0;
                num *= nek_additive(N, col, {}, lams[j], A[i] - p.beta[j], p.eps, &c1);
                num *= nek_additive(N, col, lams[i], {}, p.beta[i] - C[j], p.eps, &c2);
                den *= nek_additive(N, col, lams[i], lams[j], p.beta[i] - p.beta[j], p.eps, &c3);
                bal += c1 + c2 - c3;
            }
        if (bal != 0) throw std::logic_error("unbalanced bracket count at " + tuple_str(lams));
        if (den.is_zero()) throw std::domain_error("vanishing linear form at " + tuple_str(lams));
        return num / den;
    });
    Series<Rational> s(N, D);
    for (size_t t = 0; t < tuples.size(); ++t) s.add(colored_counts(tuples[t], N), terms[t]);
    return s;
}

Series<Rational> gl1_4d_closed(const AdditiveParams& p, int D) {
    Rational s = p.m[0] * p.mt[0] / p.eps, c(1);
    Series<Rational> r(1, D);
    for (int n = 0; n <= D; ++n) {
        r.add({n}, c);
        c *= (Rational(n) - s) / Rational(n + 1);
    }
    return r;
}

Series<Rational> fst_apply(const AdditiveParams& p, const Series<Rational>& psi) {
    const int N = p.N;
    Series<Rational> out(N, psi.D());
    for (const auto& [e, v] : psi.terms()) {
        Rational s(0);
        for (int a = 0; a < N; ++a) s += Rational(e[a]) * (Rational(theta_diff(e, a + 1)) + p.gamma(a));
        s *= v;
        out.add(e, s);
        Exps up = e;
        for (auto& x : up) ++x;
        out.add(up, -s);
        for (int a = 0; a < N; ++a) {
            Rational tp(theta_diff(e, a + 1));
            Rational w = (p.m[a] + tp) * (p.mt[a] + tp) * v;
            Exps mon = e;
            for (int L = 0; L < N; ++L) {
                ++mon[(a + L) % N];
                out.add(mon, w);
            }
        }
    }
    return out;
}

FstReport fst_check(const AdditiveParams& p, int D) {
    FstReport rep;
    auto psi = laumon_4d(p, D);
    rep.terms = psi.terms().size();
    rep.defect = compare_series(fst_apply(p, psi), Series<Rational>(p.N, D));
    return rep;
}

}  // namespace gln
