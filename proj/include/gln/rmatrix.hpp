#pragma once

// Mass-truncated R-matrix: base polynomials B_1, B_2 on homogeneous degree-M
// polynomials in z_1..z_N, the connection matrix between them, its closed
// form through the kernel Phi_q, and the diagonal gauge relating it to the
// truncated Hamiltonian acting on S(m).

#include "gln/linalg.hpp"
#include "gln/parallel.hpp"
#include "gln/params.hpp"
#include "gln/partitions.hpp"
#include "gln/qfun.hpp"
#include "gln/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace gln {

// <i,j> = sum_{a<b} i_a j_b
inline long pair_form(const Exps& i, const Exps& j) {
    long s = 0;
    for (size_t a = 0; a < i.size(); ++a)
        for (size_t b = a + 1; b < j.size(); ++b) s += (long)i[a] * j[b];
    return s;
}

inline int total(const Exps& i) { return std::accumulate(i.begin(), i.end(), 0); }

inline Exps drop_last(const Exps& i) { return Exps(i.begin(), i.end() - 1); }

template <Field F>
F phi_q(const Exps& g, const Exps& b, const F& lam, const F& mu, const F& q) {
    for (size_t a = 0; a < g.size(); ++a)
        if (g[a] < 0 || g[a] > b[a]) return F(0);
    int G = total(g), B = total(b);
    Exps d(g.size());
    for (size_t a = 0; a < g.size(); ++a) d[a] = b[a] - g[a];
    F den = poch(mu, q, B);
    if (den.is_zero()) throw std::domain_error("Phi_q: (mu;q)_|beta| vanishes");
    F r = power(q, pair_form(d, g)) * power(mu / lam, G) * poch(lam, q, G) * poch(mu / lam, q, B - G) / den;
    for (size_t a = 0; a < g.size(); ++a) r *= qbinom(b[a], g[a], q);
    return r;
}

// All i in Z_{>=0}^n with i <= k componentwise.
inline std::vector<Exps> boxes_below(const Exps& k) {
    std::vector<Exps> out;
    Exps cur(k.size(), 0);
    auto rec = [&](auto&& self, size_t a) -> void {
        if (a == k.size()) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= k[a]; ++v) {
            cur[a] = v;
            self(self, a + 1);
        }
    };
    rec(rec, 0);
    return out;
}

struct TransitionReport {
    bool pass = true;
    long cases = 0;
    std::string first_failure;
};

// sum_{i<=j<=k} Phi(i|j;a,b) Phi(j|k;b,c) = Phi(i|k;a,c).  With swapped=true
// the footnote variant sum Phi(i|j;b,c) Phi(j|k;a,b) is tested instead.
template <Field F>
TransitionReport check_transition(int n, int bound, const F& q, const F& a, const F& b, const F& c,
                                  bool swapped = false) {
    TransitionReport rep;
    Exps top(n, bound);
    for (const auto& k : boxes_below(top))
        for (const auto& i : boxes_below(k)) {
            F lhs(0);
            for (const auto& j : boxes_below(k)) {
                bool ge = true;
                for (int t = 0; t < n; ++t) ge = ge && j[t] >= i[t];
                if (!ge) continue;
                lhs += swapped ? phi_q(i, j, b, c, q) * phi_q(j, k, a, b, q)
                               : phi_q(i, j, a, b, q) * phi_q(j, k, b, c, q);
            }
            ++rep.cases;
            if (!(lhs == phi_q(i, k, a, c, q)) && rep.pass) {
                rep.pass = false;
                rep.first_failure = "i=" + exps_str(i) + " k=" + exps_str(k);
            }
        }
    return rep;
}

// R-matrix data.  q = q4^4; mu_a = smu_a^2 and q^{c_a/2} = 1/smu_a.
template <Field F>
struct RSpec {
    int N = 2, M = 1;
    F q4{2}, Lam{3};
    std::vector<F> smu;

    F q() const { return power(q4, 4); }
    F mu(int a) const { return smu[a] * smu[a]; }  // 0-based
    F mu_prod() const {
        F r(1);
        for (int a = 0; a < N; ++a) r *= mu(a);
        return r;
    }
    std::vector<Exps> index() const { return compositions(N, M); }
};

template <Field F>
RSpec<F> sample_rspec(std::uint64_t seed, int N, int M) {
    if (N < 1 || M < 0) throw std::invalid_argument("R-matrix needs N >= 1, M >= 0");
    std::mt19937_64 g(seed * 0xD1B54A32D192ED03ULL + 101);
    RSpec<F> s;
    s.N = N;
    s.M = M;
    auto fresh = [&]() {
        for (;;) {
            F x = detail::draw_root<F>(g);
            if (!detail::is_unit_or_zero(x) && !detail::is_unit_or_zero(x * x)) return x;
        }
    };
    s.q4 = fresh();
    s.Lam = fresh();
    for (int a = 0; a < N; ++a) s.smu.push_back(fresh());
    return s;
}

// z_{N+1} = Lambda z_1
template <Field F>
F base_poly(int type, const RSpec<F>& s, const Exps& i, const std::vector<F>& z, const F& L) {
    const int N = s.N;
    F q = s.q();
    auto zz = [&](int a) { return a == N ? L * z[0] : z[a]; };
    F r(1);
    for (int a = 0; a < N; ++a) {
        if (type == 1) r *= poch(s.mu(a) * zz(a + 1) / zz(a), q, i[a]) * power(zz(a), i[a]);
        else r *= poch(zz(a) / zz(a + 1), q, i[a]) * power(zz(a + 1), i[a]);
    }
    return r;
}

// z_{k,1} = 1, z_{k,a} = q^{k_1+...+k_{a-1}}
template <Field F>
std::vector<F> reference_point(const RSpec<F>& s, const Exps& k) {
    std::vector<F> z{F(1)};
    long acc = 0;
    for (int a = 1; a < s.N; ++a) {
        acc += k[a - 1];
        z.push_back(power(s.q(), acc));
    }
    return z;
}

template <Field F>
Matrix<F> base_matrix(int type, const RSpec<F>& s) {
    auto I = s.index();
    int n = (int)I.size();
    Matrix<F> B(n, n);
    for (int c = 0; c < n; ++c) {
        auto z = reference_point(s, I[c]);
        for (int r = 0; r < n; ++r) B(r, c) = base_poly(type, s, I[r], z, s.Lam);
    }
    return B;
}

// N_i(Lambda) = (1/Lambda;q)_M Lambda^M / (q;q)_M prod (q;q)_{i_a}
template <Field F>
F norm_N(const RSpec<F>& s, const Exps& i, const F& Lam) {
    F q = s.q();
    F r = poch(Lam.inv(), q, s.M) * power(Lam, s.M) / qfactorial(q, s.M);
    for (int v : i) r *= qfactorial(q, v);
    return r;
}

template <Field F>
Matrix<F> B2_closed(const RSpec<F>& s) {
    auto I = s.index();
    int n = (int)I.size();
    F q = s.q();
    Matrix<F> B(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            B(r, c) = norm_N(s, I[r], s.Lam) * phi_q(drop_last(I[r]), drop_last(I[c]), power(q, -s.M), s.Lam.inv(), q);
    return B;
}

// closed-form inverse of (B_{2,i}(z_j))
template <Field F>
Matrix<F> B2_inverse_closed(const RSpec<F>& s) {
    auto I = s.index();
    int n = (int)I.size();
    F q = s.q();
    Matrix<F> B(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            B(r, c) = phi_q(drop_last(I[r]), drop_last(I[c]), s.Lam.inv(), power(q, -s.M), q) / norm_N(s, I[c], s.Lam);
    return B;
}

// B_{1,i}(z_j) in closed form for integer c (mu_a = q^{-c_a}); c_a >= 2M
// keeps every Phi_q argument inside its polynomial range.
template <Field F>
Matrix<F> B1_closed_integer_c(const RSpec<F>& s, const Exps& c) {
    auto I = s.index();
    int n = (int)I.size(), M = s.M;
    F q = s.q(), L = s.Lam;
    int C = total(c);
    Matrix<F> B(n, n);
    for (int r = 0; r < n; ++r)
        for (int col = 0; col < n; ++col) {
            const Exps &i = I[r], &j = I[col];
            Exps g(s.N), b(s.N);
            for (int a = 0; a < s.N; ++a) {
                g[a] = c[a] - i[a] - j[a];
                b[a] = c[a] - j[a];
            }
            F v = power(q, pair_form(c, i)) * poch(power(q, -C) * L, q, M) / qfactorial(q, M);
            for (int x : i) v *= qfactorial(q, x);
            v *= phi_q(drop_last(g), drop_last(b), power(q, M - C) * L, power(q, -C) * L, q);
            B(r, col) = v;
        }
    return B;
}

template <Field F>
RSpec<F> with_integer_c(RSpec<F> s, const Exps& c) {
    for (int a = 0; a < s.N; ++a) s.smu[a] = power(s.q4, -2L * c[a]);
    return s;
}

// Connection solve: R = B1 B', with B' the closed-form inverse.
template <Field F>
Matrix<F> r_via_connection(const RSpec<F>& s) {
    return base_matrix(1, s) * B2_inverse_closed(s);
}

// Generic elimination on the same system, as an independent cross-check.
template <Field F>
Matrix<F> r_via_elimination(const RSpec<F>& s) {
    return base_matrix(1, s) * base_matrix(2, s).inverse();
}

template <Field F>
F r_entry_closed(const RSpec<F>& s, const Exps& i, const Exps& j) {
    const int N = s.N, M = s.M;
    F q = s.q(), L = s.Lam;
    // q^{e4/4} prod_a q^{(c_a/2) h_a} = q4^{e4} prod smu_a^{-h_a}
    auto qe = [&](long e4, const std::vector<long>& h) {
        F v = power(s.q4, e4);
        for (int a = 0; a < N; ++a) v *= power(s.smu[a], -h[a]);
        return v;
    };
    F mup = L * s.mu_prod();  // Lambda q^{-|c|}

    long e4 = 2L * M * (1 - M);
    std::vector<long> h(N, M);
    for (int a = 0; a < N; ++a) {
        e4 += (long)i[a] * i[a] - (long)j[a] * j[a];
        h[a] += j[a] - 2L * i[a];
        for (int b = 0; b < a; ++b) h[a] += j[b] - i[b];
    }
    F pref = sign_power<F>(M) * qe(e4, h);
    F den = poch(L * power(q, 1 - M), q, M);
    if (den.is_zero()) throw std::domain_error("degenerate Lambda: (Lambda q^{1-M};q)_M = 0");
    pref *= poch(mup, q, M) / den;
    for (int a = 0; a < N; ++a) pref *= qfactorial(q, i[a]) / qfactorial(q, j[a]);

    // q^{(<c-j,j> - <i,c-i>)/2}
    e4 = 0;
    std::fill(h.begin(), h.end(), 0);
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b) {
            h[a] += j[b];
            e4 -= 2L * j[a] * j[b];
            h[b] -= i[a];
            e4 += 2L * i[a] * i[b];
        }
    pref *= qe(e4, h);

    Exps jb = drop_last(j), ib = drop_last(i);
    int I = total(ib);
    F sum(0);
    for (const auto& k : boxes_below(jb)) {
        F t = phi_q(k, jb, L.inv(), power(q, -M), q);
        int K = total(k);
        long e = (long)M * (I + K);
        std::vector<long> hh(N, 0);
        for (int a = 0; a + 1 < N; ++a) {
            for (int b = a + 1; b + 1 < N; ++b) {
                hh[b] += 2L * ib[a];
                e -= (long)ib[a] * (ib[b] + k[b]);
            }
            hh[a] -= 2L * M;
        }
        t *= qe(4 * e, hh);
        F mugam = L * s.mu(N - 1) * power(q, -I - K);
        t *= poch(mugam, q, M) / poch(mup, q, M);
        t *= poch(power(q, -M), q, I) / poch(mugam, q, I);
        for (int a = 0; a + 1 < N; ++a) {
            F qg1 = s.mu(a).inv() * power(q, 1 - ib[a] - k[a]);
            t *= poch(qg1, q, ib[a]) / qfactorial(q, ib[a]);
        }
        sum += t;
    }
    return pref * sum;
}

template <Field F>
Matrix<F> r_closed(const RSpec<F>& s) {
    auto I = s.index();
    int n = (int)I.size();
    auto rows = parallel_map<std::vector<F>>(n, [&](std::size_t r) {
        std::vector<F> row;
        for (int c = 0; c < n; ++c) row.push_back(r_entry_closed(s, I[r], I[c]));
        return row;
    });
    Matrix<F> R(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) R(r, c) = rows[r][c];
    return R;
}

struct MatrixDiff {
    bool equal = true;
    std::string first;
};

template <Field F>
MatrixDiff matrix_diff(const Matrix<F>& A, const Matrix<F>& B, const std::vector<Exps>& I) {
    MatrixDiff d;
    for (int r = 0; r < A.rows(); ++r)
        for (int c = 0; c < A.cols(); ++c)
            if (!(A(r, c) == B(r, c))) {
                d.equal = false;
                d.first = "entry (" + exps_str(I[r]) + "," + exps_str(I[c]) + "): " + A(r, c).str() + " vs " +
                          B(r, c).str();
                return d;
            }
    return d;
}

// B_{1,i}(z) - sum_j R_ij B_{2,j}(z) at random z
template <Field F>
bool connection_residual_zero(const RSpec<F>& s, const Matrix<F>& R, std::uint64_t seed, int points) {
    std::mt19937_64 g(seed + 7);
    auto I = s.index();
    for (int t = 0; t < points; ++t) {
        std::vector<F> z;
        for (int a = 0; a < s.N; ++a) z.push_back(detail::draw_root<F>(g));
        for (size_t r = 0; r < I.size(); ++r) {
            F acc = base_poly(1, s, I[r], z, s.Lam);
            for (size_t c = 0; c < I.size(); ++c) acc -= R(r, c) * base_poly(2, s, I[c], z, s.Lam);
            if (!acc.is_zero()) return false;
        }
    }
    return true;
}

// B_{2,i}(z,Lam) = sum_j N_i(Lam)/N_j(Lam') Phi(i|j;1/Lam',1/Lam) B_{2,j}(z,Lam')
template <Field F>
bool lambda_change_holds(const RSpec<F>& s, const F& Lam2, std::uint64_t seed) {
    std::mt19937_64 g(seed + 11);
    auto I = s.index();
    F q = s.q();
    std::vector<F> z;
    for (int a = 0; a < s.N; ++a) z.push_back(detail::draw_root<F>(g));
    for (const auto& i : I) {
        F acc = base_poly(2, s, i, z, s.Lam);
        for (const auto& j : I)
            acc -= norm_N(s, i, s.Lam) / norm_N(s, j, Lam2) *
                   phi_q(drop_last(i), drop_last(j), Lam2.inv(), s.Lam.inv(), q) * base_poly(2, s, j, z, Lam2);
        if (!acc.is_zero()) return false;
    }
    return true;
}

// ------------------------------------------------- truncated Hamiltonian

// H = P_R^{-1} P_L on S(m), from the terminated equation without T.  Column
// theta carries x^nu (nu = (theta, 0)); the monomial x^g is reduced to
// Lambda^{g_N} x^{g - g_N}.  mu_a plays the role of d_a.
template <Field F>
Matrix<F> truncated_hamiltonian_matrix(const std::vector<int>& m, const F& q4, const std::vector<F>& mu, const F& Lam) {
    const int N = (int)m.size();
    F q = power(q4, 4), sq = power(q4, 2);
    auto I = compositions(N, std::accumulate(m.begin(), m.end(), 0));
    std::map<Exps, int> pos;
    std::vector<Exps> th;
    for (size_t n = 0; n < I.size(); ++n) {
        th.push_back(composition_to_support(m, I[n]));
        pos[th.back()] = (int)n;
    }
    const int n = (int)I.size();
    auto op = [&](bool left) {
        Matrix<F> A(n, n);
        for (int c = 0; c < n; ++c) {
            Exps nu = th[c];
            nu.push_back(0);
            long sq2 = 0;
            for (int a = 0; a < N; ++a) {
                long d = nu[a] - nu[(a + N - 1) % N];
                sq2 += d * d;
            }
            F pre = power(sq, (left ? 1 : -1) * sq2 / 2);
            std::vector<std::vector<F>> facs;
            for (int a = 0; a < N; ++a) {
                int tp = nu[a] - nu[(a + N - 1) % N];
                int len = m[a] - tp;
                if (len < 0) throw std::logic_error("support outside S(m)");
                F A0 = left ? power(q, -m[a] + tp) * mu[a] : power(q, -m[a]);
                facs.push_back(poch_poly(A0, q, len));
            }
            Exps kk(N, 0);
            auto rec = [&](auto&& self, int a, F v) -> void {
                if (a == N) {
                    Exps g(N);
                    for (int t = 0; t < N; ++t) g[t] = nu[t] + kk[t];
                    int lp = g[N - 1];
                    Exps rel(N - 1);
                    for (int t = 0; t + 1 < N; ++t) rel[t] = g[t] - lp;
                    auto it = pos.find(rel);
                    if (it == pos.end()) throw std::logic_error("image outside S(m)");
                    A(it->second, c) += v * power(Lam, lp);
                    return;
                }
                for (size_t k = 0; k < facs[a].size(); ++k) {
                    kk[a] = (int)k;
                    self(self, a + 1, v * facs[a][k]);
                }
            };
            rec(rec, 0, pre);
        }
        return A;
    };
    return op(false).inverse() * op(true);
}

struct GaugeReport {
    bool found = false;
    std::string transform;   // which of H^T, H^{-1} matched
    std::string index_map;   // identity or reversed
    // K, L entries as sign * q^{e/4}; nullopt when not a pure q-power
    std::vector<std::optional<std::pair<int, long>>> K, L;
    std::string detail;
};

namespace detail {

// A_ab = k_a R_ab l_b for some nonzero k, l; returns (k, l) with l_0 = 1.
template <Field F>
std::optional<std::pair<std::vector<F>, std::vector<F>>> rank_one_ratio(const Matrix<F>& A, const Matrix<F>& R) {
    int n = A.rows();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (A(a, b).is_zero() != R(a, b).is_zero()) return std::nullopt;
    // spanning tree through the nonzero pattern: assumes R(a,0) and R(0,b) nonzero
    for (int a = 0; a < n; ++a)
        if (R(a, 0).is_zero() || R(0, a).is_zero()) return std::nullopt;
    std::vector<F> k(n), l(n);
    for (int a = 0; a < n; ++a) k[a] = A(a, 0) / R(a, 0);
    for (int b = 0; b < n; ++b) l[b] = A(0, b) / R(0, b) / k[0];
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!(A(a, b) == k[a] * R(a, b) * l[b])) return std::nullopt;
    return std::make_pair(k, l);
}

template <Field F>
std::optional<std::pair<int, long>> as_q4_power(const F& v, const F& q4, long bound) {
    F p = power(q4, -bound);
    for (long e = -bound; e <= bound; ++e, p *= q4) {
        if (v == p) return std::make_pair(1, e);
        if (v == -p) return std::make_pair(-1, e);
    }
    return std::nullopt;
}

}  // namespace detail

// Searches the two relations found so far: H^T = K R L with the identity
// index map, and H^{-1} = K R L with reversed multi-indices, where R is taken
// at mu_a q^{m_a - M} and Lambda/q.
template <Field F>
GaugeReport gauge_match_to_hamiltonian(const std::vector<int>& m, std::uint64_t seed) {
    const int N = (int)m.size();
    const int M = std::accumulate(m.begin(), m.end(), 0);
    auto s = sample_rspec<F>(seed, N, M);
    F q = s.q();
    std::vector<F> mu;
    for (int a = 0; a < N; ++a) mu.push_back(s.mu(a));
    GaugeReport rep;
    Matrix<F> H = truncated_hamiltonian_matrix(m, s.q4, mu, s.Lam);
    RSpec<F> t = s;
    t.Lam = s.Lam / q;
    for (int a = 0; a < N; ++a) t.smu[a] = s.smu[a] * power(s.q4, 2L * (m[a] - M));
    Matrix<F> R = r_via_connection(t);
    auto I = s.index();
    std::vector<int> rev(I.size());
    for (size_t a = 0; a < I.size(); ++a) {
        Exps r(I[a].rbegin(), I[a].rend());
        rev[a] = (int)(std::find(I.begin(), I.end(), r) - I.begin());
    }
    Matrix<F> Rrev((int)I.size(), (int)I.size());
    for (size_t a = 0; a < I.size(); ++a)
        for (size_t b = 0; b < I.size(); ++b) Rrev((int)a, (int)b) = R(rev[a], rev[b]);

    struct Cand {
        std::string tr, map;
        Matrix<F> A, B;
    };
    std::vector<Cand> cands{{"H^T", "identity", H.transpose(), R}, {"H^T", "reversed", H.transpose(), Rrev}};
    try {
        Matrix<F> Hi = H.inverse();
        cands.push_back({"H^{-1}", "identity", Hi, R});
        cands.push_back({"H^{-1}", "reversed", Hi, Rrev});
    } catch (const std::domain_error&) {
    }
    for (auto& c : cands) {
        auto kl = detail::rank_one_ratio(c.A, c.B);
        if (!kl) continue;
        rep.found = true;
        rep.transform = c.tr;
        rep.index_map = c.map;
        long bound = 8L * (M + 2) * (M + 2) * N;
        for (auto& v : kl->first) rep.K.push_back(detail::as_q4_power(v, s.q4, bound));
        for (auto& v : kl->second) rep.L.push_back(detail::as_q4_power(v, s.q4, bound));
        return rep;
    }
    rep.detail = "no diagonal gauge within the searched ansatz";
    return rep;
}

}  // namespace gln
