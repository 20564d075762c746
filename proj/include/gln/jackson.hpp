#pragma once

// Cocycle functions phi_r(z_1..z_M) built by antisymmetrizing products of
// the factors f_l against Delta(q,z) and dividing by the Vandermonde.

#include "gln/linalg.hpp"
#include "gln/parallel.hpp"
#include "gln/params.hpp"
#include "gln/partitions.hpp"
#include "gln/qfun.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace gln {

template <Field F>
struct CocycleSpec {
    int N = 2, M = 1;
    F q{2};
    std::vector<F> a, b;  // a_1..a_N, b_1..b_N stored 0-based
};

// a_k = b_k^{-1} q^{1-m_k} kappa^{k-1},  b_k = b_k d_k^{-1} kappa^{1-k}
template <Field F>
CocycleSpec<F> cocycle_spec(const ParamSet<F>& p, const std::vector<int>& m) {
    if ((int)m.size() != p.N) throw std::invalid_argument("mass vector length must be N");
    CocycleSpec<F> s;
    s.N = p.N;
    s.M = std::accumulate(m.begin(), m.end(), 0);
    s.q = p.q();
    F k = p.kappa();
    for (int i = 1; i <= p.N; ++i) {
        s.a.push_back(p.b(i).inv() * power(s.q, 1 - m[i - 1]) * power(k, i - 1));
        s.b.push_back(p.b(i) / p.d(i) * power(k, 1 - i));
    }
    return s;
}

template <Field F>
CocycleSpec<F> sample_cocycle_spec(std::uint64_t seed, int N, int M) {
    std::vector<int> m(N, 0);
    m[0] = M;
    return cocycle_spec(sample_params<F>(seed, N), m);
}

// f_l(z) = (1 - z/a_{l+2})...(1 - z/a_N)(1 - b_1 z)...(1 - b_l z)
template <Field F>
F cocycle_factor(const CocycleSpec<F>& s, int l, const F& z) {
    if (l < 0 || l >= s.N) throw std::out_of_range("cocycle factor index");
    F r(1);
    for (int k = l + 2; k <= s.N; ++k) r *= F(1) - z / s.a[k - 1];
    for (int k = 1; k <= l; ++k) r *= F(1) - s.b[k - 1] * z;
    return r;
}

namespace detail {

inline int perm_sign(const std::vector<int>& p) {
    int s = 1;
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        size_t len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) s = -s;
    }
    return s;
}

}  // namespace detail

// phi_r(z) at a point with distinct coordinates.
template <Field F>
F cocycle_basis(const CocycleSpec<F>& s, const Exps& r, const std::vector<F>& z) {
    const int M = s.M;
    if ((int)r.size() != s.N || std::accumulate(r.begin(), r.end(), 0) != M)
        throw std::invalid_argument("label must have N parts summing to M");
    if ((int)z.size() != M) throw std::invalid_argument("need M points");
    F vdm(1);
    for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j) vdm *= z[i] - z[j];
    if (vdm.is_zero()) throw std::invalid_argument("repeated z-points");
    std::vector<int> lab;  // factor index used by slot i
    for (int l = 0; l < s.N; ++l)
        for (int t = 0; t < r[l]; ++t) lab.push_back(l);
    F qi = s.q.inv();
    std::vector<int> perm(M);
    std::iota(perm.begin(), perm.end(), 0);
    F acc(0);
    do {
        F t(1);
        for (int i = 0; i < M; ++i) t *= cocycle_factor(s, lab[i], z[perm[i]]);
        for (int i = 0; i < M; ++i)
            for (int j = i + 1; j < M; ++j) t *= z[perm[i]] - qi * z[perm[j]];
        if (detail::perm_sign(perm) < 0) acc -= t;
        else acc += t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    F norm(1);
    for (int v : r) norm *= qint_factorial_inv_base(s.q, v);
    return acc / (norm * vdm);
}

// rank of (phi_r(z^(t)))_{r, t} over C(N+M-1, M) random configurations
template <Field F>
int cocycle_rank(const CocycleSpec<F>& s, std::uint64_t seed) {
    auto labels = compositions(s.N, s.M);
    const int n = (int)labels.size();
    std::mt19937_64 g(seed + 3);
    std::vector<std::vector<F>> pts;
    while ((int)pts.size() < n) {
        std::vector<F> z;
        for (int i = 0; i < s.M; ++i) z.push_back(detail::draw_root<F>(g));
        bool distinct = true;
        for (int i = 0; i < s.M; ++i)
            for (int j = i + 1; j < s.M; ++j) distinct = distinct && !(z[i] == z[j]);
        if (distinct) pts.push_back(z);
    }
    auto rows = parallel_map<std::vector<F>>(n, [&](std::size_t r) {
        std::vector<F> row;
        for (const auto& z : pts) row.push_back(cocycle_basis(s, labels[r], z));
        return row;
    });
    Matrix<F> A(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) A(r, c) = rows[r][c];
    return A.rank();
}

template <Field F>
int cocycle_rank(int N, int M, std::uint64_t seed = 1) {
    return cocycle_rank(sample_cocycle_spec<F>(seed, N, M), seed);
}

// phi_r(z_sigma) = phi_r(z) for every permutation sigma
template <Field F>
bool cocycle_symmetric(const CocycleSpec<F>& s, const Exps& r, const std::vector<F>& z) {
    F base = cocycle_basis(s, r, z);
    std::vector<int> perm(s.M);
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<F> w;
        for (int i : perm) w.push_back(z[i]);
        if (!(cocycle_basis(s, r, w) == base)) return false;
    }
    return true;
}

// Exactness of the Vandermonde division: phi_r must coincide with the
// tensor interpolant of degree N-1 in each variable (nodes disjoint across
// variables) at fresh random points.
template <Field F>
bool cocycle_is_polynomial(const CocycleSpec<F>& s, const Exps& r, std::uint64_t seed, int probes = 3) {
    const int M = s.M, K = s.N;  // K nodes per variable
    if (M == 0) return true;
    std::mt19937_64 g(seed + 5);
    std::vector<std::vector<F>> nodes(M);
    std::vector<F> used;
    auto fresh = [&]() {
        for (;;) {
            F x = detail::draw_root<F>(g);
            if (std::find(used.begin(), used.end(), x) == used.end()) {
                used.push_back(x);
                return x;
            }
        }
    };
    for (int i = 0; i < M; ++i)
        for (int k = 0; k < K; ++k) nodes[i].push_back(fresh());
    long total = 1;
    for (int i = 0; i < M; ++i) total *= K;
    std::vector<F> vals(total);
    for (long idx = 0; idx < total; ++idx) {
        std::vector<F> z(M);
        long t = idx;
        for (int i = 0; i < M; ++i) {
            z[i] = nodes[i][t % K];
            t /= K;
        }
        vals[idx] = cocycle_basis(s, r, z);
    }
    auto lagrange = [&](int i, int k, const F& x) {
        F v(1);
        for (int j = 0; j < K; ++j)
            if (j != k) v *= (x - nodes[i][j]) / (nodes[i][k] - nodes[i][j]);
        return v;
    };
    for (int p = 0; p < probes; ++p) {
        std::vector<F> z;
        for (int i = 0; i < M; ++i) z.push_back(fresh());
        F interp(0);
        for (long idx = 0; idx < total; ++idx) {
            F w = vals[idx];
            long t = idx;
            for (int i = 0; i < M; ++i) {
                w *= lagrange(i, (int)(t % K), z[i]);
                t /= K;
            }
            interp += w;
        }
        if (!(interp == cocycle_basis(s, r, z))) return false;
    }
    return true;
}

}  // namespace gln
