#pragma once

#include "gln/scalar.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace gln {

// Parameters of the gl_N problem, stored as square roots.  Indices are
// 1-based and cyclic (index 0 is the same as N).
template <Field F>
struct ParamSet {
    int N = 1;
    F sqrt_q{2}, sqrt_kappa{3};
    std::vector<F> sqrt_b, sqrt_d, sqrt_dbar;

    int slot(int i) const { return ((i - 1) % N + N) % N; }

    F q() const { return sqrt_q * sqrt_q; }
    F kappa() const { return sqrt_kappa * sqrt_kappa; }
    F rb(int i) const { return sqrt_b[slot(i)]; }
    F rd(int i) const { return sqrt_d[slot(i)]; }
    F rdbar(int i) const { return sqrt_dbar[slot(i)]; }
    F b(int i) const { return rb(i) * rb(i); }
    F d(int i) const { return rd(i) * rd(i); }
    F dbar(int i) const { return rdbar(i) * rdbar(i); }
    // coefficient of x-hat_i
    F alpha(int i) const { return d(i) * dbar(i); }
    F D_N() const {
        F r(1);
        for (int i = 1; i <= N; ++i) r *= alpha(i);
        return r;
    }
    // q^(e/2)
    F q_half(long e) const { return power(sqrt_q, e); }
    // the shift operator T multiplies x^theta by prod (kappa b_i / b_{i+1})^theta_i
    F shift_ratio(int i) const { return kappa() * b(i) / b(i + 1); }
};

namespace detail {

inline std::uint64_t draw(std::mt19937_64& g, std::uint64_t n) { return g() % n; }

template <Field F>
F draw_root(std::mt19937_64& g);

template <>
inline Rational draw_root<Rational>(std::mt19937_64& g) {
    long n = 1 + (long)draw(g, 9), d = 1 + (long)draw(g, 9);
    if (draw(g, 2)) n = -n;
    return Rational(n, d);
}

template <>
inline ModP draw_root<ModP>(std::mt19937_64& g) {
    return ModP::raw(2 + draw(g, ModP::P - 4));
}

template <Field F>
bool is_unit_or_zero(const F& x) {
    return x.is_zero() || x == F(1) || x == F(-1);
}

}  // namespace detail

// Checks that q, kappa and the ratios b_i/b_j avoid small multiplicative
// relations, so that no vector-multiplet bracket vanishes at small size.
template <Field F>
bool generic_enough(const ParamSet<F>& p, int bound) {
    F q = p.q(), k = p.kappa();
    std::vector<F> qa, ka;
    for (int a = -bound; a <= bound; ++a) {
        qa.push_back(power(q, a));
        ka.push_back(power(k, a));
    }
    for (int i = 1; i <= p.N; ++i)
        for (int j = 1; j <= p.N; ++j) {
            F r = p.b(i) / p.b(j);
            for (int a = 0; a <= 2 * bound; ++a)
                for (int c = 0; c <= 2 * bound; ++c) {
                    if (i == j && a == bound && c == bound) continue;
                    if (r * qa[a] * ka[c] == F(1)) return false;
                }
        }
    return true;
}

// Deterministic sampler: same (seed, N) gives the same parameters.  All
// roots and their squares are distinct and avoid {0, 1, -1}.
template <Field F>
ParamSet<F> sample_params(std::uint64_t seed, int N, int bound = 10) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    std::mt19937_64 g(seed * 0x9E3779B97F4A7C15ULL + 17);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<F> roots;
        auto fresh = [&]() {
            for (;;) {
                F x = detail::draw_root<F>(g);
                if (detail::is_unit_or_zero(x) || detail::is_unit_or_zero(x * x)) continue;
                bool dup = false;
                for (const F& y : roots)
                    if (y == x || y == -x || y * y == x * x || y * y == x || y == x * x) dup = true;
                if (dup) continue;
                roots.push_back(x);
                return x;
            }
        };
        ParamSet<F> p;
        p.N = N;
        p.sqrt_q = fresh();
        p.sqrt_kappa = fresh();
        for (int i = 0; i < N; ++i) p.sqrt_b.push_back(fresh());
        for (int i = 0; i < N; ++i) p.sqrt_d.push_back(fresh());
        for (int i = 0; i < N; ++i) p.sqrt_dbar.push_back(fresh());
        if (generic_enough(p, bound)) return p;
    }
    throw std::runtime_error("could not sample generic parameters");
}

}  // namespace gln
