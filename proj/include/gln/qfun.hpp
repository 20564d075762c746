#pragma once

// q-Pochhammer symbols, brackets and q-exponential coefficients.

#include "gln/scalar.hpp"

#include <stdexcept>
#include <vector>

namespace gln {

// (a;q)_n, with (a;q)_{-n} = 1/(a q^{-n};q)_n
template <Field F>
F poch(const F& a, const F& q, long n) {
    F r(1);
    if (n >= 0) {
        F t = a;
        for (long k = 0; k < n; ++k) {
            r *= F(1) - t;
            t *= q;
        }
        return r;
    }
    F qi = q.inv(), t = a * qi;
    for (long k = 1; k <= -n; ++k) {
        F f = F(1) - t;
        if (f.is_zero()) throw std::domain_error("pole of (a;q)_n with negative n");
        r /= f;
        t *= qi;
    }
    return r;
}

template <Field F>
F qfactorial(const F& q, long n) { return poch(q, q, n); }

template <Field F>
F qbinom(long n, long k, const F& q) {
    if (k < 0 || k > n) return F(0);
    return qfactorial(q, n) / (qfactorial(q, k) * qfactorial(q, n - k));
}

// Polynomial coefficients of (a x;q)_n = sum_k c_k x^k, n >= 0.
template <Field F>
std::vector<F> poch_poly(const F& a, const F& q, long n) {
    if (n < 0) throw std::domain_error("poch_poly needs n >= 0");
    std::vector<F> c;
    for (long k = 0; k <= n; ++k)
        c.push_back(qbinom(n, k, q) * power(-a, k) * power(q, k * (k - 1) / 2));
    return c;
}

// Bracket [u;p]_n with u = ru^2 and p = rp^2:
//   n >= 0: prod_{k<n} (p^{-k/2} u^{-1/2} - p^{k/2} u^{1/2})
//   n < 0 : u^{-n/2} p^{-n(n-1)/4} (u;p)_n
template <Field F>
F bracket(const F& ru, const F& rp, long n) {
    if (n >= 0) {
        F r(1), rpi = rp.inv(), rui = ru.inv();
        F lo = rui, hi = ru;
        for (long k = 0; k < n; ++k) {
            r *= lo - hi;
            lo *= rpi;
            hi *= rp;
        }
        return r;
    }
    return power(ru, -n) * power(rp, -n * (n - 1) / 2) * poch(ru * ru, rp * rp, n);
}

// [x] = x^{-1/2} - x^{1/2} given the root of x
template <Field F>
F sinh_bracket(const F& rx) { return rx.inv() - rx; }

// e_q(z) = sum z^n/(q;q)_n = 1/phi(z)
template <Field F>
F eq_coeff(const F& q, long n) { return qfactorial(q, n).inv(); }

// phi(z) = (z;q)_inf = sum (-1)^n q^{n(n-1)/2} z^n/(q;q)_n
template <Field F>
F phi_coeff(const F& q, long n) {
    return sign_power<F>(n) * power(q, n * (n - 1) / 2) / qfactorial(q, n);
}

// [r]_{q^{-1}}! = prod_{j=1}^r (1 - q^{-j})/(1 - q^{-1})
template <Field F>
F qint_factorial_inv_base(const F& q, long r) {
    F qi = q.inv(), out(1);
    for (long j = 1; j <= r; ++j) out *= (F(1) - power(qi, j)) / (F(1) - qi);
    return out;
}

}  // namespace gln
