#pragma once

// Truncated multivariate power series in x_1..x_N and operators acting on
// them.  A series carries its own truncation degree D (total degree); every
// operator here maps a degree-D series to a degree-D series, and since all
// of them are degree non-decreasing the truncation is exact.

#include "gln/partitions.hpp"
#include "gln/qfun.hpp"
#include "gln/scalar.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gln {

inline int degree(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

// theta_i - theta_{i-1} with cyclic index; i is 1-based
inline int theta_diff(const Exps& e, int i) {
    int N = (int)e.size();
    int a = ((i - 1) % N + N) % N, b = (a - 1 + N) % N;
    return e[a] - e[b];
}

// Delta(theta) = sum_i (theta_i^2 - theta_i theta_{i-1}), always an integer
inline long delta_form(const Exps& e) {
    long s = 0;
    int N = (int)e.size();
    for (int i = 0; i < N; ++i) s += (long)e[i] * e[i] - (long)e[i] * e[(i - 1 + N) % N];
    return s;
}

template <Field F>
class Series {
public:
    Series() = default;
    Series(int N, int D) : N_(N), D_(D) {
        if (N < 1 || D < 0) throw std::invalid_argument("series needs N >= 1 and D >= 0");
    }
    static Series one(int N, int D) { return monomial(N, D, Exps(N, 0), F(1)); }
    static Series monomial(int N, int D, const Exps& e, const F& c) {
        Series s(N, D);
        s.add(e, c);
        return s;
    }

    int N() const { return N_; }
    int D() const { return D_; }
    const std::map<Exps, F>& terms() const { return c_; }
    bool empty() const { return c_.empty(); }

    F coeff(const Exps& e) const {
        auto it = c_.find(e);
        return it == c_.end() ? F(0) : it->second;
    }

    void add(const Exps& e, const F& v) {
        if ((int)e.size() != N_) throw std::invalid_argument("exponent length mismatch");
        if (degree(e) > D_ || v.is_zero()) return;
        auto it = c_.find(e);
        if (it == c_.end()) {
            c_.emplace(e, v);
            return;
        }
        it->second += v;
        if (it->second.is_zero()) c_.erase(it);
    }

    Series& operator+=(const Series& o) {
        for (const auto& [e, v] : o.c_) add(e, v);
        return *this;
    }
    Series& operator-=(const Series& o) {
        for (const auto& [e, v] : o.c_) add(e, -v);
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }

    Series scaled(const F& s) const {
        Series r(N_, D_);
        for (const auto& [e, v] : c_) r.add(e, v * s);
        return r;
    }

    Series operator*(const Series& o) const {
        Series r(N_, std::min(D_, o.D_));
        for (const auto& [e, v] : c_)
            for (const auto& [f, w] : o.c_) {
                Exps g(N_);
                for (int i = 0; i < N_; ++i) g[i] = e[i] + f[i];
                r.add(g, v * w);
            }
        return r;
    }

    Series truncated(int D) const {
        Series r(N_, D);
        for (const auto& [e, v] : c_) r.add(e, v);
        return r;
    }

    friend bool operator==(const Series& a, const Series& b) {
        return a.N_ == b.N_ && a.c_ == b.c_;
    }

private:
    int N_ = 1, D_ = 0;
    std::map<Exps, F> c_;
};

template <Field F>
using Op = std::function<Series<F>(const Series<F>&)>;

template <Field F>
Op<F> identity_op() {
    return [](const Series<F>& s) { return s; };
}

// Operator product ops[0] * ops[1] * ... (the last one acts first).
template <Field F>
Op<F> compose(std::vector<Op<F>> ops) {
    return [ops = std::move(ops)](const Series<F>& s) {
        Series<F> r = s;
        for (auto it = ops.rbegin(); it != ops.rend(); ++it) r = (*it)(r);
        return r;
    };
}

template <Field F>
Op<F> diagonal(std::function<F(const Exps&)> f) {
    return [f = std::move(f)](const Series<F>& s) {
        Series<F> r(s.N(), s.D());
        for (const auto& [e, v] : s.terms()) r.add(e, v * f(e));
        return r;
    };
}

// Multiplication by a fixed series (which must be known to degree >= input).
template <Field F>
Op<F> multiply_by(Series<F> f) {
    return [f = std::move(f)](const Series<F>& s) {
        if (f.D() < s.D()) throw std::logic_error("multiplier known to too low a degree");
        return s * f;
    };
}

template <Field F>
Op<F> linear_combination(std::vector<std::pair<F, Op<F>>> parts) {
    return [parts = std::move(parts)](const Series<F>& s) {
        Series<F> r(s.N(), s.D());
        for (const auto& [c, op] : parts) r += op(s).scaled(c);
        return r;
    };
}

// Generator coef * x_idx * sqrt(q)^{s theta_idx + p theta_{idx-1} + n theta_{idx+1}}
// acting on x^theta.  x-hat is (s,p,n) = (2,-2,0) with coef alpha_idx,
// x-check (-2,2,0), the double hat (0,-1,1), plain multiplication (0,0,0).
template <Field F>
struct Gen {
    int idx;
    F coef;
    int e_self = 0, e_prev = 0, e_next = 0;

    static Gen hat(int i, F c = F(1)) { return {i, c, 2, -2, 0}; }
    static Gen check(int i, F c = F(1)) { return {i, c, -2, 2, 0}; }
    static Gen dhat(int i, F c = F(1)) { return {i, c, 0, -1, 1}; }
    static Gen plain(int i, F c = F(1)) { return {i, c, 0, 0, 0}; }
};

template <Field F>
using Word = std::vector<Gen<F>>;

template <Field F>
Series<F> apply_gen(const Gen<F>& g, const F& sq, const Series<F>& s) {
    int N = s.N();
    int a = ((g.idx - 1) % N + N) % N;
    int ap = (a - 1 + N) % N, an = (a + 1) % N;
    Series<F> r(N, s.D());
    for (const auto& [e, v] : s.terms()) {
        if (degree(e) + 1 > s.D()) continue;
        Exps f = e;
        f[a] += 1;
        long ex = (long)g.e_self * e[a] + (long)g.e_prev * e[ap] + (long)g.e_next * e[an];
        r.add(f, v * g.coef * power(sq, ex));
    }
    return r;
}

// Word g_1 g_2 ... g_k acting as an operator (g_k first).
template <Field F>
Op<F> word_op(Word<F> w, F sq) {
    return [w = std::move(w), sq](const Series<F>& s) {
        Series<F> r = s;
        for (auto it = w.rbegin(); it != w.rend(); ++it) r = apply_gen(*it, sq, r);
        return r;
    };
}

// multiplication by x^shift
template <Field F>
Op<F> monomial_op(Exps shift) {
    return [shift = std::move(shift)](const Series<F>& s) {
        Series<F> r(s.N(), s.D());
        for (const auto& [e, v] : s.terms()) {
            Exps f = e;
            for (int i = 0; i < s.N(); ++i) f[i] += shift[i];
            r.add(f, v);
        }
        return r;
    };
}

enum class QExp { E, Phi };

// e_q(c W) or phi(c W) for a strictly degree-raising operator W
template <Field F>
Op<F> q_exponential(Op<F> W, F c, F q, QExp kind) {
    return [W = std::move(W), c, q, kind](const Series<F>& s) {
        Series<F> r = s, cur = s;
        for (long n = 1;; ++n) {
            cur = W(cur);
            if (cur.empty()) break;
            if (n > s.D()) throw std::logic_error("q-exponential argument does not raise degree");
            F co = power(c, n) * (kind == QExp::E ? eq_coeff(q, n) : phi_coeff(q, n));
            r += cur.scaled(co);
        }
        return r;
    };
}

// Normal-ordered operator :prod_a f_a(x_a, theta): acting on x^nu as
// prod_a (sum_k c_{a,k}(nu) x_a^k) x^nu.  factor(nu, a, budget) returns the
// coefficients c_{a,0..} (a is 1-based); at most budget+1 are needed.
template <Field F>
using NormalFactor = std::function<std::vector<F>(const Exps&, int, int)>;

template <Field F>
Op<F> normal_ordered(NormalFactor<F> factor) {
    return [factor = std::move(factor)](const Series<F>& s) {
        int N = s.N();
        Series<F> r(N, s.D());
        for (const auto& [nu, v] : s.terms()) {
            int budget = s.D() - degree(nu);
            std::vector<std::vector<F>> cs;
            for (int a = 1; a <= N; ++a) cs.push_back(factor(nu, a, budget));
            Exps k(N, 0);
            auto rec = [&](auto&& self, int a, int used, const F& acc) -> void {
                if (acc.is_zero()) return;
                if (a == N) {
                    Exps f(N);
                    for (int j = 0; j < N; ++j) f[j] = nu[j] + k[j];
                    r.add(f, v * acc);
                    return;
                }
                for (int j = 0; j < (int)cs[a].size() && used + j <= budget; ++j) {
                    k[a] = j;
                    self(self, a + 1, used + j, acc * cs[a][j]);
                }
                k[a] = 0;
            };
            rec(rec, 0, 0, F(1));
        }
        return r;
    };
}

// Inverse of U = 1 + (strictly degree-raising): sum_k (1 - U)^k.
template <Field F>
Op<F> unipotent_inverse(Op<F> U) {
    return [U = std::move(U)](const Series<F>& s) {
        Series<F> r = s, cur = s;
        for (int k = 0; k <= s.D(); ++k) {
            cur = cur - U(cur);
            if (cur.empty()) break;
            r += cur;
        }
        return r;
    };
}

// exp of a series without constant term, via deg(m) c_m = sum deg(k) l_k c_{m-k}
template <Field F>
Series<F> series_exp(const Series<F>& L) {
    int N = L.N(), D = L.D();
    if (!L.coeff(Exps(N, 0)).is_zero()) throw std::invalid_argument("series_exp needs zero constant term");
    std::map<int, std::vector<std::pair<Exps, F>>> by_deg;
    Series<F> r = Series<F>::one(N, D);
    std::map<Exps, F> c;
    c[Exps(N, 0)] = F(1);
    for (int d = 1; d <= D; ++d) {
        std::map<Exps, F> layer;
        for (const auto& [k, lk] : L.terms()) {
            int dk = degree(k);
            if (dk > d) continue;
            for (const auto& [m, cm] : c) {
                if (degree(m) != d - dk) continue;
                Exps g(N);
                for (int i = 0; i < N; ++i) g[i] = k[i] + m[i];
                auto it = layer.find(g);
                F add = F(dk) * lk * cm;
                if (it == layer.end()) layer.emplace(g, add);
                else it->second += add;
            }
        }
        for (auto& [g, v] : layer) {
            F val = v / F(d);
            c[g] = val;
            r.add(g, val);
        }
    }
    return r;
}

struct DefectReport {
    bool zero = true;
    std::vector<int> nonzero_per_degree;
    Exps first;
    std::string first_value;
};

template <Field F>
DefectReport compare_series(const Series<F>& a, const Series<F>& b) {
    DefectReport rep;
    int D = std::min(a.D(), b.D());
    rep.nonzero_per_degree.assign(D + 1, 0);
    Series<F> diff = a.truncated(D) - b.truncated(D);
    for (const auto& [e, v] : diff.terms()) {
        if (rep.zero || degree(e) < degree(rep.first)) {
            rep.first = e;
            rep.first_value = v.str();
        }
        rep.zero = false;
        rep.nonzero_per_degree[degree(e)]++;
    }
    return rep;
}

// Compare two operators on every monomial of degree <= D; returns the first
// monomial where they differ.
template <Field F>
std::optional<Exps> first_disagreement(const Op<F>& A, const Op<F>& B, int N, int D) {
    std::vector<Exps> monos;
    Exps e(N, 0);
    auto rec = [&](auto&& self, int a, int rem) -> void {
        if (a == N) {
            monos.push_back(e);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            e[a] = v;
            self(self, a + 1, rem - v);
        }
        e[a] = 0;
    };
    rec(rec, 0, D);
    for (const auto& m : monos) {
        auto s = Series<F>::monomial(N, D, m, F(1));
        if (!(A(s) == B(s))) return m;
    }
    return std::nullopt;
}

std::string exps_str(const Exps& e);

}  // namespace gln
