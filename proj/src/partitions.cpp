#include "gln/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gln {

namespace {

void partitions_rec(int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxpart); k >= 1; --k) {
        cur.push_back(k);
        partitions_rec(n - k, k, cur, out);
        cur.pop_back();
    }
}

int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("negative partition size");
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<Partition> partitions_upto(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto p = partitions_of(k);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

int size(const Partition& l) { return std::accumulate(l.begin(), l.end(), 0); }

int part(const Partition& l, int i) {
    if (i < 1 || i > (int)l.size()) return 0;
    return l[i - 1];
}

Partition conjugate(const Partition& l) {
    Partition c;
    if (l.empty()) return c;
    for (int j = 1; j <= l[0]; ++j) {
        int len = 0;
        for (int r : l)
            if (r >= j) ++len;
        c.push_back(len);
    }
    return c;
}

int colored_weight(const Partition& l, int k, int N) {
    int s = 0;
    for (int r = 1; r <= (int)l.size(); ++r)
        if (mod(r - k, N) == 0) s += l[r - 1];
    return s;
}

std::vector<PartitionTuple> enumerate_tuples(int N, int D) {
    if (N < 1 || D < 0) throw std::invalid_argument("enumerate_tuples needs N >= 1, D >= 0");
    auto all = partitions_upto(D);
    std::vector<PartitionTuple> out;
    PartitionTuple cur;
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == N) {
            out.push_back(cur);
            return;
        }
        for (const auto& p : all) {
            int s = size(p);
            if (s > rem) continue;
            cur.push_back(p);
            self(self, i + 1, rem - s);
            cur.pop_back();
        }
    };
    rec(rec, 0, D);
    return out;
}

Exps colored_counts(const PartitionTuple& t, int N) {
    Exps k(N, 0);
    for (int a = 1; a <= (int)t.size(); ++a)
        for (int r = 1; r <= (int)t[a - 1].size(); ++r) k[mod(a + r - 2, N)] += t[a - 1][r - 1];
    return k;
}

Exps relative(const Exps& e) {
    Exps r;
    for (size_t j = 0; j + 1 < e.size(); ++j) r.push_back(e[j] - e.back());
    return r;
}

Exps column_residue_exponents(const PartitionTuple& t, int N) {
    // z_j = x_1...x_j has relative exponents (1,...,1,0,...,0) (j ones)
    Exps r(N > 0 ? N - 1 : 0, 0);
    auto add_z = [&](int j, int sgn) {
        j = mod(j, N);
        for (int a = 0; a < j; ++a) r[a] += sgn;
    };
    for (int i = 1; i <= (int)t.size(); ++i) {
        Partition c = conjugate(t[i - 1]);
        for (int len : c) {
            add_z(len + i - 1, +1);
            add_z(i - 1, -1);
        }
    }
    return r;
}

std::vector<Exps> compositions(int N, int M) {
    if (N < 1 || M < 0) throw std::invalid_argument("compositions needs N >= 1, M >= 0");
    std::vector<Exps> out;
    Exps cur(N, 0);
    auto rec = [&](auto&& self, int a, int rem) -> void {
        if (a == N - 1) {
            cur[a] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            cur[a] = v;
            self(self, a + 1, rem - v);
        }
    };
    rec(rec, 0, M);
    return out;
}

Exps composition_to_support(const std::vector<int>& m, const Exps& i) {
    int N = (int)m.size();
    int M = std::accumulate(m.begin(), m.end(), 0);
    Exps theta(N - 1);
    int tt = M;
    for (int k = 0; k + 1 < N; ++k) {
        tt -= i[k];  // shifted theta_{k+1}
        int tail = 0;
        for (int a = k + 1; a < N; ++a) tail += m[a];
        theta[k] = tt - tail;
    }
    return theta;
}

Exps support_to_composition(const std::vector<int>& m, const Exps& theta) {
    int N = (int)m.size();
    int M = std::accumulate(m.begin(), m.end(), 0);
    std::vector<int> tt(N - 1);
    for (int k = 0; k + 1 < N; ++k) {
        int tail = 0;
        for (int a = k + 1; a < N; ++a) tail += m[a];
        tt[k] = theta[k] + tail;
    }
    Exps i(N);
    if (N == 1) {
        i[0] = M;
        return i;
    }
    i[0] = M - tt[0];
    for (int k = 1; k + 1 < N; ++k) i[k] = tt[k - 1] - tt[k];
    i[N - 1] = tt[N - 2];
    return i;
}

std::vector<Exps> support_set(const std::vector<int>& m) {
    int N = (int)m.size();
    if (N < 1) throw std::invalid_argument("support_set needs N >= 1");
    for (int v : m)
        if (v < 0) throw std::invalid_argument("masses must be nonnegative");
    int M = std::accumulate(m.begin(), m.end(), 0);
    std::vector<Exps> out;
    for (const auto& i : compositions(N, M)) out.push_back(composition_to_support(m, i));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Exps> triangle_vertices(const std::vector<int>& m) {
    if (m.size() != 3) throw std::invalid_argument("triangle_vertices is for N = 3");
    return {{-m[1] - m[2], -m[2]}, {m[0], -m[2]}, {m[0], m[0] + m[1]}};
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

}  // namespace gln
