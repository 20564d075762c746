#pragma once

// Young diagrams, colored box counts, and the lattice sets S(m) and I_M.

#include <vector>

namespace gln {

using Partition = std::vector<int>;
using Exps = std::vector<int>;
using PartitionTuple = std::vector<Partition>;

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_upto(int n);

int size(const Partition& l);
// 1-based part, zero past the end (and for i <= 0)
int part(const Partition& l, int i);
Partition conjugate(const Partition& l);

// |lambda|_k: sum of rows r >= 1 with r = k mod N
int colored_weight(const Partition& l, int k, int N);

// All N-tuples with at most D boxes in total, in a fixed order.
std::vector<PartitionTuple> enumerate_tuples(int N, int D);

// Exponent of x_i (entry i-1): sum_j |lambda^(j)|_{1+i-j}.  Equivalently a
// box in row r of lambda^(a) has color a + r - 1 mod N.
Exps colored_counts(const PartitionTuple& t, int N);

// Exponents modulo Lambda = x_1...x_N: (e_1 - e_N, ..., e_{N-1} - e_N).
Exps relative(const Exps& e);

// The same monomial modulo Lambda, read off column by column: a column of
// lambda^(i) with length c contributes z_r / z_{i-1}, r = c + i - 1 mod N,
// z_j = x_1...x_j and z_0 = z_N = 1.
Exps column_residue_exponents(const PartitionTuple& t, int N);

// Compositions of M into N nonnegative parts, lexicographically increasing.
std::vector<Exps> compositions(int N, int M);

// S(m) = {theta in Z^{N-1} : theta_1 <= m_1, theta_k - theta_{k-1} <= m_k,
//         -theta_{N-1} <= m_N}
std::vector<Exps> support_set(const std::vector<int>& m);
Exps support_to_composition(const std::vector<int>& m, const Exps& theta);
Exps composition_to_support(const std::vector<int>& m, const Exps& i);

// Corners of the N = 3 support triangle.
std::vector<Exps> triangle_vertices(const std::vector<int>& m);

long binomial(long n, long k);

}  // namespace gln
