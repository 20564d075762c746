#include "doctest.h"
#include "gln/partitions.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace gln;

TEST_CASE("conjugation") {
    CHECK(conjugate({}) == Partition{});
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    for (const auto& l : partitions_upto(7)) CHECK(conjugate(conjugate(l)) == l);
}

TEST_CASE("partition counts") {
    const int p[] = {1, 1, 2, 3, 5, 7, 11, 15};
    for (int n = 0; n < 8; ++n) CHECK((int)partitions_of(n).size() == p[n]);
    CHECK(part({4, 2}, 2) == 2);
    CHECK(part({4, 2}, 3) == 0);
    CHECK(part({4, 2}, 0) == 0);
}

// box in row r of lambda^(a) has color a + r - 1 mod N
static Exps brute_colors(const PartitionTuple& t, int N) {
    Exps k(N, 0);
    for (int a = 1; a <= N; ++a)
        for (int r = 1; r <= (int)t[a - 1].size(); ++r)
            for (int j = 1; j <= t[a - 1][r - 1]; ++j) k[(((a + r - 2) % N) + N) % N]++;
    return k;
}

TEST_CASE("colored counts") {
    CHECK(colored_counts({{}, {}}, 2) == Exps{0, 0});
    CHECK(colored_counts({{1}, {}}, 2) == Exps{1, 0});
    CHECK(colored_counts({{}, {2}, {}}, 3) == brute_colors({{}, {2}, {}}, 3));
    CHECK(colored_counts({{3, 2, 1}}, 1) == Exps{6});
    for (const auto& t : enumerate_tuples(3, 4)) CHECK(colored_counts(t, 3) == brute_colors(t, 3));
}

TEST_CASE("tuple enumeration") {
    CHECK(enumerate_tuples(3, 0).size() == 1);
    auto one = enumerate_tuples(1, 2);
    std::set<Partition> got;
    for (const auto& t : one) got.insert(t[0]);
    CHECK(got == std::set<Partition>{{}, {1}, {2}, {1, 1}});
    for (const auto& t : enumerate_tuples(2, 3)) {
        auto k = colored_counts(t, 2);
        CHECK(k[0] + k[1] <= 3);
    }
}

TEST_CASE("column residues agree with colored counts modulo Lambda") {
    std::mt19937_64 g(8);
    auto all = enumerate_tuples(3, 5);
    for (int t = 0; t < 200; ++t) {
        const auto& tup = all[g() % all.size()];
        CHECK(column_residue_exponents(tup, 3) == relative(colored_counts(tup, 3)));
    }
}

TEST_CASE("support sets") {
    for (int N = 2; N <= 5; ++N)
        for (int M = 0; M <= 6; ++M)
            for (const auto& m : compositions(N, M)) {
                auto S = support_set(m);
                REQUIRE((long)S.size() == binomial(M + N - 1, N - 1));
                std::set<Exps> img;
                for (const auto& th : S) {
                    auto i = support_to_composition(m, th);
                    CHECK(composition_to_support(m, i) == th);
                    img.insert(i);
                }
                CHECK(img.size() == S.size());
            }
    CHECK(support_set({0, 0, 0}).size() == 1);
    CHECK(support_set({2, 0, 0}).size() == 6);
    CHECK(compositions(3, 3).size() == 10);
}

TEST_CASE("triangle corners") {
    auto v = triangle_vertices({1, 2, 3});
    CHECK(v == std::vector<Exps>{{-5, -3}, {1, -3}, {1, 3}});
    // every support point lies in the hull of the corners
    for (const auto& m : compositions(3, 4)) {
        auto c = triangle_vertices(m);
        for (const auto& th : support_set(m)) {
            CHECK(th[0] <= c[1][0]);
            CHECK(th[1] >= c[0][1]);
            CHECK(th[1] - th[0] <= c[2][1] - c[2][0]);
        }
    }
}
