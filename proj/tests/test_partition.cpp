#include <doctest.h>

#include <set>

#include "umbral/errors.hpp"
#include "umbral/partition.hpp"
#include "umbral/rational.hpp"

using namespace umbral;

TEST_CASE("conjugation") {
    CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition().conjugate() == Partition());
    for (const Partition& p : partitions_in_box(4, 4)) {
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().weight() == p.weight());
    }
}

TEST_CASE("box complement-conjugate") {
    CHECK(Partition().dagger(1, 1) == Partition({1}));
    CHECK(Partition({1}).dagger(1, 1) == Partition());
    CHECK(Partition({2, 1}).dagger(2, 2) == Partition({1}));
    CHECK_THROWS_AS(Partition({3}).dagger(1, 2), OutOfBox);
    // involution with the box transposed
    for (const Partition& p : partitions_in_box(3, 3)) CHECK(p.dagger(3, 3).dagger(3, 3) == p);
    for (const Partition& p : partitions_in_box(2, 3)) CHECK(p.dagger(2, 3).dagger(3, 2) == p);
}

TEST_CASE("index sets split the staircase") {
    // {lambda_i + M - i} and {dagger_j + N - j} partition {0..M+N-1}
    for (int M = 1; M <= 4; ++M)
        for (int N = 1; N <= 4; ++N)
            for (const Partition& p : partitions_in_box(M, N)) {
                std::set<long> seen;
                const auto lam = p.padded(M);
                for (int i = 1; i <= M; ++i) seen.insert(lam[static_cast<size_t>(i - 1)] + M - i);
                const auto dag = p.dagger(M, N).padded(N);
                for (int j = 1; j <= N; ++j) seen.insert(dag[static_cast<size_t>(j - 1)] + N - j);
                CHECK(seen.size() == static_cast<size_t>(M + N));
                CHECK(*seen.begin() == 0);
                CHECK(*seen.rbegin() == M + N - 1);
            }
}

TEST_CASE("negative mirror index") {
    CHECK(Partition().ddagger(1, 1) == std::vector<long>{-1});
    CHECK(Partition({2}).ddagger(2, 2) == std::vector<long>({-2, -4}));
    CHECK(Partition({1, 1}).ddagger(2, 2) == std::vector<long>({-3, -3}));
    // weakly decreasing, all entries <= -M
    for (const Partition& p : partitions_in_box(2, 3)) {
        const auto d = p.ddagger(2, 3);
        for (size_t i = 0; i + 1 < d.size(); ++i) CHECK(d[i] >= d[i + 1]);
        for (long v : d) CHECK(v <= -2);
    }
}

TEST_CASE("box enumeration is complete, unique, ordered") {
    CHECK(partitions_in_box(1, 1).size() == 2);
    const auto b22 = partitions_in_box(2, 2);
    CHECK(b22.size() == 6);
    CHECK(b22[0] == Partition());
    CHECK(b22[1] == Partition({1}));
    CHECK(b22[2] == Partition({2}));
    CHECK(b22[3] == Partition({1, 1}));
    CHECK(b22[4] == Partition({2, 1}));
    CHECK(b22[5] == Partition({2, 2}));
    // |box(M,N)| = C(M+N, M)
    CHECK(Rational(static_cast<long>(partitions_in_box(2, 3).size())) == binomial(5, 2));
    CHECK(Rational(static_cast<long>(partitions_in_box(4, 4).size())) == binomial(8, 4));
    std::set<std::string> uniq;
    for (const Partition& p : partitions_in_box(3, 4)) uniq.insert(p.str());
    CHECK(uniq.size() == partitions_in_box(3, 4).size());
}

TEST_CASE("text form and parsing") {
    CHECK(Partition({3, 1, 1}).str() == "(3,1,1)");
    CHECK(Partition().str() == "∅");
    CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
    CHECK(Partition::parse("") == Partition());
    CHECK(Partition::parse("0") == Partition());
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
}
