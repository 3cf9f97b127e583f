#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "symmult/partition.hpp"
#include "symmult/permutation.hpp"

using namespace symmult;

TEST_CASE("partitions_of enumerates canonically") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    REQUIRE(p0[0].empty());

    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition{4});
    CHECK(p4[1] == Partition{3, 1});
    CHECK(p4[2] == Partition{2, 2});
    CHECK(p4[3] == Partition{2, 1, 1});
    CHECK(p4[4] == Partition{1, 1, 1, 1});

    CHECK(partitions_of(10).size() == 42);

    CHECK_THROWS_AS(partitions_of(41), SizeLimitError);
}

TEST_CASE("partition validation and canonical form") {
    CHECK(Partition({3, 1, 0, 0}) == Partition{3, 1});
    CHECK_THROWS_AS(Partition({1, 3}), DomainError);
    CHECK_THROWS_AS(Partition({3, -1}), DomainError);
    CHECK(Partition::sorted_from({1, 3, 0, 2}) == Partition{3, 2, 1});
}

TEST_CASE("partition parsing and printing") {
    CHECK(parse_partition("3,1") == Partition{3, 1});
    CHECK(parse_partition("(3,1)") == Partition{3, 1});
    CHECK(parse_partition("()").empty());
    CHECK(Partition{3, 1}.to_string() == "(3,1)");
    CHECK_THROWS_AS(parse_partition("3,,1"), DomainError);
}

TEST_CASE("dominance examples") {
    CHECK(dominates(Partition{4}, Partition{4}));
    CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
    CHECK_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
    CHECK_THROWS_AS(dominates(Partition{2}, Partition{3}), DomainError);
}

TEST_CASE("dominance is a partial order up to n = 8") {
    for (int n = 1; n <= 8; ++n) {
        auto ps = partitions_of(n);
        for (const auto& a : ps) {
            CHECK(dominates(a, a));
            for (const auto& b : ps) {
                if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
                for (const auto& c : ps)
                    if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
            }
        }
    }
}

TEST_CASE("irrep dimensions by hooks") {
    CHECK(dim_irrep(Partition{7}) == 1);
    CHECK(dim_irrep(Partition{2, 1}) == 2);
    CHECK(dim_irrep(Partition{3, 2, 1}) == 16);
    CHECK(dim_irrep(Partition{1, 1, 1}) == 1);
}

TEST_CASE("sum of squared dimensions is n! for n <= 10") {
    for (int n = 1; n <= 10; ++n) {
        BigInt sum = 0;
        for (const auto& p : partitions_of(n)) {
            BigInt d = dim_irrep(p);
            sum += d * d;
        }
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("dimension invariant under conjugation for n <= 10") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& p : partitions_of(n)) {
            CHECK(dim_irrep(p) == dim_irrep(p.conjugate()));
            CHECK(p.conjugate().conjugate() == p);
        }
}

TEST_CASE("conjugacy class data") {
    auto c3 = conjugacy_classes(3);
    REQUIRE(c3.size() == 3);
    CHECK(c3[0].cycles == Partition{3});
    CHECK(c3[0].class_size == 2);
    CHECK(c3[1].cycles == Partition{2, 1});
    CHECK(c3[1].class_size == 3);
    CHECK(c3[2].cycles == Partition{1, 1, 1});
    CHECK(c3[2].class_size == 1);

    auto c1 = conjugacy_classes(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].class_size == 1);

    auto c5 = conjugacy_classes(5);
    CHECK(c5.size() == 7);
    BigInt total = 0;
    for (const auto& c : c5) total += c.class_size;
    CHECK(total == 120);
}

TEST_CASE("class sizes sum to n! for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (const auto& c : conjugacy_classes(n)) total += c.class_size;
        CHECK(total == factorial(n));
    }
}

TEST_CASE("class sizes match brute-force permutation counts for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        std::map<Partition, long> counted;
        for (const Perm& p : all_perms(n)) ++counted[cycle_type(p)];
        for (const auto& c : conjugacy_classes(n))
            CHECK(BigInt(counted.at(c.cycles)) == c.class_size);
    }
}

TEST_CASE("permutation helpers") {
    Perm a = {1, 2, 0}; // 3-cycle
    CHECK(cycle_type(a) == Partition{3});
    CHECK(compose(a, inverse(a)) == identity_perm(3));

    auto word = adjacent_word(a);
    Perm rebuilt = identity_perm(3);
    for (int i : word) rebuilt = compose(rebuilt, adjacent_transposition(3, i));
    CHECK(rebuilt == a);

    auto perms = all_perms(4);
    for (std::size_t i = 0; i < perms.size(); ++i) CHECK(lex_rank(perms[i]) == i);
}

TEST_CASE("adjacent word rebuilds random permutations") {
    std::mt19937_64 rng(12345);
    for (int n = 2; n <= 8; ++n) {
        for (int trial = 0; trial < 50; ++trial) {
            Perm p = identity_perm(n);
            std::shuffle(p.begin(), p.end(), rng);
            Perm rebuilt = identity_perm(n);
            for (int i : adjacent_word(p)) rebuilt = compose(rebuilt, adjacent_transposition(n, i));
            CHECK(rebuilt == p);
        }
    }
}
