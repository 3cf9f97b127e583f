#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "symmult/characters.hpp"

using namespace symmult;

TEST_CASE("trivial and sign characters") {
    for (int n = 1; n <= 8; ++n) {
        for (const CycleType& cls : conjugacy_classes(n)) {
            CHECK(character(Partition{n}, cls.cycles) == 1);
            std::vector<int> ones(n, 1);
            int sign = ((n - cls.cycles.length()) % 2 == 0) ? 1 : -1;
            CHECK(character(Partition(ones), cls.cycles) == sign);
        }
    }
}

TEST_CASE("S3 standard character row") {
    // canonical class order: (3), (2,1), (1,1,1)
    CHECK(character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(character(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
}

TEST_CASE("S4 character table matches the textbook values") {
    CharacterTable t(4);
    // classes in canonical order: (4),(3,1),(2,2),(2,1,1),(1^4)
    auto sizes = std::vector<BigInt>{6, 8, 3, 6, 1};
    for (std::size_t i = 0; i < sizes.size(); ++i)
        CHECK(t.classes()[i].class_size == sizes[i]);
    CHECK(t.row(Partition{4}) == std::vector<BigInt>{1, 1, 1, 1, 1});
    CHECK(t.row(Partition{3, 1}) == std::vector<BigInt>{-1, 0, -1, 1, 3});
    CHECK(t.row(Partition{2, 2}) == std::vector<BigInt>{0, -1, 2, 0, 2});
    CHECK(t.row(Partition{2, 1, 1}) == std::vector<BigInt>{1, 0, -1, -1, 3});
    CHECK(t.row(Partition{1, 1, 1, 1}) == std::vector<BigInt>{-1, 1, 1, -1, 1});
}

TEST_CASE("row orthogonality is exact for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        CharacterTable t(n);
        const BigInt nf = factorial(n);
        for (const Partition& a : t.labels()) {
            for (const Partition& b : t.labels()) {
                BigInt inner = 0;
                for (std::size_t i = 0; i < t.classes().size(); ++i)
                    inner += t.classes()[i].class_size * t.row(a)[i] * t.row(b)[i];
                CHECK(inner == (a == b ? nf : BigInt(0)));
            }
        }
    }
}

TEST_CASE("identity column gives dimensions for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        CharacterTable t(n);
        std::vector<int> ones(n, 1);
        const Partition id(ones);
        for (const Partition& a : t.labels()) {
            // identity class is last in canonical order
            CHECK(t.row(a).back() == dim_irrep(a));
            CHECK(character(a, id) == dim_irrep(a));
        }
    }
}

TEST_CASE("kronecker with a trivial factor is the delta") {
    for (int n = 2; n <= 6; ++n) {
        auto ps = partitions_of(n);
        for (const Partition& a : ps)
            for (const Partition& b : ps)
                CHECK(kronecker(a, b, Partition{n}) == (a == b ? 1 : 0));
    }
}

TEST_CASE("kronecker worked values") {
    CHECK(kronecker(Partition{2, 1}, Partition{2, 1}, Partition{2, 1}) == 1);
    CHECK(kronecker(Partition{2, 1}, Partition{2, 1}, Partition{3}) == 1);
    CHECK(kronecker(Partition{2, 1}, Partition{2, 1}, Partition{1, 1, 1}) == 1);
    CHECK_THROWS_AS(kronecker(Partition{2, 1}, Partition{2}, Partition{2, 1}), DomainError);
}

TEST_CASE("kronecker symmetry and tensor sum rule for n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        CharacterTable t(n);
        auto ps = partitions_of(n);
        for (const Partition& a : ps) {
            for (const Partition& b : ps) {
                BigInt total = 0;
                for (const Partition& c : ps) {
                    BigInt g = kronecker(a, b, c, t);
                    CHECK(g >= 0);
                    CHECK(g == kronecker(b, a, c, t));
                    CHECK(g == kronecker(c, b, a, t));
                    CHECK(g == kronecker(a, c, b, t));
                    total += g * dim_irrep(c);
                }
                CHECK(total == dim_irrep(a) * dim_irrep(b));
            }
        }
    }
}

TEST_CASE("restriction multiplicities: branching example") {
    // restriction of the S6 irrep (3,2,1) to S5 x S1
    Composition mu{5, 1};
    const Partition nu{3, 2, 1};
    std::vector<Partition> expected = {Partition{2, 2, 1}, Partition{3, 1, 1},
                                       Partition{3, 2}};
    for (const Partition& a : partitions_of(5)) {
        BigInt m = restriction_multiplicity(nu, mu, {a, Partition{1}});
        bool hit = std::find(expected.begin(), expected.end(), a) != expected.end();
        CHECK(m == (hit ? 1 : 0));
    }
}

TEST_CASE("restriction of the trivial irrep is trivial") {
    for (int n = 2; n <= 6; ++n) {
        for (const Partition& mu : partitions_of(n)) {
            std::vector<Partition> triv;
            for (int p : mu.parts()) triv.push_back(Partition{p});
            CHECK(restriction_multiplicity(Partition{n}, Composition(mu), triv) == 1);
        }
    }
}

TEST_CASE("kostka through characters equals the tableau count for n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        CharacterCache cache;
        for (const Partition& nu : partitions_of(n))
            for (const Partition& mu : partitions_of(n))
                CHECK(kostka_via_characters(nu, Composition(mu), &cache) ==
                      kostka(nu, Composition(mu)));
    }
}

TEST_CASE("corrected value: K^{(2,2)}_{(3,1)} is 1 on every backend") {
    CHECK(kostka(Partition{3, 1}, Composition{2, 2}) == 1);
    CHECK(kostka_via_characters(Partition{3, 1}, Composition{2, 2}) == 1);
    CHECK(restriction_multiplicity(Partition{3, 1}, Composition{2, 2},
                                   {Partition{2}, Partition{2}}) == 1);
}

TEST_CASE("LR coefficients through characters for |nu| <= 6") {
    CharacterCache cache;
    for (int n = 2; n <= 6; ++n)
        for (const Partition& nu : partitions_of(n))
            for (int a = 1; a < n; ++a)
                for (const Partition& lambda : partitions_of(a))
                    for (const Partition& mu : partitions_of(n - a))
                        CHECK(lr_via_characters(nu, lambda, mu, &cache) ==
                              lr_coefficient(nu, lambda, mu));
}

TEST_CASE("LR character backend worked examples") {
    CHECK(lr_via_characters(Partition{2, 1}, Partition{1}, Partition{2}) == 1);
    CHECK(lr_via_characters(Partition{6}, Partition{2}, Partition{4}) == 1);
    CHECK(lr_via_characters(Partition{5, 3, 1}, Partition{3, 1}, Partition{2, 2, 1}) ==
          lr_coefficient(Partition{5, 3, 1}, Partition{3, 1}, Partition{2, 2, 1}));
}

TEST_CASE("caps are enforced") {
    CHECK_THROWS_AS(character(Partition{31}, Partition{31}), SizeLimitError);
    CHECK_THROWS_AS(CharacterTable(21), SizeLimitError);
}
