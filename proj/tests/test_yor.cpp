#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "symmult/characters.hpp"
#include "symmult/qft.hpp" // kron
#include "symmult/yor.hpp"

using namespace symmult;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

std::vector<Eigen::MatrixXd> regular_rep(int n) {
    auto elems = all_perms(n);
    const int N = static_cast<int>(elems.size());
    std::vector<Eigen::MatrixXd> mats;
    for (const Perm& g : elems) {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(N, N);
        for (int a = 0; a < N; ++a) m(lex_rank(compose(g, elems[a])), a) = 1.0;
        mats.push_back(std::move(m));
    }
    return mats;
}

} // namespace

TEST_CASE("one-dimensional irreps") {
    OrthogonalRep triv(Partition{4});
    for (int i = 0; i < 3; ++i) CHECK(triv.generator(i)(0, 0) == 1.0);

    OrthogonalRep sign(Partition{1, 1});
    CHECK(sign.dim() == 1);
    CHECK(sign.generator(0)(0, 0) == -1.0);
}

TEST_CASE("standard rep of S3") {
    OrthogonalRep rep(Partition{2, 1});
    REQUIRE(rep.dim() == 2);
    // subgroup-adapted basis: [[1,3],[2]] then [[1,2],[3]]
    CHECK(rep.basis()[0] == SytGrid{{1, 3}, {2}});
    CHECK(rep.basis()[1] == SytGrid{{1, 2}, {3}});
    CHECK(rep.generator(0)(0, 0) == Catch::Approx(-1.0));
    CHECK(rep.generator(0)(1, 1) == Catch::Approx(1.0));
    CHECK(rep.generator(1)(0, 0) == Catch::Approx(0.5));
    CHECK(rep.generator(1)(1, 0) == Catch::Approx(std::sqrt(3.0) / 2));

    CHECK(rep.matrix(identity_perm(3)).isIdentity(1e-12));
    CHECK((rep.matrix(adjacent_transposition(3, 0)) - rep.generator(0)).norm() < 1e-12);
    CHECK(rep.matrix({1, 2, 0}).trace() == Catch::Approx(-1.0).margin(1e-9));
}

TEST_CASE("generators are orthogonal involutions satisfying Coxeter relations") {
    for (int n = 2; n <= 6; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            OrthogonalRep rep(lambda);
            const int d = rep.dim();
            Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
            for (int i = 0; i + 1 < n; ++i) {
                const Eigen::MatrixXd& m = rep.generator(i);
                CHECK(max_abs(m * m.transpose() - id) < 1e-10);
                CHECK(max_abs(m * m - id) < 1e-10);
            }
            for (int i = 0; i + 2 < n; ++i) {
                Eigen::MatrixXd braid = rep.generator(i) * rep.generator(i + 1);
                CHECK(max_abs(braid * braid * braid - id) < 1e-10);
            }
            for (int i = 0; i + 1 < n; ++i)
                for (int j = i + 2; j + 1 < n; ++j)
                    CHECK(max_abs(rep.generator(i) * rep.generator(j) -
                                  rep.generator(j) * rep.generator(i)) < 1e-10);
        }
    }
}

TEST_CASE("homomorphism spot checks on random pairs") {
    std::mt19937_64 rng(777);
    for (int n = 2; n <= 6; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            OrthogonalRep rep(lambda);
            for (int trial = 0; trial < 200; ++trial) {
                Perm s = identity_perm(n), t = identity_perm(n);
                std::shuffle(s.begin(), s.end(), rng);
                std::shuffle(t.begin(), t.end(), rng);
                CHECK(max_abs(rep.matrix(s) * rep.matrix(t) - rep.matrix(compose(s, t))) <
                      1e-8);
            }
        }
    }
}

TEST_CASE("branching lists") {
    CHECK(branching_list(Partition{3, 2, 1}) ==
          std::vector<Partition>{Partition{2, 2, 1}, Partition{3, 1, 1}, Partition{3, 2}});
    CHECK(branching_list(Partition{5}) == std::vector<Partition>{Partition{4}});
    CHECK(branching_list(Partition{2, 1}) ==
          std::vector<Partition>{Partition{1, 1}, Partition{2}});
}

TEST_CASE("restriction is block-diagonal in branching order with U = I") {
    for (int n = 3; n <= 6; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            OrthogonalRep rep(lambda);
            std::vector<OrthogonalRep> subs;
            for (const Partition& nu : branching_list(lambda)) subs.emplace_back(nu);
            for (int i = 0; i + 2 < n; ++i) { // generators of S_{n-1}
                Eigen::MatrixXd expect = Eigen::MatrixXd::Zero(rep.dim(), rep.dim());
                int off = 0;
                for (const OrthogonalRep& sub : subs) {
                    expect.block(off, off, sub.dim(), sub.dim()) = sub.generator(i);
                    off += sub.dim();
                }
                REQUIRE(off == rep.dim());
                CHECK(max_abs(rep.generator(i) - expect) < 1e-9);
            }
        }
    }
}

TEST_CASE("rounded traces reproduce the exact characters for n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        CharacterCache cache;
        for (const Partition& lambda : partitions_of(n)) {
            OrthogonalRep rep(lambda);
            for (const CycleType& cls : conjugacy_classes(n)) {
                double tr = rep.matrix(class_representative(n, cls.cycles)).trace();
                BigInt expected = character(lambda, cls.cycles, &cache);
                CHECK(std::abs(tr - static_cast<double>(expected)) < 1e-9);
            }
        }
    }
}

TEST_CASE("isotypic projector on the regular representation of S3") {
    auto mats = regular_rep(3);
    CharacterCache cache;
    std::vector<double> chars;
    for (const Perm& g : all_perms(3))
        chars.push_back(static_cast<double>(character(Partition{2, 1}, cycle_type(g), &cache)));
    CHECK(isotypic_projector_multiplicity(mats, chars, 2) == 2);

    Eigen::MatrixXd pi = isotypic_projector(mats, chars, 2);
    CHECK(max_abs(pi * pi - pi) < 1e-8);
}

TEST_CASE("projector multiplicity agrees with the restriction multiplicity backend") {
    // (3,1) of S4 restricted to S2 x S2, trivial label
    OrthogonalRep rep(Partition{3, 1});
    std::vector<Eigen::MatrixXd> elems;
    for (const Perm& a : all_perms(2))
        for (const Perm& b : all_perms(2)) {
            Perm g = {a[0], a[1], 2 + b[0], 2 + b[1]};
            elems.push_back(rep.matrix(g));
        }
    std::vector<double> ones(elems.size(), 1.0);
    BigInt viaProjector = isotypic_projector_multiplicity(elems, ones, 1);
    BigInt viaCharacters = restriction_multiplicity(Partition{3, 1}, Composition{2, 2},
                                                    {Partition{2}, Partition{2}});
    CHECK(viaProjector == viaCharacters);
    CHECK(viaProjector == 1);

    Eigen::MatrixXd pi = isotypic_projector(elems, ones, 1);
    CHECK(max_abs(pi * pi - pi) < 1e-8);
}

TEST_CASE("projector extracts a Kronecker multiplicity from a tensor product") {
    OrthogonalRep rep(Partition{2, 1});
    std::vector<Eigen::MatrixXd> elems;
    std::vector<double> chars;
    CharacterCache cache;
    for (const Perm& g : all_perms(3)) {
        Eigen::MatrixXd m = rep.matrix(g);
        elems.push_back(kron(m, m));
        chars.push_back(
            static_cast<double>(character(Partition{1, 1, 1}, cycle_type(g), &cache)));
    }
    CHECK(isotypic_projector_multiplicity(elems, chars, 1) ==
          kronecker(Partition{2, 1}, Partition{2, 1}, Partition{1, 1, 1}));
}

TEST_CASE("projector rejects inconsistent input") {
    auto mats = regular_rep(3);
    std::vector<double> bogus(mats.size(), 0.3);
    CHECK_THROWS_AS(isotypic_projector_multiplicity(mats, bogus, 2), NumericalFailure);
}
