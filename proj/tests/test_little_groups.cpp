#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "brep/little_groups.hpp"

using namespace brep;

TEST_CASE("coset transversal") {
    auto t21 = coset_transversal(Partition({2, 1}), 3);
    CHECK(t21.size() == 3);
    auto tn = coset_transversal(Partition({3}), 3);
    REQUIRE(tn.size() == 1);
    CHECK(tn[0].is_identity());
    CHECK(coset_transversal(Partition({1, 1, 1}), 3).size() == 6);

    // representatives are increasing on each block and pairwise in
    // distinct cosets
    auto t = coset_transversal(Partition({2, 2}), 4);
    CHECK(t.size() == 6);
    for (auto& r : t) {
        CHECK(r.img[0] < r.img[1]);
        CHECK(r.img[2] < r.img[3]);
    }
}

TEST_CASE("extend_character") {
    BraidQuotient g(3, 3);
    IrrepLabel label{Partition({2, 1}), {0, 0, 1}, {Partition({2}), Partition({1})}};
    Irrep irr(g, label);

    // restriction to the translation part is chi_b
    for (int x3 = 0; x3 < 3; ++x3) {
        GroupElement d{{0, 0, x3}, Perm::identity(3)};
        CHECK(irr.extend_character(d) == CycNum::root_power(3, x3));
    }
    // permutation part outside S_lambda is rejected
    GroupElement bad{{0, 0, 0}, Perm::transposition(3, 1)};
    CHECK_THROWS_AS(irr.extend_character(bad), std::invalid_argument);

    // multiplicative on random pairs of D_lambda
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> res(0, 2), flip(0, 1);
    for (int t = 0; t < 100; ++t) {
        auto rand_d = [&] {
            std::vector<int> a{res(rng), res(rng), res(rng)};
            Perm s = flip(rng) ? Perm::transposition(3, 0) : Perm::identity(3);
            return GroupElement{a, s};
        };
        GroupElement d1 = rand_d(), d2 = rand_d();
        CHECK(irr.extend_character(g.multiply(d1, d2)) ==
              irr.extend_character(d1) * irr.extend_character(d2));
    }

    // trivial b extends to the constant 1
    Irrep triv(g, {Partition({3}), {0, 0, 0}, {Partition({3})}});
    GroupElement d{{1, 2, 0}, Perm::transposition(3, 1)};
    CHECK(triv.extend_character(d) == CycNum::one(3));
}

TEST_CASE("induced matrices") {
    BraidQuotient g(3, 3);
    IrrepLabel l6{Partition({1, 1, 1}), {0, 1, 2},
                  {Partition({1}), Partition({1}), Partition({1})}};
    Irrep irr6(g, l6);
    CHECK(irr6.dim() == 6);
    CHECK(cyc_eq(irr6.evaluate(g.identity()), cyc_identity(3, 6)));

    // block-monomial: exactly one nonzero entry per row and per column
    GroupElement gen = g.braid_generator_image(1);
    CycMatrix m = irr6.evaluate(gen);
    for (int r = 0; r < 6; ++r) {
        int nz = 0;
        for (int c = 0; c < 6; ++c)
            if (!m[r][c].is_zero()) ++nz;
        CHECK(nz == 1);
    }
    // the induced character vanishes off D_(1^3)
    CHECK(irr6.character(gen) == CycNum::zero(3));
}

TEST_CASE("homomorphism property on random pairs") {
    BraidQuotient g(3, 3);
    std::mt19937 rng(37);
    std::uniform_int_distribution<std::int64_t> pick(0, g.order() - 1);
    for (auto& irr : enumerate_irreps(g)) {
        for (int t = 0; t < 10; ++t) {
            GroupElement a = g.element_at(pick(rng));
            GroupElement b = g.element_at(pick(rng));
            CHECK(cyc_eq(cyc_mul(irr.evaluate(a), irr.evaluate(b)),
                         irr.evaluate(g.multiply(a, b))));
        }
    }
}

TEST_CASE("inventory for (3,3) matches the hand census") {
    BraidQuotient g(3, 3);
    auto irreps = enumerate_irreps(g);
    REQUIRE(irreps.size() == 22);
    std::map<int, int> census;
    std::map<std::vector<int>, int> by_lambda;
    std::int64_t sumsq = 0;
    for (auto& irr : irreps) {
        ++census[irr.dim()];
        ++by_lambda[irr.label().lambda.parts];
        sumsq += static_cast<std::int64_t>(irr.dim()) * irr.dim();
        // dimension formula: (n!/prod lambda_i!) * prod dim(mu_i)
        std::int64_t expect = static_cast<std::int64_t>(irr.transversal().size());
        for (auto& mu : irr.label().mus) expect *= irrep_dimension(mu);
        CHECK(irr.dim() == expect);
    }
    CHECK(census == std::map<int, int>{{1, 6}, {2, 3}, {3, 12}, {6, 1}});
    CHECK(by_lambda[{3}] == 9);
    CHECK(by_lambda[{2, 1}] == 12);
    CHECK(by_lambda[{1, 1, 1}] == 1);
    CHECK(sumsq == 162);
}

TEST_CASE("degenerate anchors") {
    // q = 1: classical S_n inventory
    for (int n = 1; n <= 5; ++n) {
        BraidQuotient g(n, 1);
        auto irreps = enumerate_irreps(g);
        CHECK(static_cast<std::int64_t>(irreps.size()) == partition_count(n));
        std::int64_t sumsq = 0;
        for (auto& irr : irreps) sumsq += static_cast<std::int64_t>(irr.dim()) * irr.dim();
        std::int64_t fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(sumsq == fact);
    }
    // n = 1: the q characters of Z/q
    for (int q : {1, 3, 5}) {
        auto irreps = enumerate_irreps(BraidQuotient(1, q));
        CHECK(irreps.size() == static_cast<std::size_t>(q));
        for (auto& irr : irreps) CHECK(irr.dim() == 1);
    }
}

TEST_CASE("even q is rejected") {
    CHECK_THROWS_AS(enumerate_labels(3, 2), UnsupportedCase);
}

TEST_CASE("completeness identity for several (n,q)") {
    for (auto [n, q] : {std::pair{2, 3}, {2, 5}, {3, 5}, {4, 3}}) {
        BraidQuotient g(n, q);
        std::int64_t sumsq = 0;
        for (auto& irr : enumerate_irreps(g))
            sumsq += static_cast<std::int64_t>(irr.dim()) * irr.dim();
        CHECK(sumsq == g.order());
    }
}
