#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brep/seminormal.hpp"

using namespace brep;

TEST_CASE("one-row and one-column shapes") {
    SeminormalRep triv(Partition({4}));
    CHECK(triv.dim() == 1);
    for (int s = 1; s <= 3; ++s) CHECK(triv.generator(s) == RatMatrix{{1}});

    SeminormalRep sign(Partition({1, 1, 1, 1}));
    CHECK(sign.dim() == 1);
    for (int s = 1; s <= 3; ++s) CHECK(sign.generator(s) == RatMatrix{{-1}});
}

TEST_CASE("shape (2,1)") {
    SeminormalRep rep(Partition({2, 1}));
    REQUIRE(rep.dim() == 2);
    CHECK(rep.generator(1) == RatMatrix{{1, 0}, {0, -1}});
    // trace of any transposition in [2,1] is 0
    CHECK(rat_trace(rep.generator(2)) == 0);
    // 3-cycle has trace -1
    Perm c3(std::vector<int>{1, 2, 0});
    CHECK(rat_trace(rep.perm_image(c3)) == -1);
}

TEST_CASE("defining relations for all shapes of weight <= 5") {
    for (int m = 2; m <= 5; ++m) {
        for (auto& shape : partitions_of(m)) {
            SeminormalRep rep(shape);
            CHECK(rep.dim() == irrep_dimension(shape));
            RatMatrix id = rat_identity(rep.dim());
            for (int s = 1; s <= m - 1; ++s)
                CHECK(rat_mul(rep.generator(s), rep.generator(s)) == id);
            for (int s = 1; s + 1 <= m - 1; ++s) {
                RatMatrix lhs = rat_mul(rep.generator(s),
                                        rat_mul(rep.generator(s + 1), rep.generator(s)));
                RatMatrix rhs = rat_mul(rep.generator(s + 1),
                                        rat_mul(rep.generator(s), rep.generator(s + 1)));
                CHECK(lhs == rhs);
            }
            for (int s = 1; s <= m - 1; ++s)
                for (int r = s + 2; r <= m - 1; ++r)
                    CHECK(rat_mul(rep.generator(s), rep.generator(r)) ==
                          rat_mul(rep.generator(r), rep.generator(s)));
        }
    }
}

TEST_CASE("perm_image is decomposition independent") {
    SeminormalRep rep(Partition({2, 1}));
    CHECK(rep.perm_image(Perm::identity(3)) == rat_identity(2));
    // t1 * t2 * t1 == t2 * t1 * t2 as permutations; images must agree with
    // the generator product along both decompositions
    RatMatrix via1 = rat_mul(rep.generator(1), rat_mul(rep.generator(2), rep.generator(1)));
    Perm p = Perm::transposition(3, 0) * Perm::transposition(3, 1) * Perm::transposition(3, 0);
    CHECK(rep.perm_image(p) == via1);
}

TEST_CASE("perm_image is a homomorphism") {
    for (auto& shape : partitions_of(4)) {
        SeminormalRep rep(shape);
        auto perms = all_perms(4);
        for (std::size_t i = 0; i < perms.size(); i += 5)
            for (std::size_t j = 0; j < perms.size(); j += 7)
                CHECK(rep.perm_image(perms[i] * perms[j]) ==
                      rat_mul(rep.perm_image(perms[i]), rep.perm_image(perms[j])));
    }
}

TEST_CASE("character orthogonality within S_m") {
    for (int m = 2; m <= 4; ++m) {
        std::int64_t fact = 1;
        for (int i = 2; i <= m; ++i) fact *= i;
        auto shapes = partitions_of(m);
        std::vector<SeminormalRep> reps;
        for (auto& s : shapes) reps.emplace_back(s);
        auto perms = all_perms(m);
        for (std::size_t a = 0; a < reps.size(); ++a)
            for (std::size_t b = a; b < reps.size(); ++b) {
                Rational sum = 0;
                for (auto& p : perms)
                    sum += rat_trace(reps[a].perm_image(p)) *
                           rat_trace(reps[b].perm_image(p));
                CHECK(sum == (a == b ? Rational(fact) : Rational(0)));
            }
    }
}

TEST_CASE("young subgroup representations") {
    YoungSubgroupRep triv(Partition({2, 1}), {Partition({2}), Partition({1})});
    CHECK(triv.dim() == 1);
    CHECK(triv.image(Perm::identity(3)) == RatMatrix{{1}});

    YoungSubgroupRep sgn(Partition({2, 1}), {Partition({1, 1}), Partition({1})});
    CHECK(sgn.dim() == 1);
    CHECK(sgn.image(Perm::transposition(3, 0)) == RatMatrix{{-1}});

    // membership gate: (2,3) swap crosses the block boundary
    CHECK_THROWS_AS(sgn.image(Perm::transposition(3, 1)), std::invalid_argument);

    // Kronecker dimensions multiply
    YoungSubgroupRep big(Partition({3, 2}), {Partition({2, 1}), Partition({1, 1})});
    CHECK(big.dim() == 2);
    auto perms = all_perms(5);
    int in_count = 0;
    for (auto& p : perms)
        if (big.in_young_subgroup(p)) {
            ++in_count;
            CHECK(rat_trace(big.image(p)) == big.trace(p));
        }
    CHECK(in_count == 12);  // |S_3 x S_2|
}
