#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brep/group.hpp"

using namespace brep;

TEST_CASE("act: coordinate permutation") {
    // iota_s e_s = e_{s+1}
    for (int n : {3, 5})
        for (int s = 0; s + 1 < n; ++s) {
            std::vector<int> es(n, 0);
            es[s] = 1;
            std::vector<int> want(n, 0);
            want[s + 1] = 1;
            CHECK(act(Perm::transposition(n, s), es) == want);
        }

    std::vector<int> x{5, 0, 0};
    CHECK(act(Perm::identity(3), x) == x);
    // 3-cycle 1->2->3->1 (0-based 0->1->2->0)
    Perm c3(std::vector<int>{1, 2, 0});
    CHECK(act(c3, x) == std::vector<int>{0, 5, 0});
}

TEST_CASE("act is a left action") {
    std::mt19937 rng(3);
    auto perms = all_perms(4);
    std::uniform_int_distribution<std::size_t> pi(0, perms.size() - 1);
    std::uniform_int_distribution<int> xv(0, 6);
    for (int t = 0; t < 200; ++t) {
        Perm a = perms[pi(rng)], b = perms[pi(rng)];
        std::vector<int> x(4);
        for (auto& v : x) v = xv(rng);
        CHECK(act(a * b, x) == act(a, act(b, x)));
    }
}

TEST_CASE("semidirect multiplication") {
    BraidQuotient g(3, 3);
    GroupElement id = g.identity();
    GroupElement gen = g.braid_generator_image(1);
    CHECK(g.multiply(id, gen) == gen);
    CHECK(g.multiply(gen, id) == gen);

    // (e_s, t_s)^2 = (e_s + e_{s+1}, identity)
    GroupElement sq = g.multiply(gen, gen);
    CHECK(sq.a == std::vector<int>{1, 1, 0});
    CHECK(sq.s.is_identity());

    std::mt19937 rng(5);
    std::uniform_int_distribution<std::int64_t> pick(0, g.order() - 1);
    for (int t = 0; t < 100; ++t) {
        GroupElement x = g.element_at(pick(rng));
        CHECK(g.multiply(g.inverse(x), x) == id);
        CHECK(g.multiply(x, g.inverse(x)) == id);
    }
}

TEST_CASE("associativity on random triples") {
    for (auto [n, q] : {std::pair{3, 3}, {2, 5}, {4, 3}}) {
        BraidQuotient g(n, q);
        std::mt19937 rng(n * 100 + q);
        std::uniform_int_distribution<std::int64_t> pick(0, g.order() - 1);
        for (int t = 0; t < 1000; ++t) {
            GroupElement a = g.element_at(pick(rng));
            GroupElement b = g.element_at(pick(rng));
            GroupElement c = g.element_at(pick(rng));
            CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
        }
    }
}

TEST_CASE("enumeration and indexing") {
    BraidQuotient g33(3, 3);
    auto all = g33.enumerate();
    CHECK(all.size() == 162);
    for (std::int64_t i = 0; i < g33.order(); ++i)
        CHECK(g33.index_of(all[i]) == i);

    CHECK(BraidQuotient(1, 1).enumerate().size() == 1);
    CHECK(BraidQuotient(2, 3).enumerate().size() == 18);

    CHECK_THROWS_AS(BraidQuotient(10, 9), CapExceeded);
}

TEST_CASE("conjugacy classes") {
    auto c33 = BraidQuotient(3, 3).conjugacy_classes();
    CHECK(c33.size() == 22);
    std::int64_t total = 0;
    for (auto& c : c33) total += c.size;
    CHECK(total == 162);

    for (int q : {1, 3, 5, 7})
        CHECK(BraidQuotient(1, q).conjugacy_classes().size() == static_cast<std::size_t>(q));
    CHECK(BraidQuotient(2, 1).conjugacy_classes().size() == 2);

    // classes are closed: every member conjugate to the representative
    BraidQuotient g(2, 3);
    auto classes = g.conjugacy_classes();
    auto all = g.enumerate();
    for (auto& cls : classes)
        for (auto& m : cls.members) {
            bool found = false;
            for (auto& x : all)
                if (g.multiply(g.multiply(x, cls.rep), g.inverse(x)) == m) {
                    found = true;
                    break;
                }
            CHECK(found);
        }
}

TEST_CASE("braid generator images") {
    BraidQuotient g(4, 3);
    for (int s = 1; s <= 2; ++s)
        CHECK(g.braid_word_eval({s, s + 1, s}) == g.braid_word_eval({s + 1, s, s + 1}));
    CHECK(g.braid_word_eval({1, 3}) == g.braid_word_eval({3, 1}));
    CHECK_THROWS_AS(g.braid_generator_image(4), std::invalid_argument);

    // both sides of the braid relation equal (2e_s + e_{s+1}, t_s t_{s+1} t_s)
    BraidQuotient g33(3, 3);
    GroupElement b = g33.braid_word_eval({1, 2, 1});
    CHECK(b.a == std::vector<int>{2, 1, 0});
}

TEST_CASE("braid word evaluation") {
    BraidQuotient g(3, 3);
    CHECK(g.braid_word_eval({}) == g.identity());
    CHECK(g.braid_word_eval({2, -2}) == g.identity());
    CHECK(g.braid_word_eval({1, 2, 1}) == g.braid_word_eval({2, 1, 2}));
    CHECK_THROWS_AS(g.braid_word_eval({0}), std::invalid_argument);
}

TEST_CASE("generator images generate the full group") {
    for (auto [n, q] : {std::pair{3, 3}, {3, 5}, {4, 3}}) {
        BraidQuotient g(n, q);
        CHECK(g.generated_subgroup_order() == g.order());
    }
}
