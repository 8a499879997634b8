#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "propcount/closedform.hpp"
#include "propcount/colored.hpp"
#include "propcount/kary.hpp"

using namespace propcount;

TEST_CASE("left-right minima cutting") {
    const auto blocks = left_right_minima_blocks({4, 7, 5, 3, 1, 2, 6});
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0] == std::vector<int>({4, 7, 5}));
    CHECK(blocks[1] == std::vector<int>({3}));
    CHECK(blocks[2] == std::vector<int>({1, 2, 6}));
    CHECK(left_right_minima_blocks({1, 2, 3, 4}).size() == 1);
    CHECK(left_right_minima_blocks({4, 3, 2, 1}).size() == 4);
    CHECK_THROWS_AS(left_right_minima_blocks({1, 2, 1}), std::invalid_argument);
}

TEST_CASE("colored forest counts") {
    CHECK(colored_forest_count(1, 1) == 1);
    CHECK(colored_forest_count(2, 1) == 4);
    CHECK(colored_forest_count(2, 2) == 6);
    for (int k : {1, 2})
        for (int n = 1; n <= 4; ++n)
            CHECK(Rat(colored_forest_count(n, k)) == p_value(n, Rat(k), Rat(k + 1), Rat(1)));
}

TEST_CASE("equinumerous with higher-arity trees") {
    for (int k : {1, 2})
        for (int n = 1; n <= 5; ++n)
            CHECK(colored_forest_count(n, k) == kary_count(n, k + 1));
}

TEST_CASE("proper statistic polynomials for two vertices") {
    const MultiPoly u = MultiPoly::variable(Var::u);
    // Forests: (1)(2), (2)(1), 1-over-2, 2-over-1; only the last has an
    // improper vertex.
    CHECK(colored_prop_poly(2, 1) == u + Rat(3) * u * u);
    CHECK(colored_tree_prop_poly(2, 1) == u + u * u);
    CHECK(colored_prop_poly(1, 1) == u);
    CHECK(colored_tree_prop_poly(1, 1) == u);
}

TEST_CASE("proper statistic polynomials match the closed forms") {
    const MultiPoly u = MultiPoly::variable(Var::u);
    for (int k : {1, 2}) {
        for (int n = 1; n <= 4; ++n) {
            const MultiPoly forest_rhs = p_poly(n).subst(
                {{Var::a, MultiPoly(Rat(k))}, {Var::b, Rat(k + 1) * u}, {Var::c, u}});
            CHECK(colored_prop_poly(n, k) == forest_rhs);
            const MultiPoly tree_rhs = -p_poly(n).subst(
                {{Var::a, MultiPoly(Rat(k))}, {Var::b, Rat(k + 1) * u}, {Var::c, -u}});
            CHECK(colored_tree_prop_poly(n, k) == tree_rhs);
        }
    }
}

TEST_CASE("triple statistic polynomial") {
    const MultiPoly u = MultiPoly::variable(Var::u);
    const MultiPoly v = MultiPoly::variable(Var::v);
    const MultiPoly w = MultiPoly::variable(Var::w);
    // By hand: (2)(1) -> w^2, (1)(2) -> vw, 1-over-2 -> vw, 2-over-1 -> uw.
    CHECK(colored_triple_poly(2, 1) == u * w + Rat(2) * v * w + w * w);
    CHECK(colored_triple_poly(1, 2) == w);
    for (int k : {1, 2})
        for (int n = 1; n <= 4; ++n) {
            const MultiPoly rhs = p_poly(n).subst(
                {{Var::a, Rat(k) * u}, {Var::b, Rat(k + 1) * v}, {Var::c, w}});
            CHECK(colored_triple_poly(n, k) == rhs);
        }
}

TEST_CASE("triple polynomial reduces to the proper polynomial") {
    const MultiPoly u = MultiPoly::variable(Var::u);
    for (int k : {1, 2})
        for (int n = 1; n <= 4; ++n) {
            const MultiPoly reduced = colored_triple_poly(n, k).subst(
                {{Var::u, MultiPoly(1L)}, {Var::v, u}, {Var::w, u}});
            CHECK(reduced == colored_prop_poly(n, k));
        }
}

TEST_CASE("hook identities") {
    {
        const Report r = colored_hook_check(1, 1);
        CHECK(r.all_pass());
        CHECK(r.checks.front().lhs == "alpha + 1");
    }
    for (int k : {1, 2})
        for (int n = 1; n <= 4; ++n) CHECK(colored_hook_check(n, k).all_pass());
}

TEST_CASE("unlabeled structure counts") {
    // No nontrivial automorphisms, so labeled = n! * unlabeled.
    for (int k : {1, 2})
        for (int n = 1; n <= 4; ++n) {
            const Int labeled = colored_forest_count(n, k);
            const Int structural = Int(unlabeled_colored_forests(n, k).size());
            CHECK(labeled == structural * factorial(static_cast<unsigned>(n)));
        }
}

TEST_CASE("cross-family symmetry") {
    CHECK(ksym_check(1, 1).all_pass());
    CHECK(ksym_check(2, 1).all_pass());
    for (int k : {1, 2})
        for (int n = 1; n <= 4; ++n) CHECK(ksym_check(n, k).all_pass());
}

TEST_CASE("cutting at left-right minima preserves proper vertices") {
    for (int k : {1, 2}) {
        for (int n = 1; n <= 4; ++n) {
            for_each_colored_forest(n, k, [&](const ColoredForest& f) {
                const ColoredStats st = colored_stats(f);
                std::vector<int> roots;
                for (const auto& t : f.trees) roots.push_back(t.label);
                const auto blocks = left_right_minima_blocks(roots);
                std::size_t tree_index = 0;
                for (const auto& block : blocks) {
                    ColoredForest part{f.k, {}};
                    for (std::size_t i = 0; i < block.size(); ++i)
                        part.trees.push_back(f.trees[tree_index++]);
                    const ColoredStats pst = colored_stats(part);
                    for (std::size_t l = 1; l < pst.hook.size(); ++l)
                        if (pst.hook[l] > 0) CHECK(pst.is_proper[l] == st.is_proper[l]);
                }
            });
        }
    }
}

TEST_CASE("forest literals") {
    const ColoredForest f = parse_colored_literal("2[1:(1),2:(3)];4", 2);
    CHECK(f.size() == 4);
    CHECK(f.literal() == "2[1:(1),2:(3)];4");
    CHECK(parse_colored_literal("1", 1).trees.size() == 1);
    CHECK_THROWS_AS(parse_colored_literal("2[2:(1),1:(3)];4", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_colored_literal("2[3:(1)];3", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_colored_literal("1;1", 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_colored_literal("5", 1), std::invalid_argument);
}
