#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "propcount/closedform.hpp"
#include "propcount/kary.hpp"

using namespace propcount;

namespace {

Int closed_count(int n, int k) {
    return binomial(Int(k * n + 1), static_cast<unsigned>(n)) / Int(k * n + 1) *
           factorial(static_cast<unsigned>(n));
}

}  // namespace

TEST_CASE("k-ary enumeration counts") {
    CHECK(kary_count(0, 2) == 1);
    CHECK(kary_count(1, 2) == 1);
    CHECK(kary_count(1, 5) == 1);
    CHECK(kary_count(2, 2) == 4);
    CHECK(kary_count(3, 2) == 30);
    for (int k = 1; k <= 3; ++k)
        for (int n = 0; n <= 6; ++n) CHECK(kary_count(n, k) == closed_count(n, k));
}

TEST_CASE("shape counts are the generalized Catalan numbers") {
    CHECK(kary_shapes(8, 2).size() == 1430);
    CHECK(kary_shapes(5, 3).size() == 273);
    CHECK(kary_shapes(0, 2).size() == 1);
}

TEST_CASE("stats on the four binary trees with two internal vertices") {
    // Root 1 with the internal vertex first: path 1, 2, leaf.
    const KaryTree t1 = parse_kary_literal("1(2(.,.),.)", 2);
    KaryStats st = kary_stats(t1);
    CHECK(st.proper == 2);
    CHECK(st.comp == 2);
    CHECK(st.hook[1] == 2);
    CHECK(st.hook[2] == 1);

    // Root 1 with the internal vertex second: proper root stops the path.
    st = kary_stats(parse_kary_literal("1(.,2(.,.))", 2));
    CHECK(st.proper == 2);
    CHECK(st.comp == 1);

    // Root 2, smallest descendant under the first child: path turns right.
    st = kary_stats(parse_kary_literal("2(1(.,.),.)", 2));
    CHECK(st.proper == 1);
    CHECK(st.comp == 1);

    // Root 2, smallest descendant under the second child: path goes left.
    st = kary_stats(parse_kary_literal("2(.,1(.,.))", 2));
    CHECK(st.proper == 1);
    CHECK(st.comp == 1);
}

TEST_CASE("decomposition of the comp-2 tree") {
    const KaryTree t = parse_kary_literal("1(2(.,.),.)", 2);
    const auto parts = kary_decompose(t);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].literal() == "1(.,.)");
    CHECK(parts[1].literal() == "2(.,.)");
    CHECK(kary_recompose(parts).literal() == t.literal());
}

TEST_CASE("single-component trees decompose to themselves") {
    for (const char* lit : {"1(.,2(.,.))", "2(1(.,.),.)", "2(.,1(.,.))", "1(.,.)"}) {
        const KaryTree t = parse_kary_literal(lit, 2);
        const auto parts = kary_decompose(t);
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].literal() == t.literal());
        CHECK(kary_recompose(parts).literal() == t.literal());
    }
}

TEST_CASE("decompose/recompose round trip") {
    for (int k : {2, 3}) {
        for (int n = 1; n <= 4; ++n) {
            for_each_kary(n, k, [&](const KaryTree& t) {
                const KaryStats st = kary_stats(t);
                const auto parts = kary_decompose(t);
                REQUIRE(static_cast<int>(parts.size()) == st.comp);
                int prop_sum = 0;
                for (const auto& p : parts) {
                    const KaryStats pst = kary_stats(p);
                    CHECK(pst.comp == 1);
                    prop_sum += pst.proper;
                }
                CHECK(prop_sum == st.proper);
                CHECK(1 <= st.comp);
                CHECK(st.comp <= st.proper);
                CHECK(st.proper <= n);
                // Characterization of components: either the first child is
                // a leaf, or the root is improper, its smallest descendant
                // sits under the first child, and the second child is a leaf.
                for (const auto& p : parts) {
                    const bool first_leaf = p.root.children[0].is_leaf();
                    if (!first_leaf) {
                        const KaryStats pst = kary_stats(p);
                        CHECK_FALSE(pst.is_proper[static_cast<std::size_t>(p.root.label)]);
                        int part_min = 0;
                        for (std::size_t l = 1; l < pst.hook.size(); ++l)
                            if (pst.hook[l] > 0) {
                                part_min = static_cast<int>(l);
                                break;
                            }
                        const KaryStats first_child_stats =
                            kary_stats(KaryTree{p.k, p.root.children[0]});
                        CHECK(first_child_stats.hook.size() >
                              static_cast<std::size_t>(part_min));
                        CHECK(first_child_stats.hook[static_cast<std::size_t>(part_min)] > 0);
                        CHECK(p.root.children[1].is_leaf());
                    }
                }

                // The other direction: parts handed over in any order
                // recompose to the same tree and decompose back.
                std::vector<KaryTree> shuffled(parts.rbegin(), parts.rend());
                const KaryTree rebuilt = kary_recompose(shuffled);
                CHECK(rebuilt.literal() == t.literal());
                const auto again = kary_decompose(rebuilt);
                REQUIRE(again.size() == parts.size());
                for (std::size_t i = 0; i < parts.size(); ++i)
                    CHECK(again[i].literal() == parts[i].literal());
            });
        }
    }
}

TEST_CASE("decomposition rejects unary trees") {
    KaryTree unary = parse_kary_literal("1(2(.))", 1);
    CHECK_THROWS_AS(kary_decompose(unary), std::invalid_argument);
}

TEST_CASE("recompose validates its input") {
    const KaryTree bad = parse_kary_literal("1(2(.,.),.)", 2);  // comp = 2
    CHECK_THROWS_AS(kary_recompose({bad}), std::invalid_argument);
    const KaryTree dup = parse_kary_literal("1(.,.)", 2);
    CHECK_THROWS_AS(kary_recompose({dup, dup}), std::invalid_argument);
}

TEST_CASE("triple statistic polynomial") {
    // By hand over the four trees above: w^2 + uw + 2vw.
    const MultiPoly u = MultiPoly::variable(Var::u);
    const MultiPoly v = MultiPoly::variable(Var::v);
    const MultiPoly w = MultiPoly::variable(Var::w);
    CHECK(kary_triple_poly(2, 2) == w * w + u * w + Rat(2) * v * w);
    CHECK(kary_triple_poly(1, 3) == w);
    const MultiPoly rhs = p_poly(4).subst(
        {{Var::a, Rat(3) * v}, {Var::b, Rat(2) * u}, {Var::c, w}});
    CHECK(kary_triple_poly(4, 3) == rhs);
    CHECK_THROWS_AS(kary_triple_poly(2, 1), std::invalid_argument);
}

TEST_CASE("proper statistic polynomial") {
    const MultiPoly u = MultiPoly::variable(Var::u);
    CHECK(kary_prop_poly(2, 2) == Rat(2) * u + Rat(2) * u * u);
    CHECK(kary_prop_poly(1, 4) == u);
    const MultiPoly rhs5 =
        p_poly(5).subst({{Var::a, MultiPoly(2L)}, {Var::b, u}, {Var::c, u}});
    CHECK(kary_prop_poly(5, 2) == rhs5);
    // Unary trees: proper vertices of a labeled path.
    const MultiPoly rhs1 =
        p_poly(4).subst({{Var::a, MultiPoly(1L)}, {Var::b, MultiPoly(0L)}, {Var::c, u}});
    CHECK(kary_prop_poly(4, 1) == rhs1);
}

TEST_CASE("statistic polynomials at 1 give the counts") {
    for (int k : {1, 2, 3})
        for (int n = 1; n <= 4; ++n)
            CHECK(Rat(kary_count(n, k)) ==
                  kary_prop_poly(n, k).eval({{Var::u, Rat(1)}}));
    for (int k : {2, 3})
        for (int n = 1; n <= 4; ++n)
            CHECK(Rat(kary_count(n, k)) ==
                  kary_triple_poly(n, k).eval(
                      {{Var::u, Rat(1)}, {Var::v, Rat(1)}, {Var::w, Rat(1)}}));
}

TEST_CASE("hook identity for shapes") {
    // n=2, k=2, alpha=1: both shapes have hooks {2,1}; (2!/2^2)(3+3) = 3.
    const Report r = postnikov_check(2, 2, Rat(1));
    CHECK(r.all_pass());
    CHECK(r.checks.back().lhs == "3");

    const Report r1 = postnikov_check(1, 3, make_rat(2, 5));
    CHECK(r1.all_pass());

    for (int k : {2, 3})
        for (int n = 1; n <= 5; ++n) CHECK(postnikov_check(n, k, Rat(1)).all_pass());
}

TEST_CASE("tree literals") {
    const KaryTree t = parse_kary_literal("2(1(.,.),.)", 2);
    CHECK(t.internal_count() == 2);
    CHECK(t.literal() == "2(1(.,.),.)");
    CHECK_THROWS_AS(parse_kary_literal("1(.)", 2), std::invalid_argument);       // arity
    CHECK_THROWS_AS(parse_kary_literal("1(.,.,.)", 2), std::invalid_argument);   // arity
    CHECK_THROWS_AS(parse_kary_literal("3(.,.)", 2), std::invalid_argument);     // labels
    CHECK_THROWS_AS(parse_kary_literal("1(.,.)x", 2), std::invalid_argument);    // trailing
}
