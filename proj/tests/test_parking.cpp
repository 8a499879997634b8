#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "propcount/closedform.hpp"
#include "propcount/parking.hpp"

using namespace propcount;

namespace {

ParkingFn make_fn(int c, std::vector<int> prefs) {
    ParkingFn f;
    f.n = static_cast<int>(prefs.size());
    f.c = c;
    f.prefs = std::move(prefs);
    return f;
}

}  // namespace

TEST_CASE("the parking process") {
    const ParkOutcome both_first = park(make_fn(1, {1, 1}));
    CHECK(both_first.success);
    CHECK(both_first.assignment == std::vector<int>({1, 2}));
    CHECK(both_first.lucky == std::vector<int>({1}));
    CHECK(both_first.empty == std::vector<int>({3}));

    CHECK_FALSE(park(make_fn(1, {2, 2})).success);

    const ParkOutcome single = park(make_fn(1, {1}));
    CHECK(single.success);
    CHECK(single.lucky == std::vector<int>({1}));
}

TEST_CASE("successful outcomes leave c empty spaces including the last") {
    for (int c = 1; c <= 3; ++c) {
        for_each_parking(3, c, [&](const ParkingFn& f) {
            const ParkOutcome out = park(f);
            REQUIRE(out.success);
            CHECK(static_cast<int>(out.empty.size()) == c);
            CHECK(out.empty.back() == f.n + f.c);
            std::set<int> spots(out.assignment.begin(), out.assignment.end());
            CHECK(spots.size() == out.assignment.size());  // injective
        });
    }
}

TEST_CASE("arrival order changes the outcome details but not success") {
    const ParkingFn f = make_fn(1, {2, 1, 1});
    const ParkOutcome inc = park(f);
    const ParkOutcome rev = park(f, {3, 2, 1});
    CHECK(inc.success);
    CHECK(rev.success);
    CHECK(inc.assignment != rev.assignment);
    CHECK_THROWS_AS(park(f, {1, 1, 2}), std::invalid_argument);
}

TEST_CASE("enumeration of parking functions") {
    std::set<std::string> seen;
    for_each_parking(2, 1, [&](const ParkingFn& f) { seen.insert(f.literal()); });
    const std::set<std::string> expected = {"n=2 c=1 prefs=1,1", "n=2 c=1 prefs=1,2",
                                            "n=2 c=1 prefs=2,1"};
    CHECK(seen == expected);
    CHECK(parking_count(1, 1) == 1);
    CHECK(parking_count(2, 2) == 8);
    for (int c = 1; c <= 3; ++c)
        for (int n = 1; n <= 4; ++n)
            CHECK(Rat(parking_count(n, c)) == cayley_count(n, Rat(c)));
}

TEST_CASE("lucky statistic polynomial") {
    const MultiPoly u = MultiPoly::variable(Var::u);
    CHECK(lucky_poly(2, 1) == u + Rat(2) * u * u);
    CHECK(lucky_poly(1, 1) == u);
    for (int c = 1; c <= 3; ++c)
        for (int n = 1; n <= 4; ++n) {
            const MultiPoly rhs = p_poly(n).subst(
                {{Var::a, MultiPoly(1L)}, {Var::b, u}, {Var::c, Rat(c) * u}});
            CHECK(lucky_poly(n, c) == rhs);
        }
    // Every car lucky iff prefs are a permutation: u^n coefficient is n!.
    CHECK(lucky_poly(3, 1).coeff_of(Var::u, 3) == MultiPoly(6L));
    CHECK(lucky_poly(4, 1).eval({{Var::u, Rat(1)}}) == 125);
}

TEST_CASE("prime decomposition") {
    const auto own = prime_decompose(make_fn(1, {1, 1}));
    REQUIRE(own.size() == 1);
    CHECK(own[0].literal() == "n=2 c=1 prefs=1,1");

    const auto split = prime_decompose(make_fn(1, {1, 2}));
    REQUIRE(split.size() == 2);
    CHECK(split[0].literal() == "n=1 c=1 prefs=1");
    CHECK(split[1].literal() == "n=1 c=1 prefs=1");

    // A longer one by hand: blocks of (1,1,3,3,1) are B1={1,2,5}, B3={3,4};
    // prefixes 3,3,5,5 stay above the line, so it is prime.
    const ParkingFn big = make_fn(1, {1, 1, 3, 3, 1});
    CHECK(is_prime_parking(big));
    CHECK(prime_decompose(big).size() == 1);

    CHECK_THROWS_AS(prime_decompose(make_fn(1, {2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(prime_decompose(make_fn(2, {1, 1})), std::invalid_argument);

    for (int n = 1; n <= 5; ++n) {
        for_each_parking(n, 1, [&](const ParkingFn& f) {
            const auto factors = prime_decompose(f);
            int total = 0;
            for (const auto& factor : factors) {
                CHECK(is_prime_parking(factor));
                total += factor.n;
            }
            CHECK(total == n);
            if (is_prime_parking(f)) CHECK(factors.size() == 1);
        });
    }
}

TEST_CASE("splitting a c-parking function at its empty spaces") {
    // prefs (1,1,4) with c=2: spaces 1..5, car 3 parks at 4, empties 3 and 5.
    const ParkingFn f = make_fn(2, {1, 1, 4});
    const auto parts = split_at_empty_spaces(f);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].literal() == "n=2 c=1 prefs=1,1");
    CHECK(parts[1].literal() == "n=1 c=1 prefs=1");
    for (const auto& part : parts) CHECK(part.is_valid());

    for (int c = 1; c <= 3; ++c) {
        for_each_parking(3, c, [&](const ParkingFn& g) {
            const auto factors = split_at_empty_spaces(g);
            CHECK(static_cast<int>(factors.size()) == c);
            for (const auto& factor : factors) CHECK(factor.is_valid());
        });
    }
}

TEST_CASE("prime lucky statistic polynomial") {
    const MultiPoly u = MultiPoly::variable(Var::u);
    CHECK(prime_lucky_poly(2) == u);
    CHECK(prime_lucky_poly(1) == u);
    for (int n = 1; n <= 5; ++n) {
        const MultiPoly rhs =
            -p_poly(n).subst({{Var::a, MultiPoly(1L)}, {Var::b, u}, {Var::c, -u}});
        CHECK(prime_lucky_poly(n) == rhs);
    }
}

TEST_CASE("sweeps") {
    for (int c = 1; c <= 3; ++c) {
        CHECK(order_invariance_sweep(3, c).all_pass());
        CHECK(block_criterion_sweep(3, c).all_pass());
        CHECK(block_criterion_sweep(4, c).all_pass());
    }
    for (int n = 1; n <= 6; ++n) CHECK(prime_compatibility_sweep(n).all_pass());
}

TEST_CASE("parking literals") {
    const ParkingFn f = parse_parking_literal("n=3 c=1 prefs=1,1,2");
    CHECK(f.n == 3);
    CHECK(f.c == 1);
    CHECK(f.prefs == std::vector<int>({1, 1, 2}));
    CHECK(f.literal() == "n=3 c=1 prefs=1,1,2");
    CHECK_THROWS_AS(parse_parking_literal("n=2 prefs=1,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_parking_literal("n=2 c=1 prefs=1,9"), std::invalid_argument);
}
