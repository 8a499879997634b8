#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "propcount/multipoly.hpp"
#include "propcount/series.hpp"

using namespace propcount;

namespace {

const MultiPoly A = MultiPoly::variable(Var::a);
const MultiPoly B = MultiPoly::variable(Var::b);
const MultiPoly C = MultiPoly::variable(Var::c);

// Small deterministic generator for property tests.
struct Lcg {
    std::uint64_t state;
    explicit Lcg(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rat rat() {
        return make_rat(range(-9, 9), range(1, 9));
    }
    MultiPoly poly() {
        MultiPoly p;
        const int terms = static_cast<int>(range(0, 4));
        for (int t = 0; t < terms; ++t) {
            ExpoVec e{};
            for (int i = 0; i < 3; ++i)
                e[static_cast<std::size_t>(range(0, kVarCount - 1))] +=
                    static_cast<std::uint8_t>(range(0, 2));
            p += MultiPoly::term(rat(), e);
        }
        return p;
    }
};

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(rat_str(parse_rat("3/6")) == "1/2");
    CHECK(rat_str(parse_rat("-4/2")) == "-2");
    CHECK(rat_str(parse_rat("7")) == "7");
    CHECK(parse_rat("1/2") == make_rat(1, 2));
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
    CHECK(rat_pow(make_rat(2, 3), -2) == make_rat(9, 4));
    CHECK(falling_binomial(make_rat(7, 2), 2) == make_rat(35, 8));
    CHECK(binomial(Int(10), 3) == 120);
    CHECK(factorial(5) == 120);
}

TEST_CASE("polynomial addition") {
    CHECK((A + B).str() == "a + b");
    CHECK((C * C + (-(C * C))).is_zero());
    // (bc) + (ac + c^2), added by hand.
    CHECK((B * C + (A * C + C * C)).str() == "a*c + b*c + c^2");
}

TEST_CASE("polynomial multiplication") {
    CHECK((C * (A + B + C)).str() == "a*c + b*c + c^2");
    const MultiPoly p = A * B + Rat(2) * C;
    CHECK(p * MultiPoly(1L) == p);
    // (a+2b)(2a+b) expanded by hand.
    CHECK(((A + Rat(2) * B) * (Rat(2) * A + B)).str() == "2*a^2 + 5*a*b + 2*b^2");
}

TEST_CASE("polynomial evaluation") {
    const MultiPoly p = A * C + B * C + C * C;
    CHECK(p.eval({{Var::a, Rat(1)}, {Var::b, Rat(1)}, {Var::c, Rat(1)}}) == 3);
    const MultiPoly q = (A + Rat(2) * B) * (Rat(2) * A + B);
    CHECK(q.eval({{Var::a, Rat(1)}, {Var::b, Rat(1)}}) == 9);
    CHECK(MultiPoly::variable(Var::alpha).eval({{Var::alpha, make_rat(1, 2)}}) == make_rat(1, 2));
    CHECK_THROWS_WITH_AS(p.eval({{Var::a, Rat(1)}, {Var::c, Rat(1)}}), doctest::Contains("'b'"),
                         std::invalid_argument);
}

TEST_CASE("coefficient extraction") {
    const MultiPoly p = A * C + B * C + C * C;
    CHECK(p.coeff_of(Var::c, 1) == A + B);
    CHECK(p.coeff_of(Var::c, 3).is_zero());
    const MultiPoly u = MultiPoly::variable(Var::u);
    CHECK((u + Rat(2) * u * u).coeff_of(Var::u, 0).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    Lcg gen(20240817);
    for (int trial = 0; trial < 40; ++trial) {
        const MultiPoly p = gen.poly(), q = gen.poly(), r = gen.poly();
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    Lcg gen(7);
    for (int trial = 0; trial < 20; ++trial) {
        const MultiPoly p = gen.poly(), q = gen.poly();
        std::map<Var, Rat> point;
        for (int i = 0; i < kVarCount; ++i) point[static_cast<Var>(i)] = gen.rat();
        CHECK((p * q).eval(point) == p.eval(point) * q.eval(point));
        CHECK((p + q).eval(point) == p.eval(point) + q.eval(point));
    }
}

TEST_CASE("series exp/log round trip") {
    const int m = 12;
    TruncatedSeries s = TruncatedSeries::constant(m, Rat(1));
    Lcg gen(99);
    std::vector<Rat> coeffs{Rat(1)};
    for (int n = 1; n <= m; ++n) coeffs.push_back(gen.rat());
    s = TruncatedSeries(m, coeffs);
    CHECK(series_exp(series_log(s)) == s);
    CHECK_THROWS_WITH_AS(series_log(TruncatedSeries::constant(m, Rat(2))),
                         doctest::Contains("2"), std::domain_error);
    CHECK_THROWS_AS(series_exp(s), std::domain_error);
}

TEST_CASE("rational powers") {
    const int m = 10;
    const TruncatedSeries one_plus_x =
        TruncatedSeries::constant(m, Rat(1)) + TruncatedSeries::x(m);
    const TruncatedSeries root = series_pow(one_plus_x, make_rat(1, 2));
    CHECK(root * root == one_plus_x);

    Lcg gen(4242);
    std::vector<Rat> coeffs{Rat(1)};
    for (int n = 1; n <= m; ++n) coeffs.push_back(gen.rat());
    const TruncatedSeries f(m, coeffs);
    const Rat r = make_rat(2, 3), s = make_rat(-5, 2);
    CHECK(series_pow(series_pow(f, r), s) == series_pow(f, r * s));
}

TEST_CASE("fixed-point solutions") {
    const TruncatedSeries forests = solve_fixedpoint(FixedPointKind::Forests, 4);
    const long expected_forests[] = {1, 1, 3, 16, 125};
    for (int n = 0; n <= 4; ++n) CHECK(forests.egf_coeff(n) == expected_forests[n]);

    const TruncatedSeries binary = solve_fixedpoint(FixedPointKind::Kary, 4, 2);
    const long catalan[] = {1, 1, 2, 5, 14};
    for (int n = 0; n <= 4; ++n) CHECK(binary.coeff(n) == catalan[n]);

    const TruncatedSeries ordered = solve_fixedpoint(FixedPointKind::Ordered, 4);
    const long shifted[] = {0, 1, 1, 2, 5};
    for (int n = 0; n <= 4; ++n) CHECK(ordered.coeff(n) == shifted[n]);
}

TEST_CASE("fixed points satisfy their defining equations") {
    const int m = 12;
    const TruncatedSeries one = TruncatedSeries::constant(m, Rat(1));
    const TruncatedSeries a = solve_fixedpoint(FixedPointKind::Forests, m);
    CHECK(series_exp(a.mul_x()) == a);
    for (int k : {1, 2, 3}) {
        const TruncatedSeries d = solve_fixedpoint(FixedPointKind::Kary, m, k);
        TruncatedSeries dk = one;
        for (int i = 0; i < k; ++i) dk = dk * d;
        CHECK(one + dk.mul_x() == d);
        const TruncatedSeries f = solve_fixedpoint(FixedPointKind::KColor, m, k);
        TruncatedSeries fk = one;
        for (int i = 0; i < k; ++i) fk = fk * f;
        CHECK((one - fk.mul_x()).inverse() == f);
    }
    const TruncatedSeries e = solve_fixedpoint(FixedPointKind::Ordered, m);
    CHECK((one - e).inverse().mul_x() == e);
}

TEST_CASE("forest series powers give c(n+c)^(n-1)") {
    const TruncatedSeries a = solve_fixedpoint(FixedPointKind::Forests, 6);
    const TruncatedSeries a2 = series_pow(a, Rat(2));
    CHECK(a2.egf_coeff(3) == 50);  // 2 * 5^2
    const Rat half = make_rat(1, 2);
    const TruncatedSeries ah = series_pow(a, half);
    for (int n = 1; n <= 6; ++n)
        CHECK(ah.egf_coeff(n) == half * rat_pow(Rat(n) + half, n - 1));
}

TEST_CASE("differential equation solutions") {
    const TruncatedSeries g = solve_ode(Rat(1), Rat(1), Rat(1), 4);
    const long expected[] = {1, 1, 3, 16, 125};
    for (int n = 0; n <= 4; ++n) CHECK(g.egf_coeff(n) == expected[n]);

    const TruncatedSeries flat = solve_ode(Rat(3), make_rat(1, 2), Rat(0), 6);
    for (int n = 1; n <= 6; ++n) CHECK(flat.coeff(n) == 0);

    // P_3(2,1,1) = (2+2+1)(4+1+1) = 30, evaluated by hand.
    CHECK(solve_ode(Rat(2), Rat(1), Rat(1), 3).egf_coeff(3) == 30);
}

TEST_CASE("ode solutions satisfy the equation") {
    const int m = 10;
    const Rat a = make_rat(2, 3), b = make_rat(-1, 2), u = make_rat(3, 4);
    const TruncatedSeries g = solve_ode(a, b, u, m);
    const TruncatedSeries lhs = g.derivative();
    const TruncatedSeries gm = g.truncate(m - 1);
    const TruncatedSeries rhs =
        u * series_pow(gm, b + 1) + a * (series_pow(gm, b) * lhs).mul_x();
    CHECK(lhs == rhs);
}

TEST_CASE("H identities") {
    CHECK(verify_h_identities(Rat(1), Rat(2), 15).all_pass());
    CHECK(verify_h_identities(Rat(3), make_rat(1, 2), 12).all_pass());

    // a=0, b=1: H = 1/(1-x).
    const TruncatedSeries h = solve_ode(Rat(0), Rat(1), Rat(1), 8);
    for (int n = 0; n <= 8; ++n) CHECK(h.coeff(n) == 1);
    CHECK(verify_h_identities(Rat(0), Rat(1), 10).all_pass());

    CHECK(verify_h_identities(Rat(2), Rat(2), 10, false).all_pass());
    CHECK_THROWS_AS(verify_h_identities(Rat(2), Rat(2), 10), std::invalid_argument);
}

TEST_CASE("series preconditions name the constant term") {
    CHECK_THROWS_WITH_AS(series_pow(TruncatedSeries::constant(4, make_rat(1, 2)), Rat(2)),
                         doctest::Contains("1/2"), std::domain_error);
}
