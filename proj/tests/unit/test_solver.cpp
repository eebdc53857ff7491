#include <doctest.h>

#include <random>

#include "nchilbert/errors.hpp"
#include "nchilbert/series.hpp"
#include "nchilbert/solver.hpp"
#include "support.hpp"

using namespace nchilbert;
using nchilbert::testing::words;

namespace {

MPoly t(std::size_t nvars, std::size_t i) { return MPoly::variable(nvars, i); }
MPoly one(std::size_t nvars) { return MPoly::constant(nvars, 1); }

MPoly free_den(std::size_t n) {
    MPoly d = one(n);
    for (std::size_t i = 0; i < n; ++i) d -= t(n, i);
    return d;
}

Orbit grassmann_orbit() {
    const auto in = testing::load_fixture("grassmann_d10.txt");
    return compute_orbit(MonomialIdeal::two_sided(in.generators, 3).with_knowledge_bound(10));
}

} // namespace

TEST_CASE("Grassmann series") {
    const Orbit o = grassmann_orbit();
    const SeriesSolution s = solve_rational(o, true);
    const MPoly num = t(3, 0) * t(3, 1) + t(3, 0) * t(3, 2) + t(3, 1) * t(3, 2) + one(3);
    const MPoly den = (one(3) - t(3, 0)) * (one(3) - t(3, 1)) * (one(3) - t(3, 2));
    CHECK(cross_equal(s.entries.front(), RatFun(num, den)));
    CHECK(residual_vanishes(o, s));

    const SeriesSolution g = solve_rational(o, false);
    const MPoly u = t(1, 0);
    CHECK(cross_equal(g.entries.front(),
                      RatFun(u * u * Rational(3) + one(1), (one(1) - u) * (one(1) - u) * (one(1) - u))));
}

TEST_CASE("small exact series") {
    const MPoly u = t(1, 0);
    const auto fib = compute_orbit(MonomialIdeal::two_sided(words({"xx"}, "xy"), 2));
    CHECK(cross_equal(solve_rational(fib, false).entries.front(), RatFun(one(1) + u, one(1) - u - u * u)));

    const auto zero = compute_orbit(MonomialIdeal::zero(3));
    CHECK(solve_rational(zero, true).entries.front() == RatFun(one(3), free_den(3)));

    const auto deg2 = compute_orbit(MonomialIdeal::two_sided(words({"xx", "xy", "yx", "yy"}, "xy"), 2));
    const auto order = nilpotency_order(reduced_orbit(deg2));
    REQUIRE(order);
    CHECK(solve_polynomial(deg2, *order, false).entries.front() == RatFun(one(1) + u * Rational(2)));
}

TEST_CASE("unit ideal entry is zero") {
    const auto o = compute_orbit(MonomialIdeal::two_sided(words({"x"}, "xy"), 2));
    const auto s = solve_rational(o, true);
    CHECK(s.entries[*o.unit_index].is_zero());
    CHECK(residual_vanishes(o, s));
}

TEST_CASE("polynomial path rejects bad orders") {
    const auto o = compute_orbit(MonomialIdeal::two_sided(words({"xx", "xy", "yx", "yy"}, "xy"), 2));
    const std::vector<std::size_t> backwards{1, 0};
    try {
        (void)solve_polynomial(o, backwards, false);
        FAIL("expected order_invalid");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::order_invalid);
    }
    const std::vector<std::size_t> short_order{0};
    CHECK_THROWS_AS(solve_polynomial(o, short_order, false), Error);
}

TEST_CASE("both solvers agree on finite-dimensional ideals") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 25; ++round) {
        const std::size_t n = 1 + round % 3;
        auto gens = testing::random_generators(rng, n, 5, 3);
        for (const Word& v : testing::all_words(n, 4, 4)) gens.push_back(v);
        const auto o = compute_orbit(MonomialIdeal::two_sided(gens, n));
        const auto order = nilpotency_order(reduced_orbit(o));
        REQUIRE(order);
        for (bool multi : {false, true}) {
            const auto p = solve_polynomial(o, *order, multi);
            const auto r = solve_rational(o, multi);
            REQUIRE(p.entries.size() == r.entries.size());
            for (std::size_t k = 0; k < p.entries.size(); ++k) CHECK(p.entries[k] == r.entries[k]);
            CHECK(residual_vanishes(o, r));
        }
    }
}

TEST_CASE("rational solutions satisfy the key equation") {
    std::mt19937_64 rng(43);
    for (int round = 0; round < 25; ++round) {
        const std::size_t n = 2 + round % 2;
        const auto gens = testing::random_generators(rng, n, 4, 3);
        const auto o = compute_orbit(MonomialIdeal::two_sided(gens, n));
        CHECK(residual_vanishes(o, solve_rational(o, true)));
    }
}

TEST_CASE("finitely presented modules") {
    const std::vector<MultiDegree> none;
    const std::vector<MultiDegree> zero3{MultiDegree(3)};
    CHECK(hs_finitely_presented(zero3, none, 3) == RatFun(one(3), free_den(3)));

    const std::vector<MultiDegree> zero2{MultiDegree(2)};
    const std::vector<MultiDegree> rel{MultiDegree({2, 0})};
    CHECK(cross_equal(hs_finitely_presented(zero2, rel, 2), RatFun(one(2) - t(2, 0) * t(2, 0), free_den(2))));

    const std::vector<MultiDegree> shift{MultiDegree({1, 0, 0})};
    CHECK(hs_finitely_presented(shift, none, 3) == RatFun(t(3, 0), free_den(3)));
}

TEST_CASE("right ideals match the finitely presented formula") {
    std::mt19937_64 rng(47);
    for (int round = 0; round < 40; ++round) {
        const std::size_t n = 1 + round % 3;
        const auto base = testing::random_prefix_free(rng, n, 5, 4);
        std::vector<MultiDegree> rels;
        for (const Word& g : base) rels.push_back(multidegree(g, n));
        const std::vector<MultiDegree> zero{MultiDegree(n)};
        const auto o = compute_orbit(MonomialIdeal::right(base, n));
        CHECK(cross_equal(solve_rational(o, true).entries.front(), hs_finitely_presented(zero, rels, n)));
    }
}

TEST_CASE("direct sums") {
    const RatFun f(one(2), free_den(2));
    const std::vector<ShiftedSeries> single{{MultiDegree(2), f}};
    CHECK(direct_sum(single) == f);

    const std::vector<ShiftedSeries> two{{MultiDegree({1, 0}), f}, {MultiDegree({0, 1}), f}};
    CHECK(direct_sum(two) == RatFun(t(2, 0) + t(2, 1), free_den(2)));
}

TEST_CASE("direct sum of a two-generator monomial module") {
    // F e1 + F e2 with e1 in degree 0 and e2 in degree (1,0), relations
    // x^2 e1 (two-sided) and x*y e2 (two-sided), counted word by word.
    const auto a = compute_orbit(MonomialIdeal::two_sided(words({"xx"}, "xy"), 2));
    const auto b = compute_orbit(MonomialIdeal::two_sided(words({"xy"}, "xy"), 2));
    const std::vector<ShiftedSeries> parts{{MultiDegree({0, 0}), solve_rational(a, true).entries.front()},
                                           {MultiDegree({1, 0}), solve_rational(b, true).entries.front()}};
    const RatFun sum = direct_sum(parts);

    const unsigned d = 8;
    MPoly expected(2);
    for (const Word& v : testing::all_words(2, 0, d)) {
        const auto deg = multidegree(v, 2);
        if (!testing::occurs_in(v, testing::w("xx", "xy"))) expected.add_term(deg.counts, 1);
        if (v.degree() < d && !testing::occurs_in(v, testing::w("xy", "xy")))
            expected.add_term({deg.counts[0] + 1, deg.counts[1]}, 1);
    }
    CHECK(taylor_truncate(sum, d) == expected);
}
