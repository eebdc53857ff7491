#include <doctest.h>

#include <random>

#include "nchilbert/errors.hpp"
#include "nchilbert/polyring.hpp"

using namespace nchilbert;

namespace {

MPoly t(std::size_t nvars, std::size_t i) { return MPoly::variable(nvars, i); }
MPoly one(std::size_t nvars) { return MPoly::constant(nvars, 1); }

MPoly random_poly(std::mt19937_64& rng, std::size_t nvars, std::size_t terms, unsigned max_exp) {
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    std::uniform_int_distribution<int> coeff(-4, 4);
    MPoly p(nvars);
    for (std::size_t k = 0; k < terms; ++k) {
        Exponents e(nvars);
        for (auto& x : e) x = exp(rng);
        p.add_term(e, coeff(rng));
    }
    return p;
}

mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

TEST_CASE("ring arithmetic") {
    const MPoly x = t(1, 0);
    CHECK((one(1) - x) * (one(1) + x + x * x) == one(1) - x * x * x);
    CHECK(t(2, 0) * t(2, 1) + t(2, 1) * t(2, 0) == MPoly::monomial(2, {1, 1}, 2));
    CHECK((x - x).is_zero());
    CHECK((x * Rational(0)).is_zero());
    CHECK_THROWS_AS(t(1, 0) + t(2, 0), Error);
}

TEST_CASE("rational function arithmetic") {
    const RatFun geom(one(1), one(1) - t(1, 0));
    CHECK(geom - RatFun(one(1)) == RatFun(t(1, 0), one(1) - t(1, 0)));
    CHECK(cross_equal(geom * RatFun(one(1) - t(1, 0)), RatFun(one(1))));
    CHECK((geom / geom) == RatFun(one(1)));
    CHECK_THROWS_AS(geom / RatFun(1), Error);
}

TEST_CASE("normalization") {
    // (t^2 - 1)/(2t - 2) -> (t + 1)/2, with the least denominator term positive.
    const MPoly x = t(1, 0);
    const RatFun f(x * x - one(1), x * Rational(2) - one(1) * Rational(2));
    CHECK(f.num() == x + one(1));
    CHECK(f.den() == MPoly::constant(1, 2));
    const RatFun g(one(1), x - one(1));
    CHECK(g.den().constant_term() > 0);
    CHECK(g.num() == MPoly::constant(1, -1));
    // Monomial factors cancel.
    const RatFun h(x * x, x * (one(1) - x));
    CHECK(h.num() == x);
    CHECK(h.den() == one(1) - x);
}

TEST_CASE("graded specialization") {
    const MPoly num = t(3, 0) * t(3, 1) + t(3, 0) * t(3, 2) + t(3, 1) * t(3, 2) + one(3);
    const MPoly u = t(1, 0);
    CHECK(specialize_graded(num) == u * u * Rational(3) + one(1));
    const MPoly den = (one(3) - t(3, 0)) * (one(3) - t(3, 1)) * (one(3) - t(3, 2));
    CHECK(specialize_graded(den) == (one(1) - u) * (one(1) - u) * (one(1) - u));
    CHECK(specialize_graded(MPoly(3)).is_zero());
}

TEST_CASE("Taylor truncation") {
    const MPoly t1 = t(2, 0), t2 = t(2, 1);
    const RatFun f(one(2), one(2) - t1 - t2);
    CHECK(taylor_truncate(f, 2) == one(2) + t1 + t2 + t1 * t1 + t1 * t2 * Rational(2) + t2 * t2);

    const MPoly u = t(1, 0);
    const RatFun g(u * u * Rational(3) + one(1), (one(1) - u) * (one(1) - u) * (one(1) - u));
    CHECK(taylor_truncate(g, 3) ==
          one(1) + u * Rational(3) + u * u * Rational(9) + u * u * u * Rational(19));

    const MPoly p = one(1) + u * u;
    CHECK(taylor_truncate(RatFun(p), 5) == p);
    CHECK_THROWS_AS(taylor_truncate(RatFun(one(1), u), 3), Error);
}

TEST_CASE("Taylor coefficients of 1/(1-t1-t2) are binomials") {
    const RatFun f(one(2), one(2) - t(2, 0) - t(2, 1));
    const MPoly p = taylor_truncate(f, 9);
    for (unsigned a = 0; a <= 9; ++a)
        for (unsigned b = 0; a + b <= 9; ++b) CHECK(p.coefficient({a, b}) == Rational(binomial(a + b, a)));
    CHECK(p.total_degree() == 9);
}

TEST_CASE("Taylor coefficients of the Fibonacci series") {
    const MPoly u = t(1, 0);
    const MPoly p = taylor_truncate(RatFun(one(1) + u, one(1) - u - u * u), 20);
    mpz_class a = 1, b = 2;
    for (unsigned d = 0; d <= 20; ++d) {
        CHECK(p.coefficient({d}) == Rational(a));
        mpz_class c = a + b;
        a = b;
        b = c;
    }
}

TEST_CASE("gcd") {
    const MPoly u = t(1, 0);
    CHECK(gcd(u * u - one(1), u - one(1)) == u - one(1));
    CHECK(gcd(t(3, 0) * t(3, 1), t(3, 0) * t(3, 2)) == t(3, 0));
    const MPoly f = u * Rational(-4) + MPoly::constant(1, 6);
    CHECK(gcd(f, MPoly(1)) == primitive_normalized(f));
    CHECK(gcd(MPoly(2), MPoly(2)).is_zero());
}

TEST_CASE("gcd finds planted common factors") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 40; ++round) {
        const std::size_t n = 1 + round % 3;
        const MPoly c = random_poly(rng, n, 3, 2) + one(n);
        const MPoly a = random_poly(rng, n, 3, 2) * c;
        const MPoly b = random_poly(rng, n, 3, 2) * c;
        if (a.is_zero() || b.is_zero()) continue;
        const MPoly g = gcd(a, b);
        REQUIRE(divide_exact(g, c).has_value());
        REQUIRE(divide_exact(a, g).has_value());
        REQUIRE(divide_exact(b, g).has_value());
        // The cofactors are coprime.
        const MPoly rest = gcd(*divide_exact(a, g), *divide_exact(b, g));
        CHECK(rest.is_constant());
    }
}

TEST_CASE("rational normalization preserves the value") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 40; ++round) {
        const std::size_t n = 1 + round % 3;
        const MPoly c = random_poly(rng, n, 2, 2) + one(n);
        const MPoly num = random_poly(rng, n, 3, 2);
        const MPoly den = random_poly(rng, n, 3, 2) + one(n) * Rational(7);
        if (den.is_zero()) continue;
        const RatFun f(num * c, den * c);
        CHECK(f.num() * den == num * f.den());
        // Unreduced pairs compare equal by cross-multiplication.
        CHECK(cross_equal(f, RatFun(num * c, den * c, 0)));
    }
}

TEST_CASE("evaluation and rendering") {
    const MPoly p = t(2, 0) * t(2, 1) * Rational(3) - one(2);
    const std::vector<Rational> pt{Rational(2), Rational(1, 3)};
    CHECK(p.evaluate(pt) == Rational(1));
    CHECK(to_string(p) == "3*t1*t2 - 1");
    CHECK(to_string(MPoly(1)) == "0");
    CHECK(to_string(RatFun(one(1), one(1) - t(1, 0))) == "(1) / (-t + 1)");
}
