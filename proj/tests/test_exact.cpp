#include "qsc/linalg.hpp"
#include "qsc/poly.hpp"
#include "qsc/rational.hpp"

#include "oracles.hpp"
#include "properties.hpp"

#include <doctest.h>

using namespace qsc;

TEST_CASE("rational arithmetic normalizes") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational::parse("-59/60") == Rational(-59, 60));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational(3, 2).str() == "3/2");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("binomials match the factorial definition") {
    CHECK(binom(8, 4) == oracle::binom_factorial(8, 4));
    CHECK(binom(8, 4) == 70);
    CHECK(binom(13, 4) == oracle::binom_factorial(13, 4));
    CHECK(binom(13, 4) == 715);
    for (int n = 0; n <= 12; ++n)
        CHECK(binom(n, 0) == 1);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(5, 6) == 0);
    CHECK(binom(-2, 1) == 0);
}

TEST_CASE("identity system has the trivial unique solution") {
    Mat<Rational> id = Mat<Rational>::identity(2);
    auto sol = solve_linear(id, {Rational(3), Rational(5)});
    REQUIRE(sol.kind == SolKind::Unique);
    CHECK(sol.particular[0] == Rational(3));
    CHECK(sol.particular[1] == Rational(5));
}

TEST_CASE("one-by-one determinant") {
    Mat<Rational> m(1, 1);
    m.at(0, 0) = Rational(7);
    CHECK(determinant(m) == Rational(7));
}

TEST_CASE("inconsistent and parametric systems are reported as such") {
    Mat<Rational> m(2, 2);
    m.at(0, 0) = Rational(1);
    m.at(0, 1) = Rational(1);
    m.at(1, 0) = Rational(2);
    m.at(1, 1) = Rational(2);
    auto bad = solve_linear(m, {Rational(1), Rational(3)});
    CHECK(bad.kind == SolKind::Inconsistent);
    auto fam = solve_linear(m, {Rational(1), Rational(2)});
    REQUIRE(fam.kind == SolKind::Family);
    REQUIRE(fam.nullspace.size() == 1);
    CHECK(m.apply(fam.particular) == std::vector<Rational>{Rational(1), Rational(2)});
    std::vector<Rational> shifted = fam.particular;
    for (size_t i = 0; i < shifted.size(); ++i)
        shifted[i] += fam.nullspace[0][i];
    CHECK(m.apply(shifted) == std::vector<Rational>{Rational(1), Rational(2)});
    CHECK_THROWS_AS(solve_linear(m, {Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(determinant(Mat<Rational>(2, 3)), std::invalid_argument);
}

TEST_CASE("polynomial division, gcd and rational functions") {
    RatPoly x = RatPoly::variable();
    RatPoly p = x * x - RatPoly(Rational(1));
    RatPoly q = x - RatPoly(Rational(1));
    auto [quot, rem] = RatPoly::divmod(p, q);
    CHECK(rem.is_zero());
    CHECK(quot == x + RatPoly(Rational(1)));
    CHECK(RatPoly::gcd(p, q) == q);

    RatFunc f(p, q);  // reduces to x + 1
    CHECK(f.is_polynomial());
    CHECK(f.as_polynomial() == x + RatPoly(Rational(1)));
    RatFunc g = RatFunc(RatPoly(Rational(1)), q);
    CHECK((g * RatFunc(q)).as_polynomial() == RatPoly(Rational(1)));
    CHECK(binom_poly(4, 4).eval(Rational(4)) == Rational(70));  // B(t+4,4) at t = 4
    CHECK(binom_poly(6, 6).eval(Rational(-7)) == Rational(1));  // polynomial, not the count
}

TEST_CASE("polynomial rendering") {
    RatPoly q = RatPoly::from_coeffs({Rational(-1), Rational(59, 60), Rational(19, 24),
                                      Rational(-1), Rational(5, 24), Rational(1, 60)});
    CHECK(q.str("t") ==
          "(1/60)t^5 + (5/24)t^4 - t^3 + (19/24)t^2 + (59/60)t - 1");
    CHECK(RatPoly().str("t") == "0");
}

TEST_CASE("exact linear algebra properties hold on random instances") {
    CHECK(props::linear_algebra_properties(0xA1, 40) == 0);
    CHECK(props::poly_eval_homomorphism(0xA2, 60) == 0);
}
