#include "qsc/bounds.hpp"

#include "properties.hpp"

#include <doctest.h>

using namespace qsc;

TEST_CASE("division data reconstructs the degree") {
    for (int d : {7, 12, 18, 24, 30, 42, 55}) {
        for (int k = 1; k <= 8; ++k) {
            BoundContext c = BoundContext::make(d, k);
            Int modulus = c.main_regime ? Int(2 * k) : 2 * c.n0;
            CHECK((Int(d) + c.eps) % modulus == 0);
            CHECK(c.eps >= 0);
            CHECK(c.eps < modulus);
            CHECK(c.n0 == Int((d - 1) / (2 * k) + 1));
        }
    }
}

TEST_CASE("the genus bound at the checkpoints") {
    PiBound b = pi_bound(18, 3);
    CHECK(b.pi == Rational(27));
    CHECK(b.xi == 0);
    CHECK(b.ctx.eps == 0);
    // (18, 28) attains it: g - 1 = 27.
    CHECK(Rational(27) == b.bound());

    PiBound b424 = pi_bound(42, 4);
    CHECK(b424.pi == Rational(129));
    CHECK(b424.xi == 1);

    // Sub-threshold degrees delegate to theta0.
    PiBound sub = pi_bound(18, 4);
    CHECK_FALSE(sub.ctx.main_regime);
    CHECK(sub.effective_k == 3);
    CHECK(sub.pi == Rational(27));

    CHECK_THROWS_AS(pi_bound(10, 0), std::invalid_argument);
}

TEST_CASE("pi never exceeds the easy bound") {
    for (int k = 1; k <= 10; ++k)
        for (int d = 2 * k * (k - 1) + 1; d <= 60; ++d) {
            PiBound b = pi_bound(d, k);
            CHECK(b.bound() <= easy_bound(d, k));
        }
}

TEST_CASE("branch continuity at eps = k") {
    CHECK(props::pi_branch_continuity(12) == 0);
}

TEST_CASE("not-on-small-surface bound drives the cascade openings") {
    // Scroll genus d(d-6)/8 against each bound.
    auto cap = [](const Rational& A, const Rational& B) {
        return (Rational(3, 4) + B) / (Rational(1, 8) - A);
    };
    CHECK(cap(Rational(1, 14), Rational(3, 2)) == Rational(42));   // k = 7, degree >= 14
    CHECK(cap(Rational(1, 24), Rational(3, 2)) == Rational(27));   // k = 6
    CHECK(cap(Rational(1, 20), Rational(1)) == Rational(70, 3));   // k = 5
    CHECK(cap(Rational(1, 16), Rational(1, 2)) == Rational(20));   // k = 4
    CHECK(cap(Rational(1, 12), Rational(0)) == Rational(18));      // k = 3
    // The k = 7 bound is attained exactly at the endpoint: g - 1 = 189 at d = 42.
    CHECK(not_on_small_surface_bound(42, 7) == Rational(189));
    CHECK(Rational(42) * Rational(42 - 6) / Rational(8) == Rational(189));
}

TEST_CASE("lifting criterion") {
    CHECK(lifting_applicable(12, 2));
    CHECK_FALSE(lifting_applicable(8, 2));
    CHECK(lifting_applicable(9, 2));
    CHECK_THROWS_AS(lifting_applicable(9, 0), std::invalid_argument);
}

TEST_CASE("Segre inequality at the scroll substitutions") {
    // d = 12: equality with no divisorial part.
    SegreEval eq = segre_scroll_reduced(Rational(12), Rational(0), Rational(0));
    CHECK(eq.satisfied);
    CHECK(eq.lhs == eq.rhs);
    CHECK(eq.lhs == Rational(0));
    // d = 14 violates the inequality.
    SegreEval bad = segre_scroll_reduced(Rational(14), Rational(0), Rational(0));
    CHECK_FALSE(bad.satisfied);
    // Any effective divisorial term only hurts at d = 12.
    CHECK_FALSE(segre_scroll_reduced(Rational(12), Rational(1), Rational(0)).satisfied);

    // The general form agrees at the scroll data.
    SegreEval gen = segre_inequality(2, Rational(12), Rational(10), Rational(2));
    CHECK(gen.satisfied);
    CHECK(gen.lhs == gen.rhs);
    SegreEval gen14 = segre_inequality(
        2, Rational(14), Rational(1) + Rational(14 * 8) / Rational(8),
        (Rational(14 * 14 * 14) - Rational(18 * 14 * 14) + Rational(96 * 14)) / Rational(144));
    CHECK_FALSE(gen14.satisfied);
}

TEST_CASE("Segre reduction identity holds symbolically") {
    // chi(d) - (1/12)[(d-24)(g-1) + 2d^2 - 13d] = -(1/288) d (d+6) (d-12)
    RatPoly d = RatPoly::variable();
    RatPoly gm1 = Rational(1, 8) * d * (d - RatPoly(Rational(6)));
    RatPoly chi = Rational(1, 144) *
                  (d * d * d - Rational(18) * d * d + Rational(96) * d);
    RatPoly lhs = chi - Rational(1, 12) * ((d - RatPoly(Rational(24))) * gm1 +
                                           Rational(2) * d * d - Rational(13) * d);
    RatPoly rhs = Rational(-1, 288) * d * (d + RatPoly(Rational(6))) *
                  (d - RatPoly(Rational(12)));
    CHECK(lhs == rhs);
    // Decreasing beyond d = 12.
    for (int dd = 13; dd <= 40; ++dd)
        CHECK(rhs.eval(Rational(dd + 1)) < rhs.eval(Rational(dd)));
}

TEST_CASE("candidate pairs") {
    CandidateScan scan = candidate_pairs();
    REQUIRE(scan.pairs.size() == 7);
    const std::pair<int, int> expect[] = {{6, 1},   {12, 10}, {18, 28}, {24, 55},
                                          {30, 91}, {36, 136}, {42, 190}};
    for (size_t i = 0; i < 7; ++i) {
        CHECK(scan.pairs[i].d == expect[i].first);
        CHECK(scan.pairs[i].g == expect[i].second);
    }
    CHECK(scan.d8_special);
    bool saw14 = false, saw10 = false;
    for (const auto& [d, why] : scan.rejected) {
        if (d == 14)
            saw14 = true;
        if (d == 10)
            saw10 = true;
        CHECK(why.find("not an integer") != std::string::npos);
    }
    CHECK(saw14);
    CHECK(saw10);
}

TEST_CASE("degree cascade trace") {
    CascadeTrace t = degree_cascade();
    CHECK(t.unconditional_bound == 42);
    CHECK(t.second_quadric_bound == 12);
    REQUIRE(t.steps.size() == 7);
    CHECK(t.steps[0].label == "k=7");
    CHECK(t.steps[0].degree_bound == 42);
    CHECK(t.steps[1].degree_bound == 27);
    CHECK(t.steps[2].degree_bound == 23);  // exact 70/3
    CHECK(t.steps[2].exact_bound == Rational(70, 3));
    CHECK(t.steps[3].degree_bound == 20);
    CHECK(t.steps[4].degree_bound == 18);
    CHECK(t.steps[5].label == "k=2");
    CHECK(t.steps[5].degree_bound == 12);
    CHECK(t.steps[6].label == "k=1");
    CHECK(t.steps[6].rule.find("complete intersection") != std::string::npos);
    // Deterministic: a second run yields the same trace.
    CascadeTrace t2 = degree_cascade();
    REQUIRE(t2.steps.size() == t.steps.size());
    for (size_t i = 0; i < t.steps.size(); ++i) {
        CHECK(t2.steps[i].rule == t.steps[i].rule);
        CHECK(t2.steps[i].exact_bound == t.steps[i].exact_bound);
    }
}
