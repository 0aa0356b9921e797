#include "qsc/bounds.hpp"

#include <stdexcept>

namespace qsc {

BoundContext BoundContext::make(const Int& d, const Int& k) {
    if (k <= 0)
        throw std::invalid_argument("BoundContext: k must be positive");
    if (d <= 0)
        throw std::invalid_argument("BoundContext: d must be positive");
    BoundContext c;
    c.d = d;
    c.k = k;
    c.main_regime = d > 2 * k * (k - 1);
    c.n0 = (d - 1) / (2 * k) + 1;
    Int modulus = c.main_regime ? 2 * k : 2 * c.n0;
    Int r = d % modulus;
    c.eps = (r == 0) ? Int(0) : modulus - r;
    return c;
}

namespace {

Rational pi_main(const Int& d, const Int& k, const Int& eps) {
    Rational dd(d), kk(k), ee(eps);
    Rational base = dd * dd / (Rational(4) * kk) + (kk - Rational(3)) / Rational(2) * dd;
    if (eps <= k)
        return base - ee * ee / (Rational(4) * kk) - ee * (kk - ee) / Rational(2);
    Rational et = ee - kk;  // eps tilde
    return base - (kk - et) * (et / Rational(2) - et / (Rational(4) * kk) + Rational(1, 4));
}

int xi_of(const Int& eps, const Int& k) {
    if (eps == 0 || eps == 1 || eps == 2 || eps == 2 * k - 1)
        return 0;
    return 1;
}

}  // namespace

PiBound pi_bound(const Int& d, const Int& k) {
    BoundContext ctx = BoundContext::make(d, k);
    if (!ctx.main_regime) {
        // pi'(d,k) = pi(d, theta0); theta0 < k keeps the recursion finite.
        if (ctx.n0 >= k)
            throw std::logic_error("pi_bound: theta0 substitution does not descend");
        PiBound sub = pi_bound(d, ctx.n0);
        sub.ctx = ctx;
        return sub;
    }
    PiBound b;
    b.ctx = ctx;
    b.effective_k = k;
    b.pi = pi_main(d, k, ctx.eps);
    b.xi = xi_of(ctx.eps, k);
    return b;
}

Rational easy_bound(const Int& d, const Int& k) {
    Rational dd(d), kk(k);
    return dd * dd / (Rational(4) * kk) + (kk - Rational(3)) / Rational(2) * dd;
}

Rational not_on_small_surface_bound(const Int& d, const Int& k) {
    Rational dd(d), kk(k);
    return dd * dd / (Rational(2) * kk) + (kk - Rational(4)) / Rational(2) * dd;
}

bool lifting_applicable(const Int& d, const Int& sigma) {
    if (sigma < 1)
        throw std::invalid_argument("lifting_applicable: sigma must be positive");
    return d > 2 * sigma * sigma;
}

SegreEval segre_inequality(const Int& sigma, const Rational& d, const Rational& g,
                           const Rational& chi_s) {
    if (sigma < 1)
        throw std::invalid_argument("segre_inequality: sigma must be positive");
    Rational s(sigma);
    SegreEval e;
    e.lhs = chi_s;
    e.rhs = ((d - Rational(12) * s) * (g - Rational(1)) +
             (s / Rational(4) + Rational(3, 2)) * d * d - Rational(13, 2) * s * d) /
            (Rational(6) * s);
    e.satisfied = e.lhs >= e.rhs;
    return e;
}

SegreEval segre_scroll_reduced(const Rational& d, const Rational& Le1D, const Rational& Df) {
    SegreEval e;
    e.lhs = -d * (d + Rational(6)) * (d - Rational(12));
    e.rhs = Rational(12) * (d + Rational(6)) * Le1D + d * (d + Rational(6)) * (d - Rational(12)) * Df;
    e.satisfied = e.lhs >= e.rhs;
    return e;
}

CandidateScan candidate_pairs() {
    CandidateScan scan;
    for (int d = 6; d <= 42; d += 2) {
        if (d == 8)
            continue;  // singular system; handled by the parametric family
        Rational gm1 = Rational(d) * Rational(d - 6) / Rational(8);
        Rational chi = (Rational(d) * d * d - Rational(18) * d * d + Rational(96) * d) /
                       Rational(144);
        if (!gm1.is_integer()) {
            scan.rejected.emplace_back(d, "g - 1 = d(d-6)/8 not an integer");
            continue;
        }
        if (!chi.is_integer()) {
            scan.rejected.emplace_back(d, "chi = (d^3 - 18d^2 + 96d)/144 not an integer");
            continue;
        }
        scan.pairs.push_back({d, gm1.num() + 1, chi});
    }
    return scan;
}

namespace {

// Solve g - 1 = d(d-6)/8 <= A d^2 + B d exactly for d > 0: the bound is
// d <= (3/4 + B) / (1/8 - A), valid while A < 1/8.
Rational scroll_degree_bound(const Rational& A, const Rational& B) {
    Rational lead = Rational(1, 8) - A;
    if (!(lead > Rational(0)))
        throw std::logic_error("scroll_degree_bound: bound does not cap the degree");
    return (Rational(3, 4) + B) / lead;
}

}  // namespace

CascadeTrace degree_cascade() {
    CascadeTrace t;

    {
        // Smallest surface through C has degree >= 14.
        Int k = 7;
        Rational A = Rational(1) / (Rational(2) * Rational(k));
        Rational B = (Rational(k) - Rational(4)) / Rational(2);
        Rational bound = scroll_degree_bound(A, B);
        t.steps.push_back({"k=7", k, "no surface of degree < 14: g-1 <= d^2/14 + 3d/2",
                           bound, bound.floor(), ""});
        t.unconditional_bound = bound.floor();
    }
    for (int k = 6; k >= 3; --k) {
        Rational A = Rational(1) / (Rational(4) * Rational(k));
        Rational B = (Rational(k) - Rational(3)) / Rational(2);
        Rational bound = scroll_degree_bound(A, B);
        std::string note;
        if (k == 4 || k == 5)
            note = "quoted alongside k=3 as d <= 18; the computed bound is " +
                   bound.str();
        Rational lin = (Rational(k) - Rational(3)) / Rational(2);
        std::string linear;
        if (!lin.is_zero())
            linear = lin == Rational(1) ? " + d"
                                        : " + (" + lin.str() + ")d";
        t.steps.push_back({"k=" + std::to_string(k), k,
                           "curve on a surface of degree " + std::to_string(2 * k) +
                               ": g-1 <= d^2/" + std::to_string(4 * k) + linear,
                           bound, bound.floor(), note});
    }
    {
        // k = 2: a second quadric through C lifts to X once d > 8, and the
        // Segre inequality then pins d <= 12 (with D forced empty at d = 12).
        SegreEval at14 = segre_scroll_reduced(Rational(14), Rational(0), Rational(0));
        SegreEval at12 = segre_scroll_reduced(Rational(12), Rational(0), Rational(0));
        if (at14.satisfied || !at12.satisfied)
            throw std::logic_error("degree_cascade: Segre reduction sign check failed");
        t.steps.push_back({"k=2", 2,
                           "curve on a quadric surface and d > 8: lifting puts X on a "
                           "second quadric; -d(d+6)(d-12) >= 0 forces d <= 12",
                           Rational(12), 12,
                           "equality at d = 12 forces the divisorial part D to be empty"});
        t.second_quadric_bound = 12;
    }
    t.steps.push_back({"k=1", 1,
                       "curve on a plane section: X lies on a quadric fourfold with "
                       "Picard group Z, so X would be a complete intersection",
                       Rational(0), 0,
                       "a scroll over a surface has Picard rank >= 2; contradiction"});
    t.conclusion = "d <= 42 unconditionally; d <= 12 whenever the curve section lies "
                   "on a second quadric";
    return t;
}

}  // namespace qsc
