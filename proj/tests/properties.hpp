// Seeded randomized property suites, shared between the unit tests and the
// acceptance runner. Each suite returns the number of failures.
#pragma once

#include "qsc/bounds.hpp"
#include "qsc/chern.hpp"
#include "qsc/chow.hpp"
#include "qsc/invariants.hpp"
#include "qsc/linalg.hpp"
#include "qsc/scrolls.hpp"

#include "oracles.hpp"

#include <random>

namespace props {

using namespace qsc;

inline Rational small_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    return Rational(num(rng), den(rng));
}

inline ChowClass random_class(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    ChowClass c(n);
    for (int codim = 0; codim <= n; ++codim) {
        if (n % 2 == 0 && codim == n / 2) {
            c.set_middle(Rational(coeff(rng)), Rational(coeff(rng)));
            continue;
        }
        c.set_coeff(codim, Rational(coeff(rng)));
    }
    return c;
}

inline ChernSeries random_series(std::mt19937& rng, int n, int rank) {
    ChernSeries s = ChernSeries::trivial(n, rank);
    for (int i = 1; i <= n; ++i)
        s.at(i) = random_class(rng, n);
    return s;
}

// Cup product is associative and commutative; the top h power has degree 2.
inline int chow_ring_properties(unsigned seed, int iters) {
    std::mt19937 rng(seed);
    int failures = 0;
    for (int n = 4; n <= 8; ++n) {
        if (!(ChowClass::h_power(n, n).degree() == Rational(2)))
            ++failures;
        for (int it = 0; it < iters; ++it) {
            ChowClass a = random_class(rng, n);
            ChowClass b = random_class(rng, n);
            ChowClass c = random_class(rng, n);
            if (!(a.cup(b) == b.cup(a)))
                ++failures;
            if (!(a.cup(b).cup(c) == a.cup(b.cup(c))))
                ++failures;
        }
    }
    // Both parity branches of the middle pairing: (L1 + L2)^2 has degree 2.
    for (int n : {4, 6}) {
        ChowClass mid = ChowClass::ruling(n, 1) + ChowClass::ruling(n, 2);
        ChowClass sq = mid.cup(mid);
        ChowClass viah = ChowClass::h_power(n, n / 2).cup(ChowClass::h_power(n, n / 2));
        if (!(sq.degree() == Rational(2)) || !(sq == viah))
            ++failures;
    }
    return failures;
}

// Whitney product: commutative, associative, rank additive.
inline int whitney_properties(unsigned seed, int iters) {
    std::mt19937 rng(seed);
    int failures = 0;
    for (int n : {5, 6}) {
        for (int it = 0; it < iters; ++it) {
            ChernSeries a = random_series(rng, n, 2);
            ChernSeries b = random_series(rng, n, 3);
            ChernSeries c = random_series(rng, n, 1);
            ChernSeries ab = whitney(a, b);
            if (!(ab.rank == a.rank + b.rank))
                ++failures;
            ChernSeries ba = whitney(b, a);
            bool comm = true, assoc = true;
            for (int i = 1; i <= n; ++i) {
                comm = comm && ab.at(i) == ba.at(i);
                assoc = assoc && whitney(ab, c).at(i) == whitney(a, whitney(b, c)).at(i);
            }
            if (!comm || !assoc)
                ++failures;
        }
    }
    return failures;
}

// twist(twist(s, a), b) = twist(s, a + b) on catalog series.
inline int twist_composition(unsigned seed, int iters) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> tw(-3, 3);
    int failures = 0;
    for (int it = 0; it < iters; ++it) {
        int a = tw(rng), b = tw(rng);
        for (auto which : {CatalogBundle::Spinor, CatalogBundle::Cayley}) {
            ChernSeries s = catalog(5, which, tw(rng));
            ChernSeries lhs = twist(twist(s, a), b);
            ChernSeries rhs = twist(s, a + b);
            for (int i = 1; i <= 5; ++i)
                if (!(lhs.at(i) == rhs.at(i)))
                    ++failures;
        }
        ChernSeries s6 = catalog(6, CatalogBundle::SpinorPrime, tw(rng));
        ChernSeries lhs = twist(twist(s6, a), b);
        ChernSeries rhs = twist(s6, a + b);
        for (int i = 1; i <= 6; ++i)
            if (!(lhs.at(i) == rhs.at(i)))
                ++failures;
    }
    return failures;
}

// The tautological cut vanishes identically: symbolically in d, along the
// d = 8 family, and at sampled rational degrees.
inline int tautological_residuals(unsigned seed, int iters) {
    std::mt19937 rng(seed);
    int failures = 0;
    if (!surface_scroll_solution_sym().tautological_residual().is_zero())
        ++failures;
    if (!d8_family_sym().tautological_residual().is_zero())
        ++failures;
    for (int it = 0; it < iters; ++it) {
        Rational d = small_rational(rng);
        if (d == Rational(8))
            continue;
        if (!surface_scroll_solve(d).tautological_residual().is_zero())
            ++failures;
        if (!d8_family(small_rational(rng)).tautological_residual().is_zero())
            ++failures;
    }
    return failures;
}

// The two branches of the genus bound agree at eps = k, and pi_bound returns
// that common value.
inline int pi_branch_continuity(int kmax) {
    int failures = 0;
    for (int k = 1; k <= kmax; ++k) {
        // Pick d = 2k(k-1) + k + 2km so that d = -k (mod 2k) and d > 2k(k-1).
        for (int m = 0; m < 3; ++m) {
            Int d = 2 * k * (k - 1) + k + 2 * k * m;
            Rational dd(d), kk(k), ee(k);
            Rational base = dd * dd / (Rational(4) * kk) + (kk - Rational(3)) / Rational(2) * dd;
            Rational low = base - ee * ee / (Rational(4) * kk) - ee * (kk - ee) / Rational(2);
            Rational et = ee - kk;
            Rational high =
                base - (kk - et) * (et / Rational(2) - et / (Rational(4) * kk) + Rational(1, 4));
            if (!(low == high))
                ++failures;
            PiBound pb = pi_bound(d, k);
            if (!(pb.pi == low) || pb.ctx.eps != k)
                ++failures;
        }
    }
    return failures;
}

// chi(I_X(t)) + chi(O_X(t)) = chi(O_{Q^5}(t)) as polynomials, and the
// quadric series matches the section count at small nonnegative twists.
inline int hilbert_complementarity(unsigned seed, int iters) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dpick(1, 10);
    std::uniform_int_distribution<int> gpick(0, 12);
    std::uniform_int_distribution<int> cpick(-3, 4);
    int failures = 0;
    RatPoly q5 = quadric_chi_poly(5);
    for (int t = 0; t <= 8; ++t) {
        Int count = oracle::binom_factorial(t + 6, 6) - oracle::binom_factorial(t + 4, 6);
        if (!(q5.eval(Rational(t)) == Rational(count)))
            ++failures;
    }
    for (int it = 0; it < iters; ++it) {
        InvariantRecord r(5, Rational(2 * dpick(rng)), Rational(gpick(rng)),
                          Rational(cpick(rng)), Rational(cpick(rng)));
        if (!(ideal_hilbert_polynomial(r) + hilbert_polynomial(r) == q5))
            ++failures;
    }
    return failures;
}

// Exact solver round trip and determinant multiplicativity.
inline int linear_algebra_properties(unsigned seed, int iters) {
    std::mt19937 rng(seed);
    int failures = 0;
    for (int it = 0; it < iters; ++it) {
        size_t n = 2 + static_cast<size_t>(it % 3);
        Mat<Rational> m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                m.at(i, j) = small_rational(rng);
        std::vector<Rational> b(n);
        for (auto& v : b)
            v = small_rational(rng);
        if (determinant(m).is_zero())
            continue;
        LinSolution<Rational> sol = solve_linear(m, b);
        if (sol.kind != SolKind::Unique) {
            ++failures;
            continue;
        }
        if (!(m.apply(sol.particular) == b))
            ++failures;
        Mat<Rational> a(3, 3), c(3, 3);
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j) {
                a.at(i, j) = small_rational(rng);
                c.at(i, j) = small_rational(rng);
            }
        if (!(determinant(a * c) == determinant(a) * determinant(c)))
            ++failures;
    }
    return failures;
}

// Polynomial evaluation is a ring homomorphism.
inline int poly_eval_homomorphism(unsigned seed, int iters) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> deg(0, 5);
    int failures = 0;
    for (int it = 0; it < iters; ++it) {
        std::vector<Rational> ca(static_cast<size_t>(deg(rng)) + 1),
            cb(static_cast<size_t>(deg(rng)) + 1);
        for (auto& v : ca)
            v = small_rational(rng);
        for (auto& v : cb)
            v = small_rational(rng);
        RatPoly p = RatPoly::from_coeffs(ca), q = RatPoly::from_coeffs(cb);
        Rational x = small_rational(rng);
        if (!((p * q).eval(x) == p.eval(x) * q.eval(x)))
            ++failures;
        if (!((p + q).eval(x) == p.eval(x) + q.eval(x)))
            ++failures;
    }
    return failures;
}

}  // namespace props
