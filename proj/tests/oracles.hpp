// Independent oracles used to pin expected values. Everything here is
// computed from first principles (factorials, section counts, the bidegree
// ring of P^1 x P^3) without touching the code paths under test.
#pragma once

#include "qsc/poly.hpp"
#include "qsc/rational.hpp"

#include <array>
#include <vector>

namespace oracle {

using qsc::Int;
using qsc::RatPoly;
using qsc::Rational;

// Binomial coefficient straight from factorials.
inline Int binom_factorial(int a, int b) {
    if (b < 0 || a < 0 || b > a)
        return 0;
    auto fact = [](int k) {
        Int f = 1;
        for (int i = 2; i <= k; ++i)
            f *= i;
        return f;
    };
    return fact(a) / (fact(b) * fact(a - b));
}

// Sections of O(t) on a quadric threefold: forms of degree t on P^4 modulo
// multiples of the quadric.
inline Int quadric3_sections(int t) {
    return binom_factorial(t + 4, 4) - binom_factorial(t + 2, 4);
}

// B(x + shift, k) as a polynomial, built here so the oracle does not share
// code with the library.
inline RatPoly binomial_polynomial(int shift, int k) {
    RatPoly p{Rational(1)};
    RatPoly x = RatPoly::variable();
    Int fact = 1;
    for (int j = 0; j < k; ++j) {
        p = p * (x + RatPoly(Rational(shift - j)));
        fact *= j + 1;
    }
    return Rational(Int(1), fact) * p;
}

// chi(O_X(t)) of a complete intersection (a,b,c) in P^6 by the Koszul
// inclusion-exclusion over the three degrees.
inline RatPoly ci_chi_polynomial(int a, int b, int c) {
    std::array<int, 3> deg = {a, b, c};
    RatPoly acc;
    for (int mask = 0; mask < 8; ++mask) {
        int shift = 6;
        int bits = 0;
        for (int k = 0; k < 3; ++k)
            if (mask & (1 << k)) {
                shift -= deg[static_cast<size_t>(k)];
                ++bits;
            }
        RatPoly term = binomial_polynomial(shift, 6);
        acc = (bits % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// The bidegree ring Z[h1,h2]/(h1^2, h2^4) of P^1 x P^3; enough to evaluate
// every degree-four monomial of the Segre fourfold.
struct BiPoly {
    // c[i][j] multiplies h1^i h2^j.
    std::array<std::array<Int, 4>, 2> c{};

    static BiPoly h1() {
        BiPoly p;
        p.c[1][0] = 1;
        return p;
    }
    static BiPoly h2() {
        BiPoly p;
        p.c[0][1] = 1;
        return p;
    }
    static BiPoly scalar(int v) {
        BiPoly p;
        p.c[0][0] = v;
        return p;
    }

    BiPoly operator+(const BiPoly& o) const {
        BiPoly r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 4; ++j)
                r.c[i][j] = c[i][j] + o.c[i][j];
        return r;
    }
    BiPoly operator*(const BiPoly& o) const {
        BiPoly r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; i + k < 2; ++k)
                    for (int l = 0; j + l < 4; ++l)
                        r.c[i + k][j + l] += c[i][j] * o.c[k][l];
        return r;
    }
    BiPoly pow(int e) const {
        BiPoly r = scalar(1);
        for (int i = 0; i < e; ++i)
            r = r * *this;
        return r;
    }
    // Coefficient of the point class h1 h2^3.
    Int top() const { return c[1][3]; }
};

// The seventeen degree-four intersection numbers of the Segre embedding of
// P^1 x P^3, in the order used by the fourfold system: L = h1 + h2,
// e = c(O(1)^2 on P^3), y = c(T_{P^3}).
inline std::vector<Int> segre_fourfold_monomials() {
    BiPoly L = BiPoly::h1() + BiPoly::h2();
    BiPoly e1 = BiPoly::scalar(2) * BiPoly::h2();
    BiPoly e2 = BiPoly::h2() * BiPoly::h2();
    BiPoly y1 = BiPoly::scalar(4) * BiPoly::h2();
    BiPoly y2 = BiPoly::scalar(6) * BiPoly::h2() * BiPoly::h2();
    BiPoly y3 = BiPoly::scalar(4) * BiPoly::h2() * BiPoly::h2() * BiPoly::h2();
    return {
        L.pow(4).top(),
        (L.pow(3) * e1).top(),
        (L.pow(3) * y1).top(),
        (L.pow(2) * e1 * e1).top(),
        (L.pow(2) * e1 * y1).top(),
        (L.pow(2) * e2).top(),
        (L.pow(2) * y1 * y1).top(),
        (L.pow(2) * y2).top(),
        (L * e1 * e1 * e1).top(),
        (L * e1 * e1 * y1).top(),
        (L * e1 * e2).top(),
        (L * e1 * y1 * y1).top(),
        (L * e1 * y2).top(),
        (L * e2 * y1).top(),
        (L * y1 * y1 * y1).top(),
        (L * y1 * y2).top(),
        (L * y3).top(),
    };
}

}  // namespace oracle
