#pragma once

#include "qsc/linalg.hpp"
#include "qsc/poly.hpp"
#include "qsc/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace qsc {

// Intersection numbers of a threefold scroll X = P(E) -> Y over a surface,
// in the fixed order (L^3, L^2 e1, L^2 y1, L e1^2, L e1 y1, L y1^2, L e2, L y2).
// The tautological cut L^3 - L^2 e1 + L e2 = 0 must hold exactly.
template <class T>
struct ScrollVec {
    std::array<T, 8> v;

    const T& L3() const { return v[0]; }
    const T& L2e1() const { return v[1]; }
    const T& L2y1() const { return v[2]; }
    const T& Le1sq() const { return v[3]; }
    const T& Le1y1() const { return v[4]; }
    const T& Ly1sq() const { return v[5]; }
    const T& Le2() const { return v[6]; }
    const T& Ly2() const { return v[7]; }

    T tautological_residual() const { return L3() - L2e1() + Le2(); }
};

using ScrollSolution = ScrollVec<Rational>;
using ScrollSolutionSym = ScrollVec<RatPoly>;

extern const std::array<const char*, 8> kScrollUnknownNames;

// The 8x8 system of the surface-scroll analysis: rows 1-3 cut the
// codimension-two double point relation with L, e1, y1; row 4 is the
// codimension-three relation; rows 5-7 cut the tautological relation with
// L, e1, y1; row 8 pins L^3 = d.
Mat<Rational> surface_scroll_matrix(const Rational& d);
std::vector<Rational> surface_scroll_rhs(const Rational& d);
Mat<RatFunc> surface_scroll_matrix_sym();
std::vector<RatFunc> surface_scroll_rhs_sym();

// det M = 72 - 9d.
RatPoly surface_scroll_det_sym();

// Closed-form solution for d != 8:
// (d, 3d/2, (d/4)(12-d), 3d/2, (d/4)(12-d), d^3/24 - d^2 + 6d, d/2, d^3/24 - d^2/2 + 2d).
ScrollSolutionSym surface_scroll_solution_sym();
ScrollSolution surface_scroll_solve(const Rational& d);  // throws for d = 8

// At d = 8 the determinant vanishes and the solutions form a line:
// (8, 36 - 9t/2, 24 - 3t, 36 - 9t/2, 24 - 3t, 16 - 2t, 28 - 9t/2, t).
ScrollSolutionSym d8_family_sym();
ScrollSolution d8_family(const Rational& t);

// Invariants forced on a surface scroll of degree d != 8.
struct ScrollInvariants {
    Rational d;
    Rational g;         // g - 1 = d(d-6)/8
    Rational chi;       // chi(O_X) = chi(O_Y) = chi(O_S) = (d^3 - 18d^2 + 96d)/144
    Rational e1_sq;     // 3d/2
    Rational e2_deg;    // d/2
    Rational ky_coeff;  // K_Y ~ ky_coeff * e1, ky_coeff = (d-12)/6
};

ScrollInvariants scroll_invariants(const Rational& d);

enum class FiberCase { ThreefoldOverCurve, FourfoldOverSurface };

// Cut the codimension-two double point relation with a linear-space fiber and
// solve the resulting linear equation in d. Curve case: n = 5 or 6; surface
// case is the P^2-fibered fourfold on Q^6.
Rational fiber_cut_degree(FiberCase c, int n);

// The 20 x 17 homogeneous system governing fourfolds fibered in lines over a
// threefold on Q^6 (unknowns are the degree-four intersection monomials).
extern const std::array<const char*, 17> kFourfoldUnknownNames;
Mat<RatFunc> fourfold_system_sym();
Mat<Rational> fourfold_system_at(const Rational& d);

struct FourfoldScan {
    int dmax = 0;
    size_t generic_rank = 0;           // rank over Q(d); 17 means only x = 0
    std::vector<int> solvable;         // even d admitting a solution with L^4 = d
    LinSolution<Rational> d4_solution; // solution set at d = 4 with L^4 = 4 adjoined
};

FourfoldScan fourfold_over_threefold_scan(int dmax);

enum class BaseSurface { P2, Q2, K3 };

struct BaseClassification {
    int d = 0;
    BaseSurface base = BaseSurface::P2;
    std::string base_name;
    // Supporting numbers, valid for the relevant case.
    Rational ky_coeff;   // d != 8
    Rational ky_sq;      // K_Y^2
    Rational chi;        // chi(O_Y)
    Rational t;          // d = 8: the parameter value, = b_2(Q^2) = 4
    Rational e2_deg;     // d = 8: deg e2 at that t
    Rational g;          // d = 8: sectional genus at that t
    std::string argument;
};

BaseClassification base_surface_classify(int d);

}  // namespace qsc
