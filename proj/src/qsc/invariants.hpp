#pragma once

#include "qsc/poly.hpp"
#include "qsc/rational.hpp"

#include <array>
#include <optional>

namespace qsc {

// Basic numerical data of a codimension-two subvariety: degree, sectional
// genus, Euler characteristics of the structure sheaf of a surface section
// and of the variety itself.
struct InvariantRecord {
    int n = 5;
    Rational d, g, chi_s, chi_x;
    std::optional<Rational> q, p_g;

    InvariantRecord(int n_, Rational d_, Rational g_, Rational chi_s_, Rational chi_x_,
                    std::optional<Rational> q_ = std::nullopt,
                    std::optional<Rational> p_g_ = std::nullopt);
};

struct DerivedInvariants {
    Rational KL2, K2L, K3, c2L, c3;
};

// The threefold relations on Q^5:
//   K.L^2 = 2(g-1) - 2d
//   K^2.L = d^2/4 + 3d/2 - 8(g-1) + 6 chi_S
//   c2.L  = -d^2/4 + 5d/2 + 2(g-1) + 6 chi_S
//   c3    = d^2/4 - d/2 - 10(g-1) + g d + 24 chi_S - 30 chi_X
//   K^3   = (d/2 - 11) K.L^2 - 5 K^2.L - 24 chi_X
// K^3 comes from cutting the codimension-two double point relation with K
// and using c1 c2 = 24 chi(O_X); see k3_printed_form for the form it repairs.
DerivedInvariants derived_invariants(const InvariantRecord& r);

// The uncorrected closed form sometimes quoted for K^3; kept only as errata
// evidence (it fails both catalog cross-checks).
Rational k3_printed_form(const InvariantRecord& r);

// chi(O_X(t)) = (d/6) t^3 + [d/2 - (g-1)/2] t^2 + [d/3 - (g-1)/2 + chi_S] t + chi_X.
RatPoly hilbert_polynomial(const InvariantRecord& r);

// Variant with the uncorrected t^2 coefficient [1/2 - (g-1)/2]; errata evidence.
RatPoly hilbert_polynomial_printed_t2(const InvariantRecord& r);

// chi(O_{Q^n}(t)) = B(t+n+1, n+1) - B(t+n-1, n+1).
RatPoly quadric_chi_poly(int n);

// chi(I_X(t)) = chi(O_{Q^5}(t)) - chi(O_X(t)).
RatPoly ideal_hilbert_polynomial(const InvariantRecord& r);

// chi(N_{X,Q^5}) = -(5/4) d^2 + 10 d + 10 (g-1) + 5 chi_S; equals the
// Hilbert-scheme dimension at unobstructed points.
Rational chi_normal_bundle(const InvariantRecord& r);
Rational chi_normal_bundle(const Rational& d, const Rational& g, const Rational& chi_s);

// Hilbert-scheme dimension of complete intersections of type (2,i,j) inside
// the quadric: P(n;i,j) for i < j, Q(n;i) for i = j.
Int ci_dimension(int n, int i, int j);

// Sectional genus of a complete intersection (a,b,c) in P^(n+1):
// 2g - 2 = d (a + b + c - 5) with d = abc. Throws if degrees are invalid.
Int ci_sectional_genus(int a, int b, int c);

// Self-intersection identity n_2 = (d/2) L^2, checked on supplied numbers
// after cutting with L.
bool self_intersection_check(const Rational& d, const Rational& L3, const Rational& n2L);

}  // namespace qsc
