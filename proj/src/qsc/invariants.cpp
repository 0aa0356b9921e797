#include "qsc/invariants.hpp"

#include <stdexcept>

namespace qsc {

InvariantRecord::InvariantRecord(int n_, Rational d_, Rational g_, Rational chi_s_,
                                 Rational chi_x_, std::optional<Rational> q_,
                                 std::optional<Rational> p_g_)
    : n(n_), d(std::move(d_)), g(std::move(g_)), chi_s(std::move(chi_s_)),
      chi_x(std::move(chi_x_)), q(std::move(q_)), p_g(std::move(p_g_)) {
    if (n >= 5 && d.is_integer() && d.num() % 2 != 0)
        throw std::invalid_argument("InvariantRecord: degree must be even on Q^n, n >= 5");
    if (q && p_g && chi_s != Rational(1) - *q + *p_g)
        throw std::invalid_argument("InvariantRecord: chi_S != 1 - q + p_g");
}

namespace {

void require_q5(const InvariantRecord& r, const char* who) {
    if (r.n != 5)
        throw std::domain_error(std::string(who) + ": defined for threefolds on Q^5");
}

}  // namespace

DerivedInvariants derived_invariants(const InvariantRecord& r) {
    require_q5(r, "derived_invariants");
    const Rational &d = r.d, &g = r.g, &cs = r.chi_s, &cx = r.chi_x;
    Rational gm1 = g - Rational(1);
    DerivedInvariants out;
    out.KL2 = Rational(2) * gm1 - Rational(2) * d;
    out.K2L = d * d / Rational(4) + Rational(3, 2) * d - Rational(8) * gm1 + Rational(6) * cs;
    out.c2L = -(d * d) / Rational(4) + Rational(5, 2) * d + Rational(2) * gm1 + Rational(6) * cs;
    out.c3 = d * d / Rational(4) - d / Rational(2) - Rational(10) * gm1 + g * d +
             Rational(24) * cs - Rational(30) * cx;
    out.K3 = (d / Rational(2) - Rational(11)) * out.KL2 - Rational(5) * out.K2L -
             Rational(24) * cx;
    return out;
}

Rational k3_printed_form(const InvariantRecord& r) {
    require_q5(r, "k3_printed_form");
    const Rational &d = r.d, &g = r.g;
    return Rational(-9, 2) * d * d + Rational(27, 2) * d + g * d +
           Rational(18) * (g - Rational(1)) - Rational(30) * r.chi_s - Rational(24) * r.chi_x;
}

RatPoly hilbert_polynomial(const InvariantRecord& r) {
    require_q5(r, "hilbert_polynomial");
    Rational gm1h = (r.g - Rational(1)) / Rational(2);
    return RatPoly::from_coeffs({r.chi_x, r.d / Rational(3) - gm1h + r.chi_s,
                                 r.d / Rational(2) - gm1h, r.d / Rational(6)});
}

RatPoly hilbert_polynomial_printed_t2(const InvariantRecord& r) {
    require_q5(r, "hilbert_polynomial_printed_t2");
    Rational gm1h = (r.g - Rational(1)) / Rational(2);
    return RatPoly::from_coeffs({r.chi_x, r.d / Rational(3) - gm1h + r.chi_s,
                                 Rational(1, 2) - gm1h, r.d / Rational(6)});
}

RatPoly quadric_chi_poly(int n) {
    return binom_poly(n + 1, n + 1) - binom_poly(n - 1, n + 1);
}

RatPoly ideal_hilbert_polynomial(const InvariantRecord& r) {
    require_q5(r, "ideal_hilbert_polynomial");
    return quadric_chi_poly(5) - hilbert_polynomial(r);
}

Rational chi_normal_bundle(const Rational& d, const Rational& g, const Rational& chi_s) {
    return Rational(-5, 4) * d * d + Rational(10) * d + Rational(10) * (g - Rational(1)) +
           Rational(5) * chi_s;
}

Rational chi_normal_bundle(const InvariantRecord& r) {
    require_q5(r, "chi_normal_bundle");
    return chi_normal_bundle(r.d, r.g, r.chi_s);
}

Int ci_dimension(int n, int i, int j) {
    if (i < 1 || j < i)
        throw std::invalid_argument("ci_dimension: need 1 <= i <= j");
    if (i == j)
        return 2 * (binom(n + 1 + i, n + 1) - binom(n + 1 + i - 2, n + 1) - 2);
    return (binom(n + 1 + i, n + 1) - binom(n + 1 + i - 2, n + 1) - 1) +
           (binom(n + j, n) - binom(n + j - 2, n) - 1);
}

Int ci_sectional_genus(int a, int b, int c) {
    if (a <= 0 || b <= 0 || c <= 0)
        throw std::invalid_argument("ci_sectional_genus: degrees must be positive");
    Int d = Int(a) * b * c;
    Int twice_gm1 = d * (a + b + c - 5);
    if (twice_gm1 % 2 != 0)
        throw std::domain_error("ci_sectional_genus: genus is not an integer");
    return twice_gm1 / 2 + 1;
}

bool self_intersection_check(const Rational& d, const Rational& L3, const Rational& n2L) {
    return n2L == d / Rational(2) * L3;
}

}  // namespace qsc
