#pragma once

#include "qsc/rational.hpp"

#include <string>
#include <vector>

namespace qsc {

// Division data for a degree-d curve against surfaces of degree 2k on Q^3:
// n0 = floor((d-1)/2k) + 1 and d + eps = 0 (mod 2k) with 0 <= eps <= 2k-1.
// For d <= 2k(k-1) the roles pass to theta0 = n0 and eps' mod 2*theta0.
struct BoundContext {
    Int d, k;
    bool main_regime = true;  // d > 2k(k-1)
    Int n0;                   // n0 or theta0
    Int eps;                  // eps w.r.t. 2k (main) or eps' w.r.t. 2*theta0

    static BoundContext make(const Int& d, const Int& k);
};

// The genus bound g - 1 <= pi(d,k) - Xi for curves on an integral surface of
// degree 2k in Q^3, with the two epsilon branches and the Xi correction.
// In the d <= 2k(k-1) regime pi'(d,k) = pi(d, theta0) is returned, with the
// context recording the substitution.
struct PiBound {
    Rational pi;
    int xi = 0;
    BoundContext ctx;
    Int effective_k;  // k, or theta0 after the substitution

    Rational bound() const { return pi - Rational(xi); }
};

PiBound pi_bound(const Int& d, const Int& k);

// g - 1 <= d^2/4k + (k-3)d/2.
Rational easy_bound(const Int& d, const Int& k);

// g - 1 <= d^2/2k + (k-4)d/2 for curves on no surface of degree < 2k.
Rational not_on_small_surface_bound(const Int& d, const Int& k);

// Lifting criterion applicability: a hypersurface of degree sigma through the
// hyperplane section lifts to one through X when d > 2 sigma^2.
bool lifting_applicable(const Int& d, const Int& sigma);

struct SegreEval {
    Rational lhs, rhs;
    bool satisfied = false;
};

// The Segre-class inequality with no divisorial correction:
//   chi(O_S) >= (1/6s)[(d - 12s)(g-1) + (s/4 + 3/2)d^2 - (13/2) s d].
SegreEval segre_inequality(const Int& sigma, const Rational& d, const Rational& g,
                           const Rational& chi_s);

// Its sigma = 2 specialization under the surface-scroll substitutions,
// reduced to  -d(d+6)(d-12) >= 12(d+6) Le1D + d(d+6)(d-12) Df.
SegreEval segre_scroll_reduced(const Rational& d, const Rational& Le1D, const Rational& Df);

struct CandidatePair {
    int d = 0;
    Int g;
    Rational chi;
};

struct CandidateScan {
    std::vector<CandidatePair> pairs;  // d != 8 with integral g and chi
    bool d8_special = true;            // the singular-system slot
    std::vector<std::pair<int, std::string>> rejected;
};

// Even degrees 6 <= d <= 42 with g - 1 = d(d-6)/8 and
// chi = (d^3 - 18d^2 + 96d)/144 both integers.
CandidateScan candidate_pairs();

struct CascadeStep {
    std::string label;
    Int k;
    std::string rule;
    Rational exact_bound;  // bound on d (0 when the step is not a bound)
    Int degree_bound;      // floor
    std::string note;
};

struct CascadeTrace {
    std::vector<CascadeStep> steps;
    Int unconditional_bound;       // 42
    Int second_quadric_bound;      // 12
    std::string conclusion;
};

// The full descent over the degree 2k of the smallest surface containing the
// general curve section: k = 7 (not on smaller), 6, 5, 4, 3 via the easy
// bound, the lifting branch at k = 2 with the Segre inequality, and the
// complete-intersection contradiction at k = 1.
CascadeTrace degree_cascade();

}  // namespace qsc
