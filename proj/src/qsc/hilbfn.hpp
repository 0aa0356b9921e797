#pragma once

#include "qsc/rational.hpp"

#include <string>
#include <vector>

namespace qsc {

// h^0(O_C(i)) = d*i + 1 - g for a nonspecial twist (d*i > 2g - 2). Refuses to
// guess in the special range.
Int curve_h0(const Int& d, const Int& g, const Int& i);

// Number of degree-i hypersurface sections of P^4 modulo those through C,
// when every hypersurface of degree i through C is the fixed degree-s
// hypersurface union one of degree i - s:  B(i+4,4) - B(i-s+4,4).
Int hC_under_containment(const Int& i, const Int& s);

// Hilbert functions grow at least by the general hyperplane section's:
// h_C(i+1) >= h_C(i) + h_Gamma(i+1).
Int monotone_step(const Int& hC_i, const Int& hGamma_lower);

struct Assumption {
    Int s;                    // hypersurface degree ruled out
    std::string kind;         // "unique-quadric" or "no-integral-hypersurface"
    Rational pi;              // the genus bound consulted (0 for s = 2)
    bool attains = false;     // g - 1 equals the bound: maximality forces a CI link
    std::string justification;
};

struct ExclusionCase {
    int d = 0;
    Int g;
    std::vector<Assumption> assumptions;
    Int contradiction_i;      // the twist where the count overshoots
    Int hC_lower;             // computed lower bound for h_C at that twist
    Int h0_value;             // h^0(O_C) there
    Int printed_hc = 0;       // a differing quoted value, when one exists
    Int computed_hc = 0;      // our recomputation of that quoted count
    std::string argument;
    bool excluded = false;
};

struct ExclusionReport {
    std::vector<ExclusionCase> cases;
    std::vector<int> survivors;  // {6, 8, 12}
};

// Eliminates the candidate (d, g) pairs with d > 12 by the Hilbert-function
// overcount: every high-degree hypersurface through the curve section contains
// the ambient quadric threefold, so h_C grows past h^0(O_C).
ExclusionReport exclude_all_candidates();

}  // namespace qsc
