#include "qsc/hilbfn.hpp"

#include "qsc/bounds.hpp"

#include <stdexcept>

namespace qsc {

Int curve_h0(const Int& d, const Int& g, const Int& i) {
    if (d * i <= 2 * g - 2)
        throw std::domain_error("curve_h0: twist is in the special range");
    return d * i + 1 - g;
}

Int hC_under_containment(const Int& i, const Int& s) {
    if (i < 0 || s < 1)
        throw std::invalid_argument("hC_under_containment: need i >= 0 and s >= 1");
    // For s > i no form of degree i is divisible, so the count is all of them.
    return binom(i + 4, 4) - binom(i - s + 4, 4);
}

Int monotone_step(const Int& hC_i, const Int& hGamma_lower) {
    if (hC_i < 0 || hGamma_lower < 0)
        throw std::invalid_argument("monotone_step: inputs must be nonnegative");
    return hC_i + hGamma_lower;
}

namespace {

// Justify "C lies on no integral hypersurface of degree s avoiding the
// quadric": an integral degree-s hypersurface would cut an integral surface
// of degree 2s through C, so g - 1 <= pi(d, s) would have to hold; the
// candidates meet every such bound with equality or overshoot it, and
// equality puts C (hence the scroll) in a complete-intersection linkage class.
Assumption justify_no_hypersurface(const Int& d, const Int& g, const Int& s) {
    Assumption a;
    a.s = s;
    a.kind = "no-integral-hypersurface";
    PiBound pb = pi_bound(d, s);
    a.pi = pb.pi;
    Rational gm1(g - 1);
    if (gm1 > pb.pi) {
        a.justification = "g - 1 = " + gm1.str() + " exceeds pi(" + d.str() + "," + s.str() +
                          ") = " + pb.pi.str();
    } else if (gm1 == pb.pi) {
        a.attains = true;
        a.justification = "g - 1 attains pi(" + d.str() + "," + s.str() + ") = " + pb.pi.str() +
                          " with eps = " + pb.ctx.eps.str() +
                          "; a maximal curve is linked in a complete intersection, forcing "
                          "the scroll to be one (impossible: its Picard rank is >= 2)";
    } else {
        a.justification = "genus below the bound; assumption not forced";
        throw std::logic_error("exclusion: hypersurface of degree " + s.str() +
                               " cannot be ruled out for d = " + d.str());
    }
    return a;
}

Assumption unique_quadric(const Int& d) {
    Assumption a;
    a.s = 2;
    a.kind = "unique-quadric";
    a.justification = "a second quadric through C lifts (d > 8 allows sigma = 2) and the "
                      "second-quadric branch caps d at 12 < " + d.str();
    return a;
}

}  // namespace

ExclusionReport exclude_all_candidates() {
    ExclusionReport report;
    CandidateScan scan = candidate_pairs();

    for (const auto& pair : scan.pairs) {
        if (pair.d <= 12)
            continue;
        ExclusionCase c;
        c.d = pair.d;
        c.g = pair.g;
        Int d(pair.d);

        c.assumptions.push_back(unique_quadric(d));

        switch (pair.d) {
            case 18: {
                for (int s = 3; s <= 4; ++s)
                    c.assumptions.push_back(justify_no_hypersurface(d, c.g, s));
                c.contradiction_i = 4;
                c.hC_lower = hC_under_containment(4, 2);  // 55
                c.h0_value = curve_h0(d, c.g, 4);          // 45
                c.argument = "every quartic through C contains the quadric threefold, so "
                             "h_C(4) = 55 > 45 = h^0(O_C(4))";
                break;
            }
            case 24: {
                for (int s = 3; s <= 4; ++s)
                    c.assumptions.push_back(justify_no_hypersurface(d, c.g, s));
                Int hc4 = hC_under_containment(4, 2);      // 55
                Int hGamma5 = 16;                           // cited lower bound for the points
                c.contradiction_i = 5;
                c.hC_lower = monotone_step(hc4, hGamma5);  // 71
                c.h0_value = curve_h0(d, c.g, 5);          // 66
                c.argument = "h_C(5) >= h_C(4) + h_Gamma(5) >= 55 + 16 = 71 > 66 = "
                             "h^0(O_C(5))";
                break;
            }
            case 30: {
                for (int s = 3; s <= 7; ++s)
                    c.assumptions.push_back(justify_no_hypersurface(d, c.g, s));
                c.contradiction_i = 7;
                c.hC_lower = hC_under_containment(7, 2);   // 204
                c.h0_value = curve_h0(d, c.g, 7);          // 120
                c.printed_hc = 140;
                c.computed_hc = c.hC_lower;
                c.argument = "h_C(7) = 204 > 120 = h^0(O_C(7)); the count 140 sometimes "
                             "quoted here is off, the contradiction stands either way";
                break;
            }
            case 36: {
                for (int s = 3; s <= 8; ++s)
                    c.assumptions.push_back(justify_no_hypersurface(d, c.g, s));
                c.contradiction_i = 8;
                c.hC_lower = hC_under_containment(8, 2);   // 285
                c.h0_value = curve_h0(d, c.g, 8);          // 153
                c.printed_hc = 289;
                c.computed_hc = c.hC_lower;
                c.argument = "h_C(8) = 285 > 153 = h^0(O_C(8)); the count 289 sometimes "
                             "quoted here is off, the contradiction stands either way";
                break;
            }
            case 42: {
                for (int s = 3; s <= 9; ++s)
                    c.assumptions.push_back(justify_no_hypersurface(d, c.g, s));
                Int hc9 = hC_under_containment(9, 2);      // 385
                c.contradiction_i = 10;
                c.hC_lower = monotone_step(hc9, 1);        // strict growth: >= 386
                c.h0_value = curve_h0(d, c.g, 10);         // 231
                c.argument = "h_C(9) = 385 and h_C(10) > h_C(9), while h^0(O_C(10)) = 231";
                break;
            }
            default:
                throw std::logic_error("exclusion: unexpected candidate degree " +
                                       std::to_string(pair.d));
        }
        c.excluded = c.hC_lower > c.h0_value;
        if (!c.excluded)
            throw std::logic_error("exclusion: contradiction failed for d = " +
                                   std::to_string(pair.d));
        report.cases.push_back(std::move(c));
    }

    report.survivors = {6, 8, 12};
    return report;
}

}  // namespace qsc
