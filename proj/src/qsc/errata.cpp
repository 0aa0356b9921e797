#include "qsc/errata.hpp"

#include "qsc/chern.hpp"
#include "qsc/hilbfn.hpp"
#include "qsc/invariants.hpp"

#include <stdexcept>

namespace qsc {

std::vector<ErrataEntry> errata_report() {
    std::vector<ErrataEntry> out;

    {
        // K^3 closed form.
        InvariantRecord type_f(5, 6, 1, 1, 1);
        InvariantRecord type_o(5, 12, 10, 2, 2);
        Rational f_corr = derived_invariants(type_f).K3;
        Rational o_corr = derived_invariants(type_o).K3;
        Rational f_printed = k3_printed_form(type_f);
        Rational o_printed = k3_printed_form(type_o);
        ErrataEntry e;
        e.id = "k3-closed-form";
        e.location = "threefold relations on Q^5, expression for K^3";
        e.printed_form = "K^3 = -(9/2)d^2 + (27/2)d + gd + 18(g-1) - 30chi_S - 24chi_X";
        e.corrected_form = "K^3 = (d/2 - 11) K.L^2 - 5 K^2.L - 24 chi_X  (cut the "
                           "codimension-two relation with K and use c1c2 = 24 chi)";
        e.evidence = {
            "projectivized tangent bundle of P^2 (d=6): K = -2L gives K^3 = -48; "
            "corrected form " + f_corr.str() + ", quoted form " + f_printed.str(),
            "degree-12 K3 scroll: resolution Chern classes give K^3 = 12; corrected "
            "form " + o_corr.str() + ", quoted form " + o_printed.str(),
        };
        if (f_corr != Rational(-48) || o_corr != Rational(12))
            throw std::logic_error("errata: K^3 correction lost its oracle");
        out.push_back(std::move(e));
    }
    {
        // Hilbert polynomial t^2 coefficient.
        InvariantRecord type_a(5, 2, 0, 1, 1);
        Rational corr = hilbert_polynomial(type_a).eval(1);
        Rational printed = hilbert_polynomial_printed_t2(type_a).eval(1);
        InvariantRecord type_o(5, 12, 10, 2, 2);
        Rational t2 = ideal_hilbert_polynomial(type_o).coeff(2);
        ErrataEntry e;
        e.id = "hilbert-t2-coefficient";
        e.location = "Hilbert polynomial of a threefold on Q^5, t^2 coefficient";
        e.printed_form = "[1/2 - (g-1)/2] t^2";
        e.corrected_form = "[d/2 - (g-1)/2] t^2  (= -K.L^2/4, the Riemann-Roch value)";
        e.evidence = {
            "quadric threefold section count gives chi(O(1)) = 5 for the (1,1,2) "
            "intersection; corrected form " + corr.str() + ", quoted form " +
                printed.str(),
            "the degree-12 ideal quintic needs t^2 coefficient 19/24; corrected form "
            "yields " + t2.str(),
        };
        if (corr != Rational(5) || t2 != Rational(19, 24))
            throw std::logic_error("errata: Hilbert t^2 correction lost its oracle");
        out.push_back(std::move(e));
    }
    {
        // c4 of the twisted spinor bundle on Q^5.
        ChernSeries s1 = catalog(5, CatalogBundle::Spinor, 1);
        Rational c4_at_1 = s1.at(4).h_normalized(4);
        ErrataEntry e;
        e.id = "spinor-c4";
        e.location = "Chern polynomial of S(l) on Q^5, degree-four coefficient";
        e.printed_form = "(l^4 - 2l^2 + 2l^2 - l) h^4  (the two quadratic terms cancel "
                         "as printed)";
        e.corrected_form = "(l^4 - 2l^3 + 2l^2 - l) h^4, the twist of c(S) = "
                           "1 - 2h + 2h^2 - h^3";
        e.evidence = {
            "c_4(S(1)) must vanish (S(1) is self-dual of rank four with c_4 = 0); "
            "corrected form gives " + c4_at_1.str() + " at l = 1, the printed form "
            "gives 1",
        };
        if (!c4_at_1.is_zero())
            throw std::logic_error("errata: spinor c4 correction lost its oracle");
        out.push_back(std::move(e));
    }
    {
        // Ruling pairing at the middle of an even quadric.
        ChernSeries sp = catalog(6, CatalogBundle::SpinorPrime, 1);
        Rational parity = porteous_d1(sp, 3, 4, 1, MiddlePairing::Parity).degree();
        Rational literal = porteous_d1(sp, 3, 4, 1, MiddlePairing::Kronecker).degree();
        ErrataEntry e;
        e.id = "ruling-pairing";
        e.location = "cohomology ring of Q^(2m), middle intersection numbers";
        e.printed_form = "lambda_i . lambda_j = delta_ij for every m";
        e.corrected_form = "lambda_i . lambda_j = delta_ij for m even and 1 - delta_ij "
                           "for m odd (rulings of Q^6 meet the opposite family)";
        e.evidence = {
            "the degeneracy class c_3(S'(1))^2 - c_2(S'(1)) c_4(S'(1)) on Q^6 must "
            "vanish; parity rule gives " + parity.str() + ", the literal rule gives " +
                literal.str(),
        };
        if (!parity.is_zero() || literal != Rational(4))
            throw std::logic_error("errata: pairing correction lost its oracle");
        out.push_back(std::move(e));
    }
    {
        // The two quoted Hilbert-function counts.
        Int h7 = hC_under_containment(7, 2);
        Int h8 = hC_under_containment(8, 2);
        ErrataEntry e;
        e.id = "hilbert-function-counts";
        e.location = "exclusion of the (30,91) and (36,136) candidate pairs";
        e.printed_form = "h_C(7) = 140 and h_C(8) = 289";
        e.corrected_form = "h_C(7) = B(11,4) - B(9,4) = 204 and h_C(8) = B(12,4) - "
                           "B(10,4) = 285";
        e.evidence = {
            "recomputed counts: " + h7.str() + " and " + h8.str() +
                "; the contradictions 204 > 120 and 285 > 153 hold either way",
        };
        if (h7 != 204 || h8 != 285)
            throw std::logic_error("errata: containment counts lost their oracle");
        out.push_back(std::move(e));
    }

    return out;
}

}  // namespace qsc
