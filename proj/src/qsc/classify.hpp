#pragma once

#include "qsc/chern.hpp"
#include "qsc/invariants.hpp"
#include "qsc/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsc {

struct HilbDim {
    enum class Kind { Value, P, Q } kind = Kind::Value;
    int i = 0, j = 0;      // the (i,j) of P(n;i,j) / the i of Q(n;i)
    Int value;             // the dimension at the row's n
    std::string formula_ref() const;
};

// One row of the classification catalog.
struct TypeEntry {
    std::string label;            // "A".."N", "O"
    int n = 5;                    // quadric dimension of the row
    bool n_generic = false;       // complete intersections exist for every n >= 5
    int d = 0;
    std::string description;
    std::optional<std::array<int, 3>> ci;  // complete-intersection degrees
    Int g, q, p_g;
    Rational chi_s, chi_x;
    HilbDim hilb;
    std::string hilb_structure;   // integral/rational/unirational/components...
    std::string presentation_E, presentation_F;
    std::string surface_type;     // surface-section tag
    std::string scroll_base;      // for the scroll rows
    std::string notes;
};

const std::vector<TypeEntry>& catalog();
const TypeEntry& catalog_type(const std::string& label);

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct VerifyReport {
    std::string label;
    std::vector<CheckResult> checks;
    bool ok() const;
};

// Runs every check applicable to the row: degree parity, chi_S coherence,
// complete-intersection genus and Hilbert dimension, normal-bundle dimension,
// presentation Chern consistency, scroll invariants.
VerifyReport verify_type(const TypeEntry& e);

struct LiaisonLink {
    std::string source;
    int a = 0, b = 0;
    std::string target;
};

// The residuation table: a variety of the source type linked in a complete
// intersection of type (a,b) on Q^5 to one of the target type.
const std::vector<LiaisonLink>& liaison_links();

struct LiaisonCheck {
    LiaisonLink link;
    Rational d_target, g_target;  // computed from the source row
    bool ok = false;
};

// d' = 2ab - d and g - g' = (1/2)(d - d')(a + b - 3), checked against the
// target row.
LiaisonCheck liaison_check(const LiaisonLink& l);

enum class TableScope { D10, Scrolls };

struct TableArtifact {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
    std::vector<bool> verified;  // per row
    bool all_verified() const;
};

TableArtifact classification_table(TableScope scope);

// Auxiliary numerical constraints satisfied by the degree-12 scroll over a
// K3 surface: cohomology vanishing, the quintic's beta relations, monad
// shapes, spinor Euler characteristics, and their arithmetic self-checks.
struct TypeOConstraints {
    RatPoly ideal_chi;                  // chi(I_X(t))
    std::vector<std::string> cohomology_vanishing;
    Rational beta02_minus_beta12;       // chi(I(2)) = 0
    Rational beta03_minus_beta13;       // chi(I(3)) = 3
    std::string beta_dichotomy;
    std::string monad_ii2, monad_i3, resolution;
    RatPoly chi_spinor;                 // chi(S(t)) = (1/15) t(t+1)(t+2)(t+3)(t+4)
    RatPoly chi_spinor_restricted;      // chi(S|X(t)) = 8t^3 - 6t^2 + 7
    Rational sigma4_minus_sigma3;       // chi(I tensor S(-1)) = 7
    int psi3_rank = 26;
    int beta13_max = 21;                // rank Psi3 - 5
    bool self_checks_ok = false;
    std::vector<std::string> self_checks;
};

TypeOConstraints typeO_constraints();

}  // namespace qsc
