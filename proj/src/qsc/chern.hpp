#pragma once

#include "qsc/chow.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsc {

// Requested data the bundle catalog does not carry (Psi Chern classes,
// degeneracy shapes beyond the one implemented).
class unsupported_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Truncated total Chern class of a sheaf on Q^n: c_1..c_n as Chow classes,
// c_0 = 1 implicit. Classes beyond codimension n are cut off by the ring.
struct ChernSeries {
    int n = 0;
    int rank = 0;
    std::vector<ChowClass> c;  // c[i] is c_{i+1}

    static ChernSeries trivial(int n, int rank);
    const ChowClass& at(int i) const { return c[static_cast<size_t>(i - 1)]; }
    ChowClass& at(int i) { return c[static_cast<size_t>(i - 1)]; }
};

// Whitney product: ranks add, total classes multiply.
ChernSeries whitney(const ChernSeries& a, const ChernSeries& b);

// Multiplicative inverse of the total class (rank negates), used to peel a
// subsheaf off a resolution.
ChernSeries chern_inverse(const ChernSeries& a);

// Series of E(l) for E locally free of the given rank:
//   c_k(E(l)) = sum_i B(rank - i, k - i) (l h)^(k-i) c_i(E).
ChernSeries twist(const ChernSeries& a, int l);

// c_i(E^dual) = (-1)^i c_i(E).
ChernSeries dual(const ChernSeries& a);

enum class CatalogBundle {
    LineO,         // O(a) on any Q^n
    Spinor,        // S(l) on Q^5, rank 4
    SpinorPrime,   // S'(l) on Q^6, rank 4
    SpinorSecond,  // S''(l) on Q^6, rank 4 (swap the rulings in S')
    Cayley,        // C(l) on Q^5, rank 2, c(C) = 1 - h + h^2
};

ChernSeries catalog(int n, CatalogBundle which, int l);

// Formal direct sum of catalog terms appearing in ideal-sheaf presentations.
// Psi terms carry rank data only; their Chern classes are not in the catalog.
struct BundleTerm {
    enum class Kind { LineO, Spinor, SpinorPrime, SpinorSecond, Cayley, CayleyDual, Psi1, Psi3 };
    Kind kind;
    int twist = 0;  // the a of O(a) / the l of S(l), C(l), Cv(l)
    int mult = 1;
};

struct BundleSpec {
    std::vector<BundleTerm> terms;

    int rank() const;
    bool has_psi() const;
    int c1_h(int n) const;           // h-coefficient of c_1; throws on Psi
    ChernSeries chern(int n) const;  // throws on Psi

    // Grammar: term ('+' term)*; term = atom ('^' mult)?;
    // atom = O(a) | S(l) | S'(l) | S''(l) | C(l) | Cv(a) | Psi1 | Psi3.
    static BundleSpec parse(const std::string& s);
    std::string str() const;
};

// Chern data of I_X(l) extracted from a two-term resolution
//   0 -> E -> F -> I_X(l) -> 0,   l = c1(F) - c1(E), rank F - rank E = 1.
struct IdealChern {
    int n = 0;
    int twist_l = 0;
    ChernSeries series;
};

IdealChern ideal_chern_from_resolution(const BundleSpec& E, const BundleSpec& F, int n);

// The h-normalized coefficients gamma_1..gamma_5 of a total class on Q^5.
std::array<Rational, 5> ideal_gammas(const ChernSeries& s);

// Inversion of the twisted-ideal Chern relations on Q^5:
//   gamma_1 = l,  gamma_i = (1/2) (K + (5-l)L)^(i-2) . L^(5-i)  for i = 2..5.
struct GammaInvariants {
    Rational d, KL2, K2L, K3;
};

GammaInvariants gamma_invert(const ChernSeries& s, int l);

// Degeneracy class [D_1(phi)] = c_3(E)^2 - c_2(E) c_4(E) for a general
// morphism O^3 -> E with E of rank 4; only that shape is supported.
ChowClass porteous_d1(const ChernSeries& e, int source_rank, int target_rank, int k,
                      MiddlePairing pairing = MiddlePairing::Parity);

}  // namespace qsc
