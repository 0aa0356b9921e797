#pragma once

#include "qsc/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qsc {

// Integral cohomology ring of a smooth quadric Q^n in the h / lambda basis.
//
// Odd n = 2m+1: each even cohomological degree has rank one, generated by
//   h^c                 for codim c = 0..m,
//   lambda * h^(c-m-1)  for codim c = m+1..n,
// with h^(m+1) = 2*lambda and top degree h^n of degree-map value 2.
//
// Even n = 2m: rank one below and above the middle, rank two at codim m with
// generators lambda1, lambda2 (the two rulings); h^m = lambda1 + lambda2 and
// lambda1 * h = lambda2 * h generates each codim > m.
//
// The middle self-pairing on Q^(2m) depends on the parity of m:
//   lambda_i . lambda_j = delta_ij       for m even,
//   lambda_i . lambda_j = 1 - delta_ij   for m odd.
// MiddlePairing::Kronecker forces delta_ij for every m; it exists only so the
// consequences of that convention can be demonstrated side by side (see the
// errata report), and it fails the degeneracy-locus vanishing on Q^6.
enum class MiddlePairing { Parity, Kronecker };

class ChowClass {
public:
    explicit ChowClass(int n);  // zero class on Q^n

    static ChowClass unit(int n) { return h_power(n, 0); }
    static ChowClass h_power(int n, int k);
    static ChowClass lambda(int n);                   // odd n only
    static ChowClass ruling(int n, int which);        // even n, which = 1 or 2

    int quadric_dim() const { return n_; }
    bool even() const { return n_ % 2 == 0; }
    int middle() const { return n_ / 2; }
    bool is_zero() const;

    // Coefficient of the rank-one generator at the given codimension.
    // For the middle of an even quadric use middle_pair().
    Rational coeff(int codim) const;
    std::pair<Rational, Rational> middle_pair() const;

    void set_coeff(int codim, Rational v);
    void set_middle(Rational a1, Rational a2);

    // Coefficient gamma with  class = gamma * h^codim  where it makes sense:
    // above the middle h^c equals twice the generator; at an even middle the
    // class must be balanced.
    Rational h_normalized(int codim) const;

    ChowClass cup(const ChowClass& o, MiddlePairing pairing = MiddlePairing::Parity) const;

    ChowClass operator-() const;
    ChowClass& operator+=(const ChowClass& o);
    ChowClass& operator-=(const ChowClass& o);
    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
    friend ChowClass operator*(const Rational& s, ChowClass c);
    friend bool operator==(const ChowClass&, const ChowClass&) = default;

    bool top_concentrated() const;
    Rational degree() const;  // requires top_concentrated()

    std::string str() const;

private:
    int n_;
    std::vector<Rational> a_;  // odd: slot per codim; even: middle uses two slots

    size_t slot(int codim) const;      // rank-one codims only
    void add_basis(int codim, const Rational& v);      // rank-one target
    void add_middle(int which, const Rational& v);     // even middle
    friend void cup_basis(const ChowClass& u, int cu, int su, const ChowClass& v, int cv,
                          int sv, MiddlePairing pairing, ChowClass& out);
};

struct BalancedCheck {
    bool balanced = false;
    bool degree_even = true;
    Rational degree;       // degree of the subvariety the class would represent
    std::string note;
};

// A codimension-two class on Q^n (n >= 5) must be an integer multiple of h^2,
// so its degree is even; a middle class on an even quadric must have equal
// ruling coefficients to extend to a hyperplane-section class.
BalancedCheck balanced_class_check(const ChowClass& cls);

}  // namespace qsc
