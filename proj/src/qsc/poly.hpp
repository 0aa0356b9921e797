#pragma once

#include "qsc/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qsc {

// Dense univariate polynomial over Q. Coefficient i is the coefficient of x^i;
// the vector is kept trimmed so the leading coefficient is nonzero.
class RatPoly {
public:
    RatPoly() = default;
    RatPoly(Rational c);
    RatPoly(int c) : RatPoly(Rational(c)) {}
    static RatPoly variable();
    static RatPoly from_coeffs(std::vector<Rational> coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rational coeff(int i) const;
    const Rational& leading() const;
    bool is_constant() const { return c_.size() <= 1; }

    Rational eval(const Rational& x) const;

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    RatPoly& operator*=(const RatPoly& o) { return *this = *this * o; }
    friend RatPoly operator*(const Rational& s, RatPoly p);

    // Euclidean division; remainder has degree < deg(b).
    static std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
    // Monic gcd.
    static RatPoly gcd(RatPoly a, RatPoly b);

    RatPoly pow(unsigned e) const;

    friend bool operator==(const RatPoly&, const RatPoly&) = default;

    std::string str(const std::string& var) const;

private:
    std::vector<Rational> c_;
    void trim();
};

// B(x + shift, k) as a polynomial in x: (x+shift)(x+shift-1)...(x+shift-k+1) / k!.
RatPoly binom_poly(int shift, int k);

// Element of Q(x), kept reduced with monic denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(Rational c) : num_(std::move(c)), den_(Rational(1)) {}
    RatFunc(int c) : RatFunc(Rational(c)) {}
    RatFunc(RatPoly p) : num_(std::move(p)), den_(Rational(1)) {}
    RatFunc(RatPoly num, RatPoly den);
    static RatFunc variable() { return RatFunc(RatPoly::variable()); }

    const RatPoly& num() const { return num_; }
    const RatPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    // Valid when is_polynomial().
    RatPoly as_polynomial() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    std::string str(const std::string& var) const;

private:
    RatPoly num_;
    RatPoly den_;
    void normalize();
};

}  // namespace qsc
