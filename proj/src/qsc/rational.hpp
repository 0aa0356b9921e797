#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

namespace qsc {

using Int = boost::multiprecision::cpp_int;

// Exact binomial coefficient B(a,b). Total: returns 0 outside 0 <= b <= a.
Int binom(const Int& a, const Int& b);

// Rational number kept in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(Int v) : num_(std::move(v)), den_(1) {}
    Rational(Int num, Int den);

    // Accepts "7", "-3", "3/2", "-59/60".
    static Rational parse(const std::string& s);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    Int floor() const;
    Rational abs() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string str() const;

private:
    Int num_;
    Int den_;
    void normalize();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace qsc
