#include "qsc/poly.hpp"

#include <stdexcept>

namespace qsc {

RatPoly::RatPoly(Rational c) {
    if (!c.is_zero())
        c_.push_back(std::move(c));
}

RatPoly RatPoly::variable() {
    RatPoly p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
}

RatPoly RatPoly::from_coeffs(std::vector<Rational> coeffs) {
    RatPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

void RatPoly::trim() {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rational RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size()))
        return Rational(0);
    return c_[static_cast<size_t>(i)];
}

const Rational& RatPoly::leading() const {
    if (c_.empty())
        throw std::domain_error("RatPoly: zero polynomial has no leading coefficient");
    return c_.back();
}

Rational RatPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::operator-() const {
    RatPoly p = *this;
    for (auto& c : p.c_)
        c = -c;
    return p;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero())
        return RatPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] += a.c_[i] * b.c_[j];
    return RatPoly::from_coeffs(std::move(c));
}

RatPoly operator*(const Rational& s, RatPoly p) {
    if (s.is_zero())
        return RatPoly();
    for (auto& c : p.c_)
        c *= s;
    return p;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero())
        throw std::domain_error("RatPoly: division by zero polynomial");
    RatPoly rem = a;
    std::vector<Rational> q;
    int db = b.degree();
    if (rem.degree() >= db)
        q.assign(static_cast<size_t>(rem.degree() - db) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= db) {
        int shift = rem.degree() - db;
        Rational f = rem.leading() / b.leading();
        q[static_cast<size_t>(shift)] = f;
        for (int i = 0; i <= db; ++i)
            rem.c_[static_cast<size_t>(i + shift)] -= f * b.c_[static_cast<size_t>(i)];
        rem.trim();
    }
    return {RatPoly::from_coeffs(std::move(q)), rem};
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    Rational inv = Rational(1) / a.leading();
    return inv * a;
}

RatPoly RatPoly::pow(unsigned e) const {
    RatPoly acc(Rational(1));
    RatPoly base = *this;
    while (e) {
        if (e & 1u)
            acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

std::string RatPoly::str(const std::string& var) const {
    if (is_zero())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c.is_zero())
            continue;
        bool first = out.empty();
        bool neg = c.is_negative();
        if (!first)
            out += neg ? " - " : " + ";
        else if (neg)
            out += "-";
        Rational a = c.abs();
        std::string mag;
        if (a == Rational(1) && i > 0)
            mag = "";
        else if (a.is_integer())
            mag = a.str();
        else
            mag = "(" + a.str() + ")";
        if (i == 0) {
            out += mag.empty() ? "1" : mag;
        } else {
            out += mag;
            out += var;
            if (i > 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

RatPoly binom_poly(int shift, int k) {
    if (k < 0)
        return RatPoly();
    RatPoly p{Rational(1)};
    RatPoly x = RatPoly::variable();
    Int fact = 1;
    for (int j = 0; j < k; ++j) {
        p *= x + RatPoly(Rational(shift - j));
        fact *= j + 1;
    }
    return Rational(Int(1), fact) * p;
}

RatFunc::RatFunc(RatPoly num, RatPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = RatPoly(Rational(1));
        return;
    }
    RatPoly g = RatPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = RatPoly::divmod(num_, g).first;
        den_ = RatPoly::divmod(den_, g).first;
    }
    Rational inv = Rational(1) / den_.leading();
    num_ = inv * num_;
    den_ = inv * den_;
}

RatPoly RatFunc::as_polynomial() const {
    if (!is_polynomial())
        throw std::domain_error("RatFunc: not a polynomial");
    Rational inv = Rational(1) / den_.coeff(0);
    return inv * num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero())
        throw std::domain_error("RatFunc: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::string RatFunc::str(const std::string& var) const {
    if (is_polynomial())
        return as_polynomial().str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

}  // namespace qsc
