#include "qsc/chow.hpp"

#include <stdexcept>

namespace qsc {

namespace {

int check_dim(int n) {
    if (n < 2)
        throw std::invalid_argument("ChowClass: quadric dimension must be at least 2");
    return n;
}

}  // namespace

ChowClass::ChowClass(int n) : n_(check_dim(n)) {
    a_.assign(static_cast<size_t>(n_) + (even() ? 2 : 1), Rational(0));
}

size_t ChowClass::slot(int codim) const {
    if (codim < 0 || codim > n_)
        throw std::out_of_range("ChowClass: codimension out of range");
    if (!even())
        return static_cast<size_t>(codim);
    if (codim == middle())
        throw std::invalid_argument("ChowClass: middle of an even quadric has two generators");
    return static_cast<size_t>(codim < middle() ? codim : codim + 1);
}

ChowClass ChowClass::h_power(int n, int k) {
    ChowClass c(n);
    if (k < 0 || k > n)
        throw std::out_of_range("ChowClass: h power out of range");
    int m = c.middle();
    if (c.even()) {
        if (k < m)
            c.a_[static_cast<size_t>(k)] = 1;
        else if (k == m)
            c.set_middle(1, 1);  // h^m = lambda1 + lambda2
        else
            c.a_[static_cast<size_t>(k) + 1] = 2;  // h^k = 2 * lambda_i h^(k-m)
    } else {
        c.a_[static_cast<size_t>(k)] = (k <= m) ? 1 : 2;  // h^(m+1) = 2 lambda
    }
    return c;
}

ChowClass ChowClass::lambda(int n) {
    ChowClass c(n);
    if (c.even())
        throw std::invalid_argument("ChowClass: lambda lives on odd quadrics; use ruling()");
    c.a_[static_cast<size_t>(c.middle()) + 1] = 1;
    return c;
}

ChowClass ChowClass::ruling(int n, int which) {
    ChowClass c(n);
    if (!c.even())
        throw std::invalid_argument("ChowClass: rulings live on even quadrics; use lambda()");
    if (which != 1 && which != 2)
        throw std::invalid_argument("ChowClass: ruling index must be 1 or 2");
    c.a_[static_cast<size_t>(c.middle()) + (which - 1)] = 1;
    return c;
}

bool ChowClass::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero())
            return false;
    return true;
}

Rational ChowClass::coeff(int codim) const {
    return a_[slot(codim)];
}

std::pair<Rational, Rational> ChowClass::middle_pair() const {
    if (!even())
        throw std::invalid_argument("ChowClass: middle_pair on an odd quadric");
    size_t m = static_cast<size_t>(middle());
    return {a_[m], a_[m + 1]};
}

void ChowClass::set_coeff(int codim, Rational v) {
    a_[slot(codim)] = std::move(v);
}

void ChowClass::set_middle(Rational a1, Rational a2) {
    if (!even())
        throw std::invalid_argument("ChowClass: set_middle on an odd quadric");
    size_t m = static_cast<size_t>(middle());
    a_[m] = std::move(a1);
    a_[m + 1] = std::move(a2);
}

Rational ChowClass::h_normalized(int codim) const {
    int m = middle();
    if (even() && codim == m) {
        auto [a1, a2] = middle_pair();
        if (a1 != a2)
            throw std::domain_error("ChowClass: unbalanced middle class is no h power");
        return a1;
    }
    Rational c = coeff(codim);
    return codim > m ? c / Rational(2) : c;
}

void ChowClass::add_basis(int codim, const Rational& v) {
    a_[slot(codim)] += v;
}

void ChowClass::add_middle(int which, const Rational& v) {
    a_[static_cast<size_t>(middle()) + (which - 1)] += v;
}

// Product of two basis generators, accumulated into out.
void cup_basis(const ChowClass& u, int cu, int su, const ChowClass& v, int cv, int sv,
               MiddlePairing pairing, ChowClass& out) {
    int n = u.n_;
    int m = u.middle();
    int c = cu + cv;
    if (c > n)
        return;
    Rational f = u.a_[static_cast<size_t>(su)] * v.a_[static_cast<size_t>(sv)];
    if (f.is_zero())
        return;

    if (!u.even()) {
        bool pu = cu > m, pv = cv > m;  // generator contains the lambda factor
        if (pu && pv)
            return;  // lambda^2 lies beyond the top degree
        if (!pu && !pv) {
            if (c <= m)
                out.add_basis(c, f);
            else
                out.add_basis(c, Rational(2) * f);  // h^(m+1) = 2 lambda
        } else {
            out.add_basis(c, f);
        }
        return;
    }

    // Even quadric. Which side of the middle is each factor on?
    auto kind = [m](int codim) { return codim < m ? 0 : (codim == m ? 1 : 2); };
    int ku = kind(cu), kv = kind(cv);
    if (ku == 2 && kv >= 1)
        return;  // codim above 2m
    if (ku >= 1 && kv == 2)
        return;
    if (ku == 1 && kv == 1) {
        // ruling pairing at the top degree
        int i = su - m, j = sv - m;  // 0 or 1
        bool diagonal = (i == j);
        bool meet;
        if (pairing == MiddlePairing::Kronecker)
            meet = diagonal;
        else
            meet = (m % 2 == 0) ? diagonal : !diagonal;
        if (meet)
            out.add_basis(n, f);
        return;
    }
    if (ku == 1 || kv == 1) {
        if (c == m) {
            // Scalar times a ruling class stays at the middle.
            int which = (ku == 1 ? su : sv) - m + 1;
            out.add_middle(which, f);
        } else {
            // h^a * lambda_i with a >= 1: the ruling identity is lost.
            out.add_basis(c, f);
        }
        return;
    }
    // both pure h powers or upper generators; at most one upper
    if (c < m) {
        out.add_basis(c, f);
    } else if (c == m) {
        out.add_middle(1, f);
        out.add_middle(2, f);  // h^m = lambda1 + lambda2
    } else {
        bool upper = (cu > m) || (cv > m);
        out.add_basis(c, upper ? f : Rational(2) * f);
    }
}

ChowClass ChowClass::cup(const ChowClass& o, MiddlePairing pairing) const {
    if (n_ != o.n_)
        throw std::invalid_argument("ChowClass: cup of classes on different quadrics");
    ChowClass out(n_);
    int m = middle();
    auto codims = [this, m](size_t s) {
        if (!even())
            return static_cast<int>(s);
        if (s == static_cast<size_t>(m) || s == static_cast<size_t>(m) + 1)
            return m;
        return static_cast<int>(s) < m ? static_cast<int>(s) : static_cast<int>(s) - 1;
    };
    for (size_t su = 0; su < a_.size(); ++su) {
        if (a_[su].is_zero())
            continue;
        for (size_t sv = 0; sv < o.a_.size(); ++sv) {
            if (o.a_[sv].is_zero())
                continue;
            cup_basis(*this, codims(su), static_cast<int>(su), o, codims(sv),
                      static_cast<int>(sv), pairing, out);
        }
    }
    return out;
}

ChowClass ChowClass::operator-() const {
    ChowClass c = *this;
    for (auto& v : c.a_)
        v = -v;
    return c;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
    if (n_ != o.n_)
        throw std::invalid_argument("ChowClass: sum of classes on different quadrics");
    for (size_t i = 0; i < a_.size(); ++i)
        a_[i] += o.a_[i];
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
    if (n_ != o.n_)
        throw std::invalid_argument("ChowClass: difference of classes on different quadrics");
    for (size_t i = 0; i < a_.size(); ++i)
        a_[i] -= o.a_[i];
    return *this;
}

ChowClass operator*(const Rational& s, ChowClass c) {
    for (auto& v : c.a_)
        v *= s;
    return c;
}

bool ChowClass::top_concentrated() const {
    for (size_t i = 0; i + 1 < a_.size(); ++i)
        if (!a_[i].is_zero())
            return false;
    return true;
}

Rational ChowClass::degree() const {
    if (!top_concentrated())
        throw std::domain_error("ChowClass: degree of a class not concentrated in top degree");
    return a_.back();
}

std::string ChowClass::str() const {
    if (is_zero())
        return "0";
    std::string out;
    auto append = [&out](const Rational& c, const std::string& name) {
        if (c.is_zero())
            return;
        bool first = out.empty();
        bool neg = c.is_negative();
        if (!first)
            out += neg ? " - " : " + ";
        else if (neg)
            out += "-";
        Rational amag = c.abs();
        std::string mag;
        if (amag == Rational(1) && !name.empty())
            mag = "";
        else if (amag.is_integer())
            mag = amag.str();
        else
            mag = "(" + amag.str() + ")";
        if (name.empty())
            out += mag.empty() ? "1" : mag;
        else
            out += mag + name;
    };
    auto power_name = [](const std::string& base, int e) {
        if (e == 0)
            return std::string();
        if (e == 1)
            return base;
        return base + "^" + std::to_string(e);
    };
    int m = middle();
    for (int c = 0; c <= n_; ++c) {
        if (even() && c == m) {
            auto [a1, a2] = middle_pair();
            append(a1, "Λ1");
            append(a2, "Λ2");
            continue;
        }
        Rational v = coeff(c);
        if (v.is_zero())
            continue;
        std::string name;
        if (!even()) {
            if (c <= m)
                name = power_name("h", c);
            else
                name = "Λ" + power_name("h", c - m - 1);
        } else {
            if (c < m)
                name = power_name("h", c);
            else
                name = "Λ1" + power_name("h", c - m);
        }
        append(v, name);
    }
    return out;
}

BalancedCheck balanced_class_check(const ChowClass& cls) {
    BalancedCheck r;
    int n = cls.quadric_dim();
    if (cls.even()) {
        auto [a1, a2] = cls.middle_pair();
        if (!a1.is_zero() || !a2.is_zero()) {
            r.balanced = (a1 == a2);
            r.degree = a1 + a2;
            r.degree_even = r.balanced;  // balanced middle class = (d/2)(L1 + L2)
            r.note = r.balanced ? "middle class is (d/2)(Λ1+Λ2)"
                                : "ruling coefficients differ; not a hyperplane-section class";
            return r;
        }
    }
    // General codimension-two class: must be an integer multiple of h^2.
    Rational g = cls.coeff(2);
    r.degree = Rational(2) * g;  // deg(g h^2) against h^(n-2) uses h^n = 2
    r.balanced = g.is_integer();
    if (n >= 5) {
        r.degree_even = r.degree.is_integer() && (r.degree.num() % 2 == 0);
        r.note = "codimension-two classes on Q^n, n >= 5, have even degree";
    }
    return r;
}

}  // namespace qsc
