#include "qsc/chern.hpp"

#include <cctype>
#include <stdexcept>

namespace qsc {

ChernSeries ChernSeries::trivial(int n, int rank) {
    ChernSeries s;
    s.n = n;
    s.rank = rank;
    s.c.assign(static_cast<size_t>(n), ChowClass(n));
    return s;
}

ChernSeries whitney(const ChernSeries& a, const ChernSeries& b) {
    if (a.n != b.n)
        throw std::invalid_argument("whitney: series on different quadrics");
    ChernSeries out = ChernSeries::trivial(a.n, a.rank + b.rank);
    for (int k = 1; k <= a.n; ++k) {
        ChowClass acc = a.at(k) + b.at(k);  // i = 0 and i = k terms
        for (int i = 1; i < k; ++i)
            acc += a.at(i).cup(b.at(k - i));
        out.at(k) = acc;
    }
    return out;
}

ChernSeries chern_inverse(const ChernSeries& a) {
    ChernSeries out = ChernSeries::trivial(a.n, -a.rank);
    for (int k = 1; k <= a.n; ++k) {
        ChowClass acc = -a.at(k);
        for (int i = 1; i < k; ++i)
            acc -= a.at(i).cup(out.at(k - i));
        out.at(k) = acc;
    }
    return out;
}

ChernSeries twist(const ChernSeries& a, int l) {
    if (l == 0)
        return a;
    ChernSeries out = ChernSeries::trivial(a.n, a.rank);
    for (int k = 1; k <= a.n; ++k) {
        ChowClass acc(a.n);
        for (int i = 0; i <= k; ++i) {
            Rational w = Rational(binom(Int(a.rank - i), Int(k - i)));
            if (w.is_zero())
                continue;
            Rational lp(1);
            for (int j = 0; j < k - i; ++j)
                lp *= Rational(l);
            Rational factor = w * lp;
            if (factor.is_zero())
                continue;
            ChowClass term =
                (i == 0) ? ChowClass::h_power(a.n, k)
                         : a.at(i).cup(ChowClass::h_power(a.n, k - i));
            acc += factor * term;
        }
        out.at(k) = acc;
    }
    return out;
}

ChernSeries dual(const ChernSeries& a) {
    ChernSeries out = a;
    for (int k = 1; k <= a.n; k += 2)
        out.at(k) = -out.at(k);
    return out;
}

ChernSeries catalog(int n, CatalogBundle which, int l) {
    switch (which) {
        case CatalogBundle::LineO: {
            ChernSeries s = ChernSeries::trivial(n, 1);
            if (l != 0)
                s.at(1) = Rational(l) * ChowClass::h_power(n, 1);
            return s;
        }
        case CatalogBundle::Spinor: {
            if (n != 5)
                throw std::invalid_argument("catalog: S(l) lives on Q^5");
            ChernSeries s = ChernSeries::trivial(5, 4);
            s.at(1) = Rational(-2) * ChowClass::h_power(5, 1);
            s.at(2) = Rational(2) * ChowClass::h_power(5, 2);
            s.at(3) = Rational(-1) * ChowClass::h_power(5, 3);
            return twist(s, l);
        }
        case CatalogBundle::SpinorPrime:
        case CatalogBundle::SpinorSecond: {
            if (n != 6)
                throw std::invalid_argument("catalog: S'(l), S''(l) live on Q^6");
            ChernSeries s = ChernSeries::trivial(6, 4);
            s.at(1) = Rational(-2) * ChowClass::h_power(6, 1);
            s.at(2) = Rational(2) * ChowClass::h_power(6, 2);
            ChowClass c3(6);
            if (which == CatalogBundle::SpinorPrime)
                c3.set_middle(Rational(-2), Rational(0));
            else
                c3.set_middle(Rational(0), Rational(-2));
            s.at(3) = c3;
            return twist(s, l);
        }
        case CatalogBundle::Cayley: {
            if (n != 5)
                throw std::invalid_argument("catalog: Cayley bundles live on Q^5");
            ChernSeries s = ChernSeries::trivial(5, 2);
            s.at(1) = Rational(-1) * ChowClass::h_power(5, 1);
            s.at(2) = ChowClass::h_power(5, 2);
            return twist(s, l);
        }
    }
    throw std::logic_error("catalog: unknown bundle");
}

int BundleSpec::rank() const {
    int r = 0;
    for (const auto& t : terms) {
        int one = 0;
        switch (t.kind) {
            case BundleTerm::Kind::LineO: one = 1; break;
            case BundleTerm::Kind::Spinor:
            case BundleTerm::Kind::SpinorPrime:
            case BundleTerm::Kind::SpinorSecond: one = 4; break;
            case BundleTerm::Kind::Cayley:
            case BundleTerm::Kind::CayleyDual: one = 2; break;
            case BundleTerm::Kind::Psi1: one = 6; break;
            case BundleTerm::Kind::Psi3: one = 26; break;
        }
        r += one * t.mult;
    }
    return r;
}

bool BundleSpec::has_psi() const {
    for (const auto& t : terms)
        if (t.kind == BundleTerm::Kind::Psi1 || t.kind == BundleTerm::Kind::Psi3)
            return true;
    return false;
}

namespace {

ChernSeries term_chern(const BundleTerm& t, int n) {
    switch (t.kind) {
        case BundleTerm::Kind::LineO: return catalog(n, CatalogBundle::LineO, t.twist);
        case BundleTerm::Kind::Spinor: return catalog(n, CatalogBundle::Spinor, t.twist);
        case BundleTerm::Kind::SpinorPrime: return catalog(n, CatalogBundle::SpinorPrime, t.twist);
        case BundleTerm::Kind::SpinorSecond:
            return catalog(n, CatalogBundle::SpinorSecond, t.twist);
        case BundleTerm::Kind::Cayley: return catalog(n, CatalogBundle::Cayley, t.twist);
        case BundleTerm::Kind::CayleyDual:
            // C has rank two and c_1(C) = -1, so Cv(a) = C(1+a).
            return catalog(n, CatalogBundle::Cayley, 1 + t.twist);
        default:
            throw unsupported_error("BundleSpec: Psi terms carry no Chern data");
    }
}

}  // namespace

ChernSeries BundleSpec::chern(int n) const {
    ChernSeries acc = ChernSeries::trivial(n, 0);
    for (const auto& t : terms) {
        ChernSeries one = term_chern(t, n);
        for (int i = 0; i < t.mult; ++i)
            acc = whitney(acc, one);
    }
    return acc;
}

int BundleSpec::c1_h(int n) const {
    ChernSeries s = chern(n);
    return static_cast<int>(s.at(1).h_normalized(1).num());
}

BundleSpec BundleSpec::parse(const std::string& s) {
    BundleSpec spec;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    };
    auto parse_int = [&]() -> int {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+'))
            ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (start == i || (i - start == 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            throw std::invalid_argument("BundleSpec: expected integer in '" + s + "'");
        return std::stoi(s.substr(start, i - start));
    };
    auto parse_paren_int = [&]() -> int {
        skip_ws();
        if (i >= s.size() || s[i] != '(')
            throw std::invalid_argument("BundleSpec: expected '(' in '" + s + "'");
        ++i;
        int v = parse_int();
        skip_ws();
        if (i >= s.size() || s[i] != ')')
            throw std::invalid_argument("BundleSpec: expected ')' in '" + s + "'");
        ++i;
        return v;
    };
    while (true) {
        skip_ws();
        if (i >= s.size())
            throw std::invalid_argument("BundleSpec: empty term in '" + s + "'");
        BundleTerm t;
        if (s.compare(i, 4, "Psi1") == 0) {
            t.kind = BundleTerm::Kind::Psi1;
            i += 4;
        } else if (s.compare(i, 4, "Psi3") == 0) {
            t.kind = BundleTerm::Kind::Psi3;
            i += 4;
        } else if (s[i] == 'O') {
            ++i;
            t.kind = BundleTerm::Kind::LineO;
            skip_ws();
            t.twist = (i < s.size() && s[i] == '(') ? parse_paren_int() : 0;
        } else if (s.compare(i, 2, "Cv") == 0) {
            i += 2;
            t.kind = BundleTerm::Kind::CayleyDual;
            t.twist = parse_paren_int();
        } else if (s[i] == 'C') {
            ++i;
            t.kind = BundleTerm::Kind::Cayley;
            t.twist = parse_paren_int();
        } else if (s.compare(i, 3, "S''") == 0) {
            i += 3;
            t.kind = BundleTerm::Kind::SpinorSecond;
            t.twist = parse_paren_int();
        } else if (s.compare(i, 2, "S'") == 0) {
            i += 2;
            t.kind = BundleTerm::Kind::SpinorPrime;
            t.twist = parse_paren_int();
        } else if (s[i] == 'S') {
            ++i;
            t.kind = BundleTerm::Kind::Spinor;
            t.twist = parse_paren_int();
        } else {
            throw std::invalid_argument("BundleSpec: unknown term in '" + s + "'");
        }
        skip_ws();
        if (i < s.size() && s[i] == '^') {
            ++i;
            t.mult = parse_int();
            if (t.mult <= 0)
                throw std::invalid_argument("BundleSpec: multiplicity must be positive");
        }
        spec.terms.push_back(t);
        skip_ws();
        if (i >= s.size())
            break;
        if (s[i] != '+')
            throw std::invalid_argument("BundleSpec: expected '+' in '" + s + "'");
        ++i;
    }
    return spec;
}

std::string BundleSpec::str() const {
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty())
            out += " + ";
        switch (t.kind) {
            case BundleTerm::Kind::LineO:
                out += t.twist == 0 ? "O" : "O(" + std::to_string(t.twist) + ")";
                break;
            case BundleTerm::Kind::Spinor: out += "S(" + std::to_string(t.twist) + ")"; break;
            case BundleTerm::Kind::SpinorPrime:
                out += "S'(" + std::to_string(t.twist) + ")";
                break;
            case BundleTerm::Kind::SpinorSecond:
                out += "S''(" + std::to_string(t.twist) + ")";
                break;
            case BundleTerm::Kind::Cayley: out += "C(" + std::to_string(t.twist) + ")"; break;
            case BundleTerm::Kind::CayleyDual: out += "Cv(" + std::to_string(t.twist) + ")"; break;
            case BundleTerm::Kind::Psi1: out += "Psi1"; break;
            case BundleTerm::Kind::Psi3: out += "Psi3"; break;
        }
        if (t.mult != 1)
            out += "^" + std::to_string(t.mult);
    }
    return out;
}

IdealChern ideal_chern_from_resolution(const BundleSpec& E, const BundleSpec& F, int n) {
    if (E.has_psi() || F.has_psi())
        throw unsupported_error("ideal_chern_from_resolution: Psi terms carry no Chern data");
    if (F.rank() - E.rank() != 1)
        throw std::invalid_argument("ideal_chern_from_resolution: rank F - rank E must be 1");
    IdealChern out;
    out.n = n;
    ChernSeries cf = F.chern(n);
    ChernSeries ce = E.chern(n);
    out.series = whitney(cf, chern_inverse(ce));
    out.twist_l = F.c1_h(n) - E.c1_h(n);
    return out;
}

std::array<Rational, 5> ideal_gammas(const ChernSeries& s) {
    if (s.n != 5)
        throw std::invalid_argument("ideal_gammas: defined on Q^5");
    std::array<Rational, 5> g;
    for (int i = 1; i <= 5; ++i)
        g[static_cast<size_t>(i - 1)] = s.at(i).h_normalized(i);
    return g;
}

GammaInvariants gamma_invert(const ChernSeries& s, int l) {
    auto g = ideal_gammas(s);
    if (g[0] != Rational(l))
        throw std::domain_error("gamma_invert: gamma_1 does not equal the stated twist");
    Rational a(5 - l);  // the (5 - l) of the twisted-ideal relations
    GammaInvariants r;
    r.d = Rational(2) * g[1];
    r.KL2 = Rational(2) * g[2] - a * r.d;
    r.K2L = Rational(2) * g[3] - Rational(2) * a * r.KL2 - a * a * r.d;
    r.K3 = Rational(2) * g[4] - Rational(3) * a * r.K2L - Rational(3) * a * a * r.KL2 -
           a * a * a * r.d;
    return r;
}

ChowClass porteous_d1(const ChernSeries& e, int source_rank, int target_rank, int k,
                      MiddlePairing pairing) {
    if (source_rank != 3 || target_rank != 4 || k != 1 || e.rank != 4)
        throw unsupported_error("porteous_d1: only the rank 3 -> rank 4, k = 1 shape is supported");
    return e.at(3).cup(e.at(3), pairing) - e.at(2).cup(e.at(4), pairing);
}

}  // namespace qsc
