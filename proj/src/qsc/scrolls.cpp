#include "qsc/scrolls.hpp"

#include <map>
#include <stdexcept>

namespace qsc {

const std::array<const char*, 8> kScrollUnknownNames = {
    "L^3", "L^2e1", "L^2y1", "Le1^2", "Le1y1", "Ly1^2", "Le2", "Ly2"};

namespace {

// Matrix entries as affine functions u + v*d of the degree.
struct Affine {
    int u = 0;
    int v_half = 0;  // coefficient of d in halves, so 5 - d/2 is {5, -1}
};

// Rows of the scroll system; the d-dependence sits in rows 1-4.
constexpr Affine kRow[8][8] = {
    // (A) . L
    {{5, -1}, {1, 0}, {-3, 0}, {1, 0}, {-1, 0}, {1, 0}, {0, 0}, {-1, 0}},
    // (A) . e1   (pure pullback cubes vanish on a surface base)
    {{0, 0}, {5, -1}, {0, 0}, {1, 0}, {-3, 0}, {0, 0}, {0, 0}, {0, 0}},
    // (A) . y1
    {{0, 0}, {0, 0}, {5, -1}, {0, 0}, {1, 0}, {-3, 0}, {0, 0}, {0, 0}},
    // (B), with the constant d^2/2 - 2d folded through L^3 = d
    {{-2, 1}, {-8, 2}, {8, -2}, {-4, 0}, {8, 0}, {-4, 0}, {0, 0}, {-2, 0}},
    // tautological . L
    {{1, 0}, {-1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}, {0, 0}},
    // tautological . e1
    {{0, 0}, {1, 0}, {0, 0}, {-1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}},
    // tautological . y1
    {{0, 0}, {0, 0}, {1, 0}, {0, 0}, {-1, 0}, {0, 0}, {0, 0}, {0, 0}},
    // L^3 = d
    {{1, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}},
};

Rational affine_at(const Affine& a, const Rational& d) {
    return Rational(a.u) + Rational(a.v_half, 2) * d;
}

RatPoly affine_poly(const Affine& a) {
    return RatPoly(Rational(a.u)) + Rational(a.v_half, 2) * RatPoly::variable();
}

}  // namespace

Mat<Rational> surface_scroll_matrix(const Rational& d) {
    Mat<Rational> m(8, 8);
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j)
            m.at(i, j) = affine_at(kRow[i][j], d);
    return m;
}

std::vector<Rational> surface_scroll_rhs(const Rational& d) {
    std::vector<Rational> rhs(8, Rational(0));
    rhs[7] = d;
    return rhs;
}

Mat<RatFunc> surface_scroll_matrix_sym() {
    Mat<RatFunc> m(8, 8);
    for (size_t i = 0; i < 8; ++i)
        for (size_t j = 0; j < 8; ++j)
            m.at(i, j) = RatFunc(affine_poly(kRow[i][j]));
    return m;
}

std::vector<RatFunc> surface_scroll_rhs_sym() {
    std::vector<RatFunc> rhs(8, RatFunc(0));
    rhs[7] = RatFunc(RatPoly::variable());
    return rhs;
}

RatPoly surface_scroll_det_sym() {
    RatFunc det = determinant(surface_scroll_matrix_sym());
    return det.as_polynomial();
}

ScrollSolutionSym surface_scroll_solution_sym() {
    RatPoly d = RatPoly::variable();
    RatPoly d2 = d * d;
    RatPoly d3 = d2 * d;
    ScrollSolutionSym s;
    s.v[0] = d;
    s.v[1] = Rational(3, 2) * d;
    s.v[2] = Rational(1, 4) * d * (RatPoly(Rational(12)) - d);
    s.v[3] = s.v[1];
    s.v[4] = s.v[2];
    s.v[5] = Rational(1, 24) * d3 - d2 + Rational(6) * d;
    s.v[6] = Rational(1, 2) * d;
    s.v[7] = Rational(1, 24) * d3 - Rational(1, 2) * d2 + Rational(2) * d;
    return s;
}

ScrollSolution surface_scroll_solve(const Rational& d) {
    if (d == Rational(8))
        throw std::domain_error(
            "surface_scroll_solve: the system is singular at d = 8; use d8_family");
    ScrollSolutionSym sym = surface_scroll_solution_sym();
    ScrollSolution s;
    for (size_t i = 0; i < 8; ++i)
        s.v[i] = sym.v[i].eval(d);
    return s;
}

ScrollSolutionSym d8_family_sym() {
    RatPoly t = RatPoly::variable();
    ScrollSolutionSym s;
    s.v[0] = RatPoly(Rational(8));
    s.v[1] = RatPoly(Rational(36)) - Rational(9, 2) * t;
    s.v[2] = RatPoly(Rational(24)) - Rational(3) * t;
    s.v[3] = s.v[1];
    s.v[4] = s.v[2];
    s.v[5] = RatPoly(Rational(16)) - Rational(2) * t;
    s.v[6] = RatPoly(Rational(28)) - Rational(9, 2) * t;
    s.v[7] = t;
    return s;
}

ScrollSolution d8_family(const Rational& t) {
    ScrollSolutionSym sym = d8_family_sym();
    ScrollSolution s;
    for (size_t i = 0; i < 8; ++i)
        s.v[i] = sym.v[i].eval(t);
    return s;
}

ScrollInvariants scroll_invariants(const Rational& d) {
    if (d == Rational(8))
        throw std::domain_error("scroll_invariants: undetermined at d = 8; see d8_family");
    ScrollInvariants s;
    s.d = d;
    s.g = Rational(1) + d * (d - Rational(6)) / Rational(8);
    s.chi = (d * d * d - Rational(18) * d * d + Rational(96) * d) / Rational(144);
    s.e1_sq = Rational(3, 2) * d;
    s.e2_deg = d / Rational(2);
    s.ky_coeff = (d - Rational(12)) / Rational(6);
    return s;
}

Rational fiber_cut_degree(FiberCase c, int n) {
    // Restricting to a fiber F = P^k with T_X|F = T_F + trivial, the relation
    //   (1/2) d L^2 = (1/2)(n^2 - n + 2) L^2 - n c1 L + c1^2 - c2
    // cut down to F . L^(extra) turns into scalars: L|F is the hyperplane class,
    // c1|F = (k+1) h, c2|F = B(k+1, 2) h^2.
    int k;
    if (c == FiberCase::ThreefoldOverCurve) {
        if (n != 5 && n != 6)
            throw std::invalid_argument("fiber_cut_degree: curve case needs n = 5 or 6");
        k = n - 3;
    } else {
        if (n != 6)
            throw std::invalid_argument("fiber_cut_degree: surface case lives on Q^6");
        k = 2;
    }
    Rational c1(k + 1);
    Rational c2(binom(k + 1, 2));
    Rational rhs = Rational(n * n - n + 2, 2) - Rational(n) * c1 + c1 * c1 - c2;
    return Rational(2) * rhs;
}

namespace {

// Degree-four intersection monomials on a fourfold fibered in lines over a
// threefold: exponents of (L, e1, e2, y1, y2, y3).
struct Mono {
    int L = 0, e1 = 0, e2 = 0, y1 = 0, y2 = 0, y3 = 0;

    int codim() const { return L + e1 + 2 * e2 + y1 + 2 * y2 + 3 * y3; }
    Mono operator*(const Mono& o) const {
        return {L + o.L, e1 + o.e1, e2 + o.e2, y1 + o.y1, y2 + o.y2, y3 + o.y3};
    }
    auto operator<=>(const Mono&) const = default;
};

const std::array<Mono, 17> kUnknowns = {{
    {4, 0, 0, 0, 0, 0},  // L^4
    {3, 1, 0, 0, 0, 0},  // L^3 e1
    {3, 0, 0, 1, 0, 0},  // L^3 y1
    {2, 2, 0, 0, 0, 0},  // L^2 e1^2
    {2, 1, 0, 1, 0, 0},  // L^2 e1 y1
    {2, 0, 1, 0, 0, 0},  // L^2 e2
    {2, 0, 0, 2, 0, 0},  // L^2 y1^2
    {2, 0, 0, 0, 1, 0},  // L^2 y2
    {1, 3, 0, 0, 0, 0},  // L e1^3
    {1, 2, 0, 1, 0, 0},  // L e1^2 y1
    {1, 1, 1, 0, 0, 0},  // L e1 e2
    {1, 1, 0, 2, 0, 0},  // L e1 y1^2
    {1, 1, 0, 0, 1, 0},  // L e1 y2
    {1, 0, 1, 1, 0, 0},  // L e2 y1
    {1, 0, 0, 3, 0, 0},  // L y1^3
    {1, 0, 0, 1, 1, 0},  // L y1 y2
    {1, 0, 0, 0, 0, 1},  // L y3
}};

// A relation: RatPoly-in-d coefficients attached to monomials.
using Relation = std::vector<std::pair<Mono, RatPoly>>;

RatPoly cpoly(int v) { return RatPoly(Rational(v)); }

Relation tautological() {
    return {{{2, 0, 0, 0, 0, 0}, cpoly(1)},
            {{1, 1, 0, 0, 0, 0}, cpoly(-1)},
            {{0, 0, 1, 0, 0, 0}, cpoly(1)}};
}

Relation relation_n2() {
    // (d/2 - 8) L^2 - 2 L e1 + 4 L y1 - e1^2 + e1 y1 - y1^2 + y2 = 0
    RatPoly half_d_minus_8 = Rational(1, 2) * RatPoly::variable() - RatPoly(Rational(8));
    return {{{2, 0, 0, 0, 0, 0}, half_d_minus_8},
            {{1, 1, 0, 0, 0, 0}, cpoly(-2)},
            {{1, 0, 0, 1, 0, 0}, cpoly(4)},
            {{0, 2, 0, 0, 0, 0}, cpoly(-1)},
            {{0, 1, 0, 1, 0, 0}, cpoly(1)},
            {{0, 0, 0, 2, 0, 0}, cpoly(-1)},
            {{0, 0, 0, 0, 1, 0}, cpoly(1)}};
}

Relation relation_n3() {
    // 8L^3 + 4L^2 e1 - 8L^2 y1 - 2L e1 y1 + 4L y1^2 - 4L y2
    //   + e1^3 - e1^2 y1 + e1 y1^2 - e1 y2 - y1^3 + 2 y1 y2 - y3 = 0
    return {{{3, 0, 0, 0, 0, 0}, cpoly(8)},   {{2, 1, 0, 0, 0, 0}, cpoly(4)},
            {{2, 0, 0, 1, 0, 0}, cpoly(-8)},  {{1, 1, 0, 1, 0, 0}, cpoly(-2)},
            {{1, 0, 0, 2, 0, 0}, cpoly(4)},   {{1, 0, 0, 0, 1, 0}, cpoly(-4)},
            {{0, 3, 0, 0, 0, 0}, cpoly(1)},   {{0, 2, 0, 1, 0, 0}, cpoly(-1)},
            {{0, 1, 0, 2, 0, 0}, cpoly(1)},   {{0, 1, 0, 0, 1, 0}, cpoly(-1)},
            {{0, 0, 0, 3, 0, 0}, cpoly(-1)},  {{0, 0, 0, 1, 1, 0}, cpoly(2)},
            {{0, 0, 0, 0, 0, 1}, cpoly(-1)}};
}

Relation relation_n4() {
    // 6L^4 - 8L^3 y1 + 4L^2 e1^2 - 4L^2 e1 y1 + 8L^2 y1^2 - 8L^2 y2
    //   - 2L e1^3 + 2L e1 y1^2 - 2L e1 y2 - 4L y1^3 + 8L y1 y2 - 4L y3 = 0
    return {{{4, 0, 0, 0, 0, 0}, cpoly(6)},   {{3, 0, 0, 1, 0, 0}, cpoly(-8)},
            {{2, 2, 0, 0, 0, 0}, cpoly(4)},   {{2, 1, 0, 1, 0, 0}, cpoly(-4)},
            {{2, 0, 0, 2, 0, 0}, cpoly(8)},   {{2, 0, 0, 0, 1, 0}, cpoly(-8)},
            {{1, 3, 0, 0, 0, 0}, cpoly(-2)},  {{1, 1, 0, 2, 0, 0}, cpoly(2)},
            {{1, 1, 0, 0, 1, 0}, cpoly(-2)},  {{1, 0, 0, 3, 0, 0}, cpoly(-4)},
            {{1, 0, 0, 1, 1, 0}, cpoly(8)},   {{1, 0, 0, 0, 0, 1}, cpoly(-4)}};
}

// Multiply a relation by a cut monomial and accumulate into a 17-entry row.
// Monomials of codimension four with no L factor are pullbacks from the
// threefold base and vanish.
std::array<RatPoly, 17> cut_row(const Relation& rel, const Mono& cut) {
    std::map<Mono, size_t> index;
    for (size_t i = 0; i < kUnknowns.size(); ++i)
        index.emplace(kUnknowns[i], i);
    std::array<RatPoly, 17> row;
    for (const auto& [mono, coeff] : rel) {
        Mono prod = mono * cut;
        if (prod.codim() != 4)
            throw std::logic_error("fourfold system: cut does not land in degree four");
        if (prod.L == 0)
            continue;
        auto it = index.find(prod);
        if (it == index.end())
            throw std::logic_error("fourfold system: unexpected monomial");
        row[it->second] += coeff;
    }
    return row;
}

std::vector<std::array<RatPoly, 17>> fourfold_rows() {
    const std::array<Mono, 8> cuts2 = {{
        {2, 0, 0, 0, 0, 0},  // L^2
        {1, 1, 0, 0, 0, 0},  // L e1
        {1, 0, 0, 1, 0, 0},  // L y1
        {0, 2, 0, 0, 0, 0},  // e1^2
        {0, 0, 0, 2, 0, 0},  // y1^2
        {0, 1, 0, 1, 0, 0},  // e1 y1
        {0, 0, 1, 0, 0, 0},  // e2
        {0, 0, 0, 0, 1, 0},  // y2
    }};
    const std::array<Mono, 3> cuts1 = {{
        {1, 0, 0, 0, 0, 0},  // L
        {0, 1, 0, 0, 0, 0},  // e1
        {0, 0, 0, 1, 0, 0},  // y1
    }};
    std::vector<std::array<RatPoly, 17>> rows;
    for (const auto& cut : cuts2)
        rows.push_back(cut_row(tautological(), cut));
    for (const auto& cut : cuts2)
        rows.push_back(cut_row(relation_n2(), cut));
    for (const auto& cut : cuts1)
        rows.push_back(cut_row(relation_n3(), cut));
    rows.push_back(cut_row(relation_n4(), {0, 0, 0, 0, 0, 0}));
    return rows;
}

}  // namespace

const std::array<const char*, 17> kFourfoldUnknownNames = {
    "L^4",    "L^3e1",   "L^3y1",  "L^2e1^2", "L^2e1y1", "L^2e2",
    "L^2y1^2", "L^2y2",  "Le1^3",  "Le1^2y1", "Le1e2",   "Le1y1^2",
    "Le1y2",  "Le2y1",   "Ly1^3",  "Ly1y2",   "Ly3"};

Mat<RatFunc> fourfold_system_sym() {
    auto rows = fourfold_rows();
    Mat<RatFunc> m(rows.size(), 17);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < 17; ++j)
            m.at(i, j) = RatFunc(rows[i][j]);
    return m;
}

Mat<Rational> fourfold_system_at(const Rational& d) {
    auto rows = fourfold_rows();
    Mat<Rational> m(rows.size(), 17);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < 17; ++j)
            m.at(i, j) = rows[i][j].eval(d);
    return m;
}

FourfoldScan fourfold_over_threefold_scan(int dmax) {
    if (dmax < 2)
        throw std::invalid_argument("fourfold_over_threefold_scan: dmax must be at least 2");
    FourfoldScan scan;
    scan.dmax = dmax;
    scan.generic_rank = rank(fourfold_system_sym());
    for (int d = 2; d <= dmax; d += 2) {
        Mat<Rational> hom = fourfold_system_at(Rational(d));
        // Adjoin L^4 = d.
        Mat<Rational> sys(hom.rows() + 1, 17);
        for (size_t i = 0; i < hom.rows(); ++i)
            for (size_t j = 0; j < 17; ++j)
                sys.at(i, j) = hom.at(i, j);
        sys.at(hom.rows(), 0) = Rational(1);
        std::vector<Rational> rhs(hom.rows() + 1, Rational(0));
        rhs.back() = Rational(d);
        LinSolution<Rational> sol = solve_linear(sys, rhs);
        if (sol.kind != SolKind::Inconsistent) {
            scan.solvable.push_back(d);
            if (d == 4)
                scan.d4_solution = std::move(sol);
        }
    }
    return scan;
}

BaseClassification base_surface_classify(int d) {
    BaseClassification b;
    b.d = d;
    switch (d) {
        case 6: {
            ScrollInvariants s = scroll_invariants(Rational(6));
            b.base = BaseSurface::P2;
            b.base_name = "P^2";
            b.ky_coeff = s.ky_coeff;                       // -1: K_Y ~ -e1, so -K_Y ample
            b.ky_sq = s.ky_coeff * s.ky_coeff * s.e1_sq;   // 9
            b.chi = s.chi;
            b.argument = "K_Y ~ -e1 is anti-ample with K_Y^2 = 9; the only such "
                         "Del Pezzo surface is P^2";
            return b;
        }
        case 8: {
            ScrollSolution f = d8_family(Rational(4));
            b.base = BaseSurface::Q2;
            b.base_name = "Q^2";
            b.t = Rational(4);
            b.e2_deg = f.Le2();                                     // 10
            b.g = Rational(1) + (f.Le1sq() - f.Le1y1()) / Rational(2);  // 4
            b.ky_sq = f.Ly1sq();                                    // 8 at t = 4
            b.argument = "3K_Y ~ -2e1 forces a Del Pezzo surface on which 3K_Y is "
                         "divisible by 2, hence Y = Q^2 and t = b_2 = 4";
            return b;
        }
        case 12: {
            ScrollInvariants s = scroll_invariants(Rational(12));
            b.base = BaseSurface::K3;
            b.base_name = "minimal K3";
            b.ky_coeff = s.ky_coeff;  // 0: K_Y numerically trivial
            b.ky_sq = Rational(0);
            b.chi = s.chi;            // 2
            b.argument = "K_Y is numerically trivial, so Y is minimal; chi(O_Y) = 2 "
                         "singles out the K3 surfaces";
            return b;
        }
        default:
            throw std::invalid_argument("base_surface_classify: d must be 6, 8 or 12");
    }
}

}  // namespace qsc
