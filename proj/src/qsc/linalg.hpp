#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qsc {

// Dense matrix over an exact field F. F needs +,-,*,/, F(0), F(1), is_zero().
template <class F>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i)
            m.at(i, i) = F(1);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    F& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const F& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("Mat: dimension mismatch in product");
        Mat out(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                if (at(i, k).is_zero())
                    continue;
                for (size_t j = 0; j < o.cols_; ++j)
                    out.at(i, j) += at(i, k) * o.at(k, j);
            }
        return out;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        if (v.size() != cols_)
            throw std::invalid_argument("Mat: dimension mismatch in apply");
        std::vector<F> out(rows_, F(0));
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j)
                if (!at(i, j).is_zero())
                    out[i] += at(i, j) * v[j];
        return out;
    }

private:
    size_t rows_, cols_;
    std::vector<F> a_;
};

template <class F>
F determinant(Mat<F> m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix not square");
    size_t n = m.rows();
    F det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero())
            ++pivot;
        if (pivot == n)
            return F(0);
        if (pivot != col) {
            for (size_t j = col; j < n; ++j)
                std::swap(m.at(pivot, j), m.at(col, j));
            det = F(0) - det;
        }
        det = det * m.at(col, col);
        F inv = F(1) / m.at(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero())
                continue;
            F f = m.at(i, col) * inv;
            for (size_t j = col; j < n; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(col, j);
        }
    }
    return det;
}

enum class SolKind { Unique, Family, Inconsistent };

// Affine solution set of M x = b: a particular solution plus a basis of the
// kernel. Family means a positive-dimensional set.
template <class F>
struct LinSolution {
    SolKind kind = SolKind::Inconsistent;
    std::vector<F> particular;
    std::vector<std::vector<F>> nullspace;
};

namespace detail {

// Reduced row echelon form in place; returns pivot column per pivot row.
template <class F>
std::vector<size_t> rref(Mat<F>& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        if (p != row)
            for (size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(p, j), m.at(row, j));
        F inv = F(1) / m.at(row, col);
        for (size_t j = col; j < m.cols(); ++j)
            m.at(row, j) = m.at(row, j) * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero())
                continue;
            F f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

template <class F>
size_t rank(Mat<F> m) {
    return detail::rref(m).size();
}

template <class F>
LinSolution<F> solve_linear(const Mat<F>& m, const std::vector<F>& rhs) {
    if (m.rows() == 0 || m.cols() == 0)
        throw std::invalid_argument("solve_linear: empty system");
    if (rhs.size() != m.rows())
        throw std::invalid_argument("solve_linear: rhs length mismatch");
    Mat<F> aug(m.rows(), m.cols() + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    std::vector<size_t> pivots = detail::rref(aug);

    LinSolution<F> sol;
    if (!pivots.empty() && pivots.back() == m.cols()) {
        sol.kind = SolKind::Inconsistent;
        return sol;
    }
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : pivots)
        is_pivot[c] = true;

    sol.particular.assign(m.cols(), F(0));
    for (size_t r = 0; r < pivots.size(); ++r)
        sol.particular[pivots[r]] = aug.at(r, m.cols());

    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<F> v(m.cols(), F(0));
        v[free] = F(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = F(0) - aug.at(r, free);
        sol.nullspace.push_back(std::move(v));
    }
    sol.kind = sol.nullspace.empty() ? SolKind::Unique : SolKind::Family;
    return sol;
}

}  // namespace qsc
