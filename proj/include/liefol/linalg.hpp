#pragma once

// Exact dense vectors and matrices over Rational, with reduced row echelon
// form and linear-system solving. Elimination is fully deterministic:
// leftmost pivot column, first nonzero row, no pivoting heuristics.
// Dimensions in this library stay tiny (<= 10), so no effort is spent on
// sparsity or cache behaviour.

#include <liefol/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace liefol {

using Vec = std::vector<Rational>;

inline Vec zero_vec(std::size_t n) { return Vec(n); }

inline bool is_zero(const Vec& v)
{
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

inline Vec& add_scaled(Vec& dst, const Rational& c, const Vec& src)
{
    if (dst.size() != src.size()) throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += c * src[i];
    return dst;
}

inline Vec operator+(Vec a, const Vec& b) { return add_scaled(a, Rational(1), b); }
inline Vec operator-(Vec a, const Vec& b) { return add_scaled(a, Rational(-1), b); }

inline Vec operator*(const Rational& c, Vec v)
{
    for (auto& x : v) x *= c;
    return v;
}

inline Vec operator-(Vec v)
{
    for (auto& x : v) x = -x;
    return v;
}

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix from_rows(const std::vector<Vec>& rows)
    {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) throw std::invalid_argument("matrix rows of unequal length");
            for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t k)
    {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(i, j), at(k, j));
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

struct RrefResult {
    Matrix m;
    std::vector<std::size_t> pivots; // pivot column per pivot row, ascending
};

inline RrefResult rref(Matrix m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m.at(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row) m.swap_rows(p, row);
        Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

struct UniqueSolution {
    Vec x;
};
struct ParametricSolution {
    Vec particular;
    std::vector<Vec> nullspace; // canonical rref-derived basis, one per free column
};
struct Inconsistent {};

using LinearSolution = std::variant<UniqueSolution, ParametricSolution, Inconsistent>;

// Solves a x = b exactly. The parametric branch carries the particular
// solution with all free variables set to zero and one nullspace basis
// vector per free column.
inline LinearSolution solve_linear(const Matrix& a, const Vec& b)
{
    if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: dimension mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    auto [r, pivots] = rref(std::move(aug));
    if (!pivots.empty() && pivots.back() == a.cols()) return Inconsistent{};

    Vec particular(a.cols());
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        is_pivot[pivots[k]] = true;
        particular[pivots[k]] = r.at(k, a.cols());
    }
    if (pivots.size() == a.cols()) return UniqueSolution{std::move(particular)};

    std::vector<Vec> nullspace;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(a.cols());
        v[f] = Rational(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, f);
        nullspace.push_back(std::move(v));
    }
    return ParametricSolution{std::move(particular), std::move(nullspace)};
}

} // namespace liefol
