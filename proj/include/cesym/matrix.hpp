#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cesym/rational.hpp"

namespace cesym {

/// Dense matrix of exact rationals, row-major. Values are immutable in spirit:
/// every operation returns a fresh matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns) {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows)
                throw std::invalid_argument("from_columns: column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != cols)
                throw std::invalid_argument("from_rows: row length mismatch");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    Vector column(std::size_t j) const {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Vector row(std::size_t i) const {
        Vector v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Vector apply(const Vector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
        Vector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Rational acc = 0;
            for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
            out[i] = acc;
        }
        return out;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("operator*: shape mismatch");
        Matrix p(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
            }
        return p;
    }

    Matrix operator+(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("operator+: shape mismatch");
        Matrix s(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] + o.entries_[i];
        return s;
    }

    Matrix operator-(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("operator-: shape mismatch");
        Matrix s(rows_, cols_);
        for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] - o.entries_[i];
        return s;
    }

    bool operator==(const Matrix& o) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

inline Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row count mismatch");
    Matrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column count mismatch");
    Matrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns; // strictly increasing
    std::size_t rank = 0;
};

/// Reduced row-echelon form by plain rational Gauss-Jordan elimination.
/// Pivot choice is the first row with a nonzero entry, scanning columns left
/// to right, so representative bases are reproducible across runs.
inline RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.reduced = m;
    Matrix& a = res.reduced;
    const std::size_t rows = a.rows(), cols = a.cols();

    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a(i, c) != 0) { pivot = i; break; }
        if (pivot == rows) continue;

        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(pivot, j));

        const Rational inv = Rational(1) / a(r, c);
        for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        res.pivot_columns.push_back(c);
        ++r;
    }
    res.rank = res.pivot_columns.size();
    return res;
}

inline std::size_t rank_of(const Matrix& m) { return rref(m).rank; }

/// Basis of ker(m) read off the reduced echelon form: one vector per free
/// column, unit entry in that column. Order follows the free columns.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
    const RrefResult r = rref(m);
    const std::size_t cols = m.cols();

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : r.pivot_columns) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        Vector v(cols);
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivot_columns.size(); ++i)
            v[r.pivot_columns[i]] = -r.reduced(i, free);
        basis.push_back(std::move(v));
    }

    // rank-nullity, checked on every decomposition
    if (basis.size() != cols - r.rank)
        throw std::logic_error("kernel_basis: rank-nullity violated");
    for (const Vector& v : basis)
        for (const Rational& e : m.apply(v))
            if (e != 0) throw std::logic_error("kernel_basis: vector not annihilated");
    return basis;
}

/// Solves targets * c = v exactly; nullopt when v is outside the column span.
/// Free variables are set to zero, so the solution is deterministic.
inline std::optional<Vector> solve_in_span(const Matrix& targets, const Vector& v) {
    if (v.size() != targets.rows())
        throw std::invalid_argument("solve_in_span: row count mismatch");
    Matrix aug(targets.rows(), targets.cols() + 1);
    for (std::size_t i = 0; i < targets.rows(); ++i) {
        for (std::size_t j = 0; j < targets.cols(); ++j) aug(i, j) = targets(i, j);
        aug(i, targets.cols()) = v[i];
    }
    const RrefResult r = rref(aug);
    for (std::size_t c : r.pivot_columns)
        if (c == targets.cols()) return std::nullopt; // inconsistent system

    Vector c(targets.cols());
    for (std::size_t i = 0; i < r.pivot_columns.size(); ++i)
        c[r.pivot_columns[i]] = r.reduced(i, targets.cols());
    return c;
}

/// Exact determinant by fraction elimination with row-swap sign tracking.
inline Rational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const std::size_t n = m.rows();
    Matrix a = m;
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t i = c; i < n; ++i)
            if (a(i, c) != 0) { pivot = i; break; }
        if (pivot == n) return 0;
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(c, j), a(pivot, j));
            det = -det;
        }
        det *= a(c, c);
        const Rational inv = Rational(1) / a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            const Rational f = a(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

/// Canonical echelon basis of the column span: rref the transposed matrix and
/// keep its nonzero rows as columns. Two spanning sets of the same subspace
/// produce identical output.
inline Matrix column_space_echelon(const Matrix& m) {
    const RrefResult r = rref(m.transpose());
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < r.rank; ++i) rows.push_back(r.reduced.row(i));
    return Matrix::from_rows(rows, m.rows()).transpose();
}

} // namespace cesym
