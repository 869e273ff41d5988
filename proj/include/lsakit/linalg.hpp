#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lsakit/scalar.hpp"

namespace lsakit {

/// Coordinate vector over a fixed field.
class Vec {
public:
    Vec() = default;

    Vec(FieldSpec f, std::vector<Scalar> coords) : field_(f), c_(std::move(coords)) {
        for (const auto& s : c_) require_same_field(field_, s.field());
    }

    static Vec zero(const FieldSpec& f, std::size_t n) {
        Vec v;
        v.field_ = f;
        v.c_.assign(n, Scalar::zero(f));
        return v;
    }

    static Vec unit(const FieldSpec& f, std::size_t n, std::size_t i) {
        Vec v = zero(f, n);
        v.c_[i] = Scalar::one(f);
        return v;
    }

    const FieldSpec& field() const { return field_; }
    std::size_t size() const { return c_.size(); }

    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    Scalar& operator[](std::size_t i) { return c_[i]; }

    bool is_zero() const {
        for (const auto& s : c_)
            if (!s.is_zero()) return false;
        return true;
    }

    friend Vec operator+(const Vec& a, const Vec& b) {
        a.check_shape(b);
        Vec r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
        return r;
    }

    friend Vec operator-(const Vec& a, const Vec& b) {
        a.check_shape(b);
        Vec r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r.c_[i] = r.c_[i] - b.c_[i];
        return r;
    }

    Vec operator-() const {
        Vec r = *this;
        for (auto& s : r.c_) s = -s;
        return r;
    }

    Vec scaled(const Scalar& k) const {
        Vec r = *this;
        for (auto& s : r.c_) s = k * s;
        return r;
    }

    friend bool operator==(const Vec& a, const Vec& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ", ";
            out += c_[i].str();
        }
        return out + ")";
    }

private:
    FieldSpec field_;
    std::vector<Scalar> c_;

    void check_shape(const Vec& o) const {
        require_same_field(field_, o.field_);
        if (size() != o.size())
            throw error(errc::dimension_mismatch, "vector length mismatch");
    }
};

/// Dense matrix, row-major. Column j always holds the image of basis vector j;
/// every module in the kit follows this convention.
class Matrix {
public:
    Matrix() = default;

    static Matrix zero(const FieldSpec& f, std::size_t rows, std::size_t cols) {
        Matrix m;
        m.field_ = f;
        m.rows_ = rows;
        m.cols_ = cols;
        m.a_.assign(rows * cols, Scalar::zero(f));
        return m;
    }

    static Matrix identity(const FieldSpec& f, std::size_t n) {
        Matrix m = zero(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
        return m;
    }

    static Matrix from_rows(const FieldSpec& f, const std::vector<std::vector<Scalar>>& rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows[0].size() : 0;
        Matrix m = zero(f, r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                throw error(errc::dimension_mismatch, "ragged matrix rows");
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static Matrix from_columns(const FieldSpec& f, std::size_t rows, const std::vector<Vec>& cols) {
        Matrix m = zero(f, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
        return m;
    }

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

    Vec column(std::size_t j) const {
        Vec v = Vec::zero(field_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_column(std::size_t j, const Vec& v) {
        require_same_field(field_, v.field());
        if (v.size() != rows_)
            throw error(errc::dimension_mismatch, "column length mismatch");
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
    }

    bool is_zero() const {
        for (const auto& s : a_)
            if (!s.is_zero()) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const Scalar& s = (*this)(i, j);
                if (i == j ? !s.is_one() : !s.is_zero()) return false;
            }
        return true;
    }

    Vec apply(const Vec& v) const {
        require_same_field(field_, v.field());
        if (v.size() != cols_)
            throw error(errc::dimension_mismatch, "matrix-vector shape mismatch");
        Vec r = Vec::zero(field_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            Scalar acc = Scalar::zero(field_);
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!v[j].is_zero() && !(*this)(i, j).is_zero())
                    acc = acc + (*this)(i, j) * v[j];
            }
            r[i] = acc;
        }
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require_same_field(a.field_, b.field_);
        if (a.cols_ != b.rows_)
            throw error(errc::dimension_mismatch, "matrix product shape mismatch");
        Matrix r = zero(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero()) r.at(i, j) = r(i, j) + a(i, k) * b(k, j);
            }
        return r;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + b.a_[i];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - b.a_[i];
        return r;
    }

    Matrix scaled(const Scalar& k) const {
        Matrix r = *this;
        for (auto& s : r.a_) s = k * s;
        return r;
    }

    Matrix transposed() const {
        Matrix r = zero(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = (*this)(i, j);
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    FieldSpec field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;

    void check_shape(const Matrix& o) const {
        require_same_field(field_, o.field_);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw error(errc::dimension_mismatch, "matrix shape mismatch");
    }
};

struct LinearSolution {
    Vec particular;
    std::vector<Vec> nullspace;  // basis of ker(A)
};

namespace detail {

/// Row echelon form in place; returns pivot column per pivot row.
/// First nonzero entry in column order is the pivot (exact arithmetic).
inline std::vector<std::size_t> row_reduce(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(row, j), m.at(sel, j));
        Scalar inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = inv * m(row, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Scalar factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) = m(i, j) - factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(Matrix m) { return detail::row_reduce(m).size(); }

/// Exact solve of A x = b: one particular solution plus a kernel basis, or
/// nullopt when the system is inconsistent.
inline std::optional<LinearSolution> solve(const Matrix& a, const Vec& b) {
    require_same_field(a.field(), b.field());
    if (b.size() != a.rows())
        throw error(errc::dimension_mismatch, "solve: rhs length mismatch");
    const FieldSpec& f = a.field();
    Matrix aug = Matrix::zero(f, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    std::vector<std::size_t> pivots = detail::row_reduce(aug);
    // inconsistent iff some pivot lands in the rhs column
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;

    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    LinearSolution sol{Vec::zero(f, a.cols()), {}};
    for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = aug(r, a.cols());

    for (std::size_t freec = 0; freec < a.cols(); ++freec) {
        if (is_pivot[freec]) continue;
        Vec k = Vec::zero(f, a.cols());
        k[freec] = Scalar::one(f);
        for (std::size_t r = 0; r < pivots.size(); ++r) k[pivots[r]] = -aug(r, freec);
        sol.nullspace.push_back(std::move(k));
    }
    return sol;
}

inline std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols())
        throw error(errc::dimension_mismatch, "inverse of a non-square matrix");
    const FieldSpec& f = a.field();
    std::size_t n = a.rows();
    if (n == 0) return Matrix::zero(f, 0, 0);
    Matrix aug = Matrix::zero(f, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a(i, j);
        aug.at(i, n + i) = Scalar::one(f);
    }
    std::vector<std::size_t> pivots = detail::row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv = Matrix::zero(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug(i, n + j);
    return inv;
}

inline bool invertible(const Matrix& a) {
    return a.rows() == a.cols() && rank(a) == a.rows();
}

}  // namespace lsakit
