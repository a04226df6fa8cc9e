#ifndef GENCOH_MATRIX_HPP
#define GENCOH_MATRIX_HPP

#include "gencoh/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace gencoh {

using Vec = std::vector<GaussianRational>;

/// Dense matrix over Q(i). Problem sizes here stay small (<= 4^n with
/// 2n <= 12), so dense storage and plain exact elimination are enough.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const GaussianRational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    void set_row(std::size_t r, const Vec& v);

    Matrix transpose() const;
    Matrix conjugate_transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const GaussianRational& c) const;
    Vec apply(const Vec& v) const;  // matrix * column vector

    bool is_zero() const;
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Vertical stack; operands must agree in column count.
    static Matrix vstack(const Matrix& top, const Matrix& bottom);
    /// Horizontal concatenation; operands must agree in row count.
    static Matrix hstack(const Matrix& left, const Matrix& right);

private:
    std::size_t rows_, cols_;
    std::vector<GaussianRational> e_;
};

struct RrefResult {
    Matrix mat;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

/// Unique reduced row-echelon form over Q(i).
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// One solution of m*x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero, which makes the answer deterministic.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Column-wise solve: finds x with m*x = rhs (matrix of column vectors).
std::optional<Matrix> solve_columns(const Matrix& m, const Matrix& rhs);

}  // namespace gencoh

#endif
