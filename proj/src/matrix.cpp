#include "gencoh/matrix.hpp"

#include <stdexcept>

namespace gencoh {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m.at(k, k) = GaussianRational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    Vec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::conjugate_transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c).conj();
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const GaussianRational& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                const GaussianRational& b = o.at(k, c);
                if (!b.is_zero()) p.at(r, c) += a * b;
            }
        }
    return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    Matrix s(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) s.e_[k] = e_[k] + o.e_[k];
    return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix diff shape mismatch");
    Matrix s(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) s.e_[k] = e_[k] - o.e_[k];
    return s;
}

Matrix Matrix::operator*(const GaussianRational& c) const {
    Matrix s(rows_, cols_);
    for (std::size_t k = 0; k < e_.size(); ++k) s.e_[k] = e_[k] * c;
    return s;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols() && top.rows() != 0 && bottom.rows() != 0)
        throw std::invalid_argument("vstack column mismatch");
    std::size_t cols = top.rows() ? top.cols() : bottom.cols();
    Matrix m(top.rows() + bottom.rows(), cols);
    for (std::size_t r = 0; r < top.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = top.at(r, c);
    for (std::size_t r = 0; r < bottom.rows(); ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(top.rows() + r, c) = bottom.at(r, c);
    return m;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right) {
    if (left.rows() != right.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix m(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) {
        for (std::size_t c = 0; c < left.cols(); ++c) m.at(r, c) = left.at(r, c);
        for (std::size_t c = 0; c < right.cols(); ++c) m.at(r, left.cols() + c) = right.at(r, c);
    }
    return m;
}

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.mat = m;
    Matrix& a = res.mat;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t pivot = lead;
        while (pivot < a.rows() && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != lead)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(pivot, c), a.at(lead, c));
        GaussianRational inv = GaussianRational(1) / a.at(lead, col);
        for (std::size_t c = col; c < a.cols(); ++c) a.at(lead, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a.at(r, col).is_zero()) continue;
            GaussianRational f = a.at(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= f * a.at(lead, c);
        }
        res.pivots.push_back(col);
        ++lead;
    }
    res.rank = res.pivots.size();
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve shape mismatch");
    Matrix rhs(m.rows(), 1);
    for (std::size_t r = 0; r < m.rows(); ++r) rhs.at(r, 0) = b[r];
    auto sol = solve_columns(m, rhs);
    if (!sol) return std::nullopt;
    Vec x(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) x[c] = sol->at(c, 0);
    return x;
}

std::optional<Matrix> solve_columns(const Matrix& m, const Matrix& rhs) {
    if (rhs.rows() != m.rows()) throw std::invalid_argument("solve shape mismatch");
    RrefResult aug = rref(Matrix::hstack(m, rhs));
    // Any pivot landing in the right block witnesses inconsistency.
    for (std::size_t p : aug.pivots)
        if (p >= m.cols()) return std::nullopt;
    Matrix x(m.cols(), rhs.cols());
    for (std::size_t r = 0; r < aug.pivots.size(); ++r)
        for (std::size_t c = 0; c < rhs.cols(); ++c)
            x.at(aug.pivots[r], c) = aug.mat.at(r, m.cols() + c);
    return x;
}

}  // namespace gencoh
