#include "gencoh/subspace.hpp"

#include <stdexcept>

namespace gencoh {

Subspace Subspace::span(const Matrix& rows) {
    RrefResult r = rref(rows);
    Subspace s(rows.cols());
    Matrix b(r.rank, rows.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t c = 0; c < rows.cols(); ++c) b.at(i, c) = r.mat.at(i, c);
    s.basis_ = std::move(b);
    s.pivots_ = std::move(r.pivots);
    return s;
}

Vec Subspace::reduce(Vec v) const {
    if (v.size() != ambient_) throw std::invalid_argument("reduce: ambient mismatch");
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        const GaussianRational& coeff = v[pivots_[r]];
        if (coeff.is_zero()) continue;
        GaussianRational f = coeff;  // pivot entries are 1
        for (std::size_t c = 0; c < ambient_; ++c)
            if (!basis_.at(r, c).is_zero()) v[c] -= f * basis_.at(r, c);
    }
    return v;
}

bool Subspace::contains(const Vec& v) const {
    Vec r = reduce(v);
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) return false;
    for (std::size_t r = 0; r < other.basis_.rows(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

Subspace Subspace::conjugate() const {
    Matrix m(basis_.rows(), ambient_);
    for (std::size_t r = 0; r < basis_.rows(); ++r)
        for (std::size_t c = 0; c < ambient_; ++c) m.at(r, c) = basis_.at(r, c).conj();
    return span(m);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace_sum: ambient mismatch");
    return Subspace::span(Matrix::vstack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace_intersect: ambient mismatch");
    if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient());
    // x = alpha^T A = beta^T B; solve for (alpha, beta) in the kernel of
    // [A^T | -B^T] and map the alpha part back through A.
    Matrix at = a.basis().transpose();
    Matrix bt = b.basis().transpose() * GaussianRational(-1);
    Subspace k = kernel(Matrix::hstack(at, bt));
    Matrix rows(k.dim(), a.ambient());
    for (std::size_t r = 0; r < k.dim(); ++r) {
        Vec alpha(a.dim());
        for (std::size_t c = 0; c < a.dim(); ++c) alpha[c] = k.basis().at(r, c);
        Vec x = a.basis().transpose().apply(alpha);
        rows.set_row(r, x);
    }
    return Subspace::span(rows);
}

Subspace kernel(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> rows;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(m.cols());
        v[free_col] = GaussianRational(1);
        for (std::size_t pr = 0; pr < r.pivots.size(); ++pr)
            v[r.pivots[pr]] = -r.mat.at(pr, free_col);
        rows.push_back(std::move(v));
    }
    return Subspace::span(Matrix::from_rows(rows, m.cols()));
}

Subspace row_space(const Matrix& m) { return Subspace::span(m); }

Subspace column_space(const Matrix& m) { return Subspace::span(m.transpose()); }

Subspace preimage(const Matrix& m, const Subspace& target) {
    if (m.rows() != target.ambient()) throw std::invalid_argument("preimage: shape mismatch");
    // Compose with a linear map whose kernel is `target`: reduction against
    // the target's RREF basis, R = I - P*B with P selecting pivot rows.
    Matrix R = Matrix::identity(target.ambient());
    for (std::size_t r = 0; r < target.dim(); ++r) {
        std::size_t p = target.pivots()[r];
        for (std::size_t c = 0; c < target.ambient(); ++c)
            R.at(p, c) -= target.basis().at(r, c);
    }
    return kernel(R * m);
}

Subspace image_of(const Matrix& m, const Subspace& source) {
    if (m.cols() != source.ambient()) throw std::invalid_argument("image_of: shape mismatch");
    Matrix rows(source.dim(), m.rows());
    for (std::size_t r = 0; r < source.dim(); ++r) rows.set_row(r, m.apply(source.basis().row(r)));
    return Subspace::span(rows);
}

Quotient quotient(const Subspace& numerator, const Subspace& denominator) {
    if (numerator.ambient() != denominator.ambient())
        throw std::invalid_argument("quotient: ambient mismatch");
    for (std::size_t r = 0; r < denominator.dim(); ++r) {
        Vec v = denominator.basis().row(r);
        if (!numerator.contains(v))
            throw ContainmentError("quotient: denominator is not contained in numerator", v);
    }
    Quotient q;
    q.dim = numerator.dim() - denominator.dim();
    // Pick numerator basis rows that stay independent modulo the
    // denominator, in basis order, which keeps the choice deterministic.
    Matrix picked(0, numerator.ambient());
    Subspace accum = denominator;
    std::vector<Vec> reps;
    for (std::size_t r = 0; r < numerator.dim() && reps.size() < q.dim; ++r) {
        Vec v = numerator.basis().row(r);
        if (accum.contains(v)) continue;
        reps.push_back(v);
        Matrix ext = Matrix::vstack(accum.basis(), Matrix::from_rows({v}, numerator.ambient()));
        accum = Subspace::span(ext);
    }
    q.representatives = Matrix::from_rows(reps, numerator.ambient());
    return q;
}

}  // namespace gencoh
