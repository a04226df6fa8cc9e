#ifndef GENCOH_SUBSPACE_HPP
#define GENCOH_SUBSPACE_HPP

#include "gencoh/matrix.hpp"

#include <optional>
#include <vector>

namespace gencoh {

/// Linear subspace of Q(i)^n in canonical form: the basis matrix is the
/// reduced row-echelon form with rows as basis vectors, so two subspaces
/// are equal exactly when their basis matrices are equal.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    /// Canonicalizes the row span of `rows`.
    static Subspace span(const Matrix& rows);
    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
    static Subspace full(std::size_t ambient) { return span(Matrix::identity(ambient)); }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// Residual of v after eliminating against the basis; zero iff v lies
    /// in the subspace.
    Vec reduce(Vec v) const;

    Subspace conjugate() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);

/// Kernel {v : m v = 0} as a canonical subspace of Q(i)^cols.
Subspace kernel(const Matrix& m);

/// Row space of m.
Subspace row_space(const Matrix& m);

/// Column space of m (the image of the linear map it represents).
Subspace column_space(const Matrix& m);

/// {v : m v in target}; m maps ambient(v) into ambient(target).
Subspace preimage(const Matrix& m, const Subspace& target);

/// Image {m v : v in source} as a subspace of Q(i)^rows(m).
Subspace image_of(const Matrix& m, const Subspace& source);

struct Quotient {
    std::size_t dim = 0;
    /// Rows are numerator basis vectors completing a denominator basis.
    Matrix representatives;
};

/// Quotient numerator/denominator. Requires denominator <= numerator and
/// throws ContainmentError carrying a witness vector otherwise.
Quotient quotient(const Subspace& numerator, const Subspace& denominator);

struct ContainmentError : std::runtime_error {
    ContainmentError(std::string msg, Vec w)
        : std::runtime_error(std::move(msg)), witness(std::move(w)) {}
    Vec witness;
};

}  // namespace gencoh

#endif
