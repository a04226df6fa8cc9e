#ifndef GENCOH_GCS_HPP
#define GENCOH_GCS_HPP

#include "gencoh/lie_algebra.hpp"
#include "gencoh/subspace.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace gencoh {

/// Symmetric pairing <X+zeta, Y+eta> = (zeta(Y)+eta(X))/2 on Dg_C.
GaussianRational pairing(const DoubleVector& a, const DoubleVector& b);

/// Bracket on Dg_C = (g + g*) tensor C: [X+zeta, Y+eta] = [X,Y] + L_X eta
/// - L_Y zeta, with the Lie derivative on invariant covectors reduced to
/// L_X eta = i_X d eta.
DoubleVector dg_bracket(const DoubleVector& a, const DoubleVector& b, const LieAlgebra& g);

/// Ann(rho) = {w in Dg_C : w . rho = 0} as a canonical subspace of the
/// 2m-dimensional Dg_C (coordinates: X parts then covector parts).
Subspace annihilator(const Form& rho);

/// The 2^m x 2m matrix of w -> w . rho in monomial coordinates.
Matrix clifford_matrix(const Form& rho);

struct ValidationError {
    enum class Kind { Degenerate, NotPure, RealIntersection, NotIntegrable, NilcalViolation };
    Kind kind;
    std::string message;
    std::string witness;
    /// For NilcalViolation: whether d rho = w . rho was nevertheless
    /// solvable (both facts are reported).
    bool integrability_solvable = false;

    static const char* kind_name(Kind k);
};

/// A validated generalized complex structure on a Lie algebra.
class GCStructure {
public:
    const LieAlgebra& algebra() const { return algebra_; }
    std::size_t n() const { return n_; }
    std::size_t type_k() const { return type_k_; }
    const Form& rho() const { return rho_; }
    bool nilpotent() const { return nilpotent_; }
    std::size_t nilpotency_step() const { return step_; }
    bool d_rho_zero() const { return d_rho_zero_; }

    const Subspace& L() const { return L_; }
    const std::vector<DoubleVector>& L_basis() const { return L_basis_; }
    std::vector<DoubleVector> Lbar_basis() const;

    /// Basis of U^j (rows, monomial coordinates, RREF-canonical).
    const Matrix& U_basis(int j) const;
    std::size_t U_dim(int j) const { return U_basis(j).rows(); }
    std::vector<std::size_t> U_dims() const;  // j = n .. -n

    /// del: U^j -> U^{j+1} and delbar: U^j -> U^{j-1} in the stored bases.
    const Matrix& del(int j) const;
    const Matrix& delbar(int j) const;

    /// Coordinates of a form in the U^j basis; nullopt if it does not lie
    /// in U^j.
    std::optional<Vec> coords_in_U(int j, const Form& f) const;
    Form from_U_coords(int j, const Vec& coords) const;

    /// Degree of the U-component containing f, if f is homogeneous for
    /// the decomposition.
    std::optional<int> u_degree(const Form& f) const;

    const GradedComplex& ce() const { return ce_; }
    Form d(const Form& f) const { return ce_.apply(f); }

    /// U^{j+1}-component of d(f) for f in U^j, expanded as a form; same
    /// for the lowering part.
    Form del_of(const Form& f, int j) const;
    Form delbar_of(const Form& f, int j) const;

    /// Verifies d J - J d = -i(del - delbar) as exact 2^m x 2^m matrices,
    /// where J acts as multiplication by i*j on U^j.
    bool j_grading_check() const;

    /// Assembled del/delbar as operators on monomial coordinates.
    Matrix assembled_del() const;
    Matrix assembled_delbar() const;

    /// The Chevalley-Eilenberg d on all monomial coordinates.
    Matrix full_d_matrix() const;

    friend class GCSBuilder;

private:
    GCStructure(LieAlgebra g) : algebra_(std::move(g)) {}

    Matrix assembled_operator(bool lowering) const;

    LieAlgebra algebra_;
    std::size_t n_ = 0, type_k_ = 0;
    Form rho_;
    bool nilpotent_ = false;
    std::size_t step_ = 0;
    bool d_rho_zero_ = false;
    Subspace L_{0};
    std::vector<DoubleVector> L_basis_;
    std::vector<Matrix> U_;           // index r = n - j, r = 0..2n
    std::map<int, Matrix> del_, delbar_;
    GradedComplex ce_;
    Matrix U_stack_;      // columns: all U basis vectors, j = n..-n
    Matrix U_stack_inv_;  // its inverse
};

using ValidationResult = std::variant<GCStructure, ValidationError>;

/// Full validation from a pure-form spec: non-degeneracy, purity
/// (dim Ann = 2n), L cap conj(L) = 0, integrability (with the exact
/// d rho = 0 gate on nilpotent algebras), isotropy and bracket closure,
/// the U decomposition with its dimension pattern, and d = del + delbar.
ValidationResult validate(const LieAlgebra& g, const PureFormSpec& spec);

/// Same pipeline starting from an explicit form (used for deformed
/// structures, where no factorization is available); the type is read off
/// as the lowest nonzero degree.
ValidationResult validate_raw(const LieAlgebra& g, const Form& rho);

/// d of an invariant 1-form, d eta = sum eta_k dx_k.
Form ce_d_one_form(const LieAlgebra& g, const Form& eta);

}  // namespace gencoh

#endif
