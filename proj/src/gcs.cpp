#include "gencoh/gcs.hpp"

#include <sstream>
#include <stdexcept>

namespace gencoh {

GaussianRational pairing(const DoubleVector& a, const DoubleVector& b) {
    if (a.m != b.m) throw std::invalid_argument("pairing: ambient mismatch");
    GaussianRational s;
    for (std::size_t k = 0; k < a.m; ++k)
        s += a.covec(k) * b.vec(k) + b.covec(k) * a.vec(k);
    return s / GaussianRational(2);
}

Form ce_d_one_form(const LieAlgebra& g, const Form& eta) {
    const std::size_t m = g.dim();
    Form out(m);
    for (const auto& [ij, coeffs] : g.stored_brackets()) {
        auto [i, j] = ij;
        Mask mono = (Mask(1) << i) | (Mask(1) << j);
        for (std::size_t k = 0; k < m; ++k) {
            if (sgn(coeffs[k]) == 0) continue;
            GaussianRational ek = eta.coeff(Mask(1) << k);
            if (!ek.is_zero()) out.add(mono, -(ek * GaussianRational(coeffs[k])));
        }
    }
    return out;
}

DoubleVector dg_bracket(const DoubleVector& a, const DoubleVector& b, const LieAlgebra& g) {
    if (a.m != b.m || a.m != g.dim()) throw std::invalid_argument("dg_bracket: ambient mismatch");
    const std::size_t m = a.m;
    Vec X(m), Y(m);
    Form zeta(m), eta(m);
    for (std::size_t k = 0; k < m; ++k) {
        X[k] = a.vec(k);
        Y[k] = b.vec(k);
        if (!a.covec(k).is_zero()) zeta.add(Mask(1) << k, a.covec(k));
        if (!b.covec(k).is_zero()) eta.add(Mask(1) << k, b.covec(k));
    }
    DoubleVector out(m);
    Vec xy = g.bracket_vectors(X, Y);
    Form lie = interior(X, ce_d_one_form(g, eta)) - interior(Y, ce_d_one_form(g, zeta));
    for (std::size_t k = 0; k < m; ++k) {
        out.vec(k) = xy[k];
        out.covec(k) = lie.coeff(Mask(1) << k);
    }
    return out;
}

Matrix clifford_matrix(const Form& rho) {
    const std::size_t m = rho.ambient();
    Matrix A(std::size_t(1) << m, 2 * m);
    for (std::size_t a = 0; a < 2 * m; ++a) {
        DoubleVector e(m);
        e.coords[a] = GaussianRational(1);
        Form img = clifford(e, rho);
        for (const auto& [mask, c] : img.terms()) A.at(mask, a) = c;
    }
    return A;
}

Subspace annihilator(const Form& rho) {
    if (rho.is_zero()) throw std::invalid_argument("annihilator: zero form");
    return kernel(clifford_matrix(rho));
}

const char* ValidationError::kind_name(Kind k) {
    switch (k) {
        case Kind::Degenerate: return "Degenerate";
        case Kind::NotPure: return "NotPure";
        case Kind::RealIntersection: return "RealIntersection";
        case Kind::NotIntegrable: return "NotIntegrable";
        case Kind::NilcalViolation: return "NilcalViolation";
    }
    return "?";
}

std::vector<DoubleVector> GCStructure::Lbar_basis() const {
    std::vector<DoubleVector> out;
    for (const auto& v : L_basis_) out.push_back(v.conjugate());
    return out;
}

const Matrix& GCStructure::U_basis(int j) const {
    int r = static_cast<int>(n_) - j;
    if (r < 0 || r > static_cast<int>(2 * n_)) throw std::out_of_range("U_basis: bad degree");
    return U_[static_cast<std::size_t>(r)];
}

std::vector<std::size_t> GCStructure::U_dims() const {
    std::vector<std::size_t> out;
    for (int j = static_cast<int>(n_); j >= -static_cast<int>(n_); --j)
        out.push_back(U_dim(j));
    return out;
}

const Matrix& GCStructure::del(int j) const {
    auto it = del_.find(j);
    if (it == del_.end()) throw std::out_of_range("del: bad degree");
    return it->second;
}

const Matrix& GCStructure::delbar(int j) const {
    auto it = delbar_.find(j);
    if (it == delbar_.end()) throw std::out_of_range("delbar: bad degree");
    return it->second;
}

std::optional<Vec> GCStructure::coords_in_U(int j, const Form& f) const {
    const Matrix& B = U_basis(j);
    Vec target = f.to_coords();
    Matrix rhs(target.size(), 1);
    for (std::size_t r = 0; r < target.size(); ++r) rhs.at(r, 0) = target[r];
    auto sol = solve_columns(B.transpose(), rhs);
    if (!sol) return std::nullopt;
    Vec coords(B.rows());
    for (std::size_t r = 0; r < B.rows(); ++r) coords[r] = sol->at(r, 0);
    return coords;
}

Form GCStructure::from_U_coords(int j, const Vec& coords) const {
    const Matrix& B = U_basis(j);
    if (coords.size() != B.rows()) throw std::invalid_argument("from_U_coords: length mismatch");
    Form out(algebra_.dim());
    for (std::size_t r = 0; r < B.rows(); ++r)
        for (std::size_t c = 0; c < B.cols(); ++c)
            if (!B.at(r, c).is_zero()) out.add(static_cast<Mask>(c), coords[r] * B.at(r, c));
    return out;
}

std::optional<int> GCStructure::u_degree(const Form& f) const {
    for (int j = static_cast<int>(n_); j >= -static_cast<int>(n_); --j)
        if (coords_in_U(j, f)) return j;
    return std::nullopt;
}

Form GCStructure::del_of(const Form& f, int j) const {
    auto coords = coords_in_U(j, f);
    if (!coords) throw std::invalid_argument("del_of: form not in U^j");
    if (j == static_cast<int>(n_)) return Form(algebra_.dim());
    return from_U_coords(j + 1, del(j).apply(*coords));
}

Form GCStructure::delbar_of(const Form& f, int j) const {
    auto coords = coords_in_U(j, f);
    if (!coords) throw std::invalid_argument("delbar_of: form not in U^j");
    if (j == -static_cast<int>(n_)) return Form(algebra_.dim());
    return from_U_coords(j - 1, delbar(j).apply(*coords));
}

namespace {

// N x dim matrix whose columns are the U^j basis vectors.
Matrix basis_columns(const Matrix& basis_rows) { return basis_rows.transpose(); }

}  // namespace

Matrix GCStructure::assembled_operator(bool lowering) const {
    const std::size_t N = std::size_t(1) << algebra_.dim();
    Matrix out(N, N);
    std::size_t row_off = 0;  // block offset of U^j in stacked coordinates
    for (int j = static_cast<int>(n_); j >= -static_cast<int>(n_); --j) {
        std::size_t dim_j = U_dim(j);
        const Matrix& op = lowering ? delbar(j) : del(j);
        if (op.rows() > 0) {
            int tgt = lowering ? j - 1 : j + 1;
            // block of U_stack_inv_ extracting U^j coordinates
            Matrix extract(dim_j, N);
            for (std::size_t r = 0; r < dim_j; ++r)
                for (std::size_t c = 0; c < N; ++c) extract.at(r, c) = U_stack_inv_.at(row_off + r, c);
            out = out + basis_columns(U_basis(tgt)) * op * extract;
        }
        row_off += dim_j;
    }
    return out;
}

Matrix GCStructure::assembled_del() const { return assembled_operator(false); }

Matrix GCStructure::assembled_delbar() const { return assembled_operator(true); }

Matrix GCStructure::full_d_matrix() const {
    const std::size_t N = std::size_t(1) << algebra_.dim();
    Matrix D(N, N);
    for (std::size_t mask = 0; mask < N; ++mask) {
        Form df = ce_.apply(Form::monomial(algebra_.dim(), static_cast<Mask>(mask)));
        for (const auto& [tmask, c] : df.terms()) D.at(tmask, mask) = c;
    }
    return D;
}

bool GCStructure::j_grading_check() const {
    const std::size_t N = std::size_t(1) << algebra_.dim();
    Matrix D = full_d_matrix();
    Matrix P = assembled_del();
    Matrix B = assembled_delbar();
    if (!(D - (P + B)).is_zero()) return false;
    // J = sum_j (i j) Proj_j
    Matrix J(N, N);
    std::size_t row_off = 0;
    for (int j = static_cast<int>(n_); j >= -static_cast<int>(n_); --j) {
        std::size_t dim_j = U_dim(j);
        if (dim_j > 0 && j != 0) {
            Matrix extract(dim_j, N);
            for (std::size_t r = 0; r < dim_j; ++r)
                for (std::size_t c = 0; c < N; ++c) extract.at(r, c) = U_stack_inv_.at(row_off + r, c);
            GaussianRational ij = GaussianRational::i() * GaussianRational(j);
            J = J + basis_columns(U_basis(j)) * extract * ij;
        }
        row_off += dim_j;
    }
    Matrix lhs = D * J - J * D;
    Matrix rhs = (P - B) * (-GaussianRational::i());
    return (lhs - rhs).is_zero();
}

// ---------------------------------------------------------------------------
// Validation pipeline
// ---------------------------------------------------------------------------

class GCSBuilder {
public:
    static ValidationResult run(const LieAlgebra& g, const Form& rho, std::size_t expected_type,
                                bool type_known) {
        const std::size_t m = g.dim();
        if (m % 2 != 0) throw std::invalid_argument("validate: algebra dimension must be even");
        if (rho.ambient() != m) throw std::invalid_argument("validate: form ambient mismatch");
        JacobiReport jac = check_jacobi(g);
        if (!jac.ok) throw std::invalid_argument("validate: structure constants violate Jacobi");

        GCStructure s(g);
        s.n_ = m / 2;
        s.rho_ = rho;
        s.ce_ = ce_differential(g);

        Form d_rho = s.ce_.apply(rho);
        s.d_rho_zero_ = d_rho.is_zero();

        Matrix A = clifford_matrix(rho);
        s.L_ = kernel(A);
        if (s.L_.dim() != 2 * s.n_) {
            ValidationError e{ValidationError::Kind::NotPure,
                              "annihilator has dimension " + std::to_string(s.L_.dim()) +
                                  ", expected " + std::to_string(2 * s.n_),
                              rho.str()};
            return e;
        }
        Subspace inter = subspace_intersect(s.L_, s.L_.conjugate());
        if (inter.dim() != 0) {
            DoubleVector w(m, inter.basis().row(0));
            ValidationError e{ValidationError::Kind::RealIntersection,
                              "L meets its conjugate in dimension " + std::to_string(inter.dim()),
                              w.str()};
            return e;
        }

        NilpotencyReport nil = check_nilpotent(g);
        s.nilpotent_ = nil.nilpotent;
        s.step_ = nil.step;

        bool solvable = s.d_rho_zero_ || solve(A, d_rho.to_coords()).has_value();
        if (s.nilpotent_ && !s.d_rho_zero_) {
            // Closedness is the integrability criterion on nilpotent
            // algebras; both facts go into the report.
            ValidationError e{ValidationError::Kind::NilcalViolation,
                              std::string("d rho != 0 on a nilpotent algebra; d rho = w.rho is ") +
                                  (solvable ? "solvable" : "not solvable"),
                              d_rho.str()};
            e.integrability_solvable = solvable;
            return e;
        }
        if (!solvable) {
            ValidationError e{ValidationError::Kind::NotIntegrable,
                              "d rho = w.rho has no solution", d_rho.str()};
            return e;
        }

        for (std::size_t r = 0; r < s.L_.dim(); ++r)
            s.L_basis_.emplace_back(m, s.L_.basis().row(r));

        // Isotropy and bracket closure are theorems once the above checks
        // pass; violations indicate an engine bug.
        for (std::size_t a = 0; a < s.L_basis_.size(); ++a)
            for (std::size_t b = a; b < s.L_basis_.size(); ++b)
                if (!pairing(s.L_basis_[a], s.L_basis_[b]).is_zero())
                    throw std::logic_error("internal invariant: L is not isotropic");
        for (std::size_t a = 0; a < s.L_basis_.size(); ++a)
            for (std::size_t b = a + 1; b < s.L_basis_.size(); ++b) {
                DoubleVector br = dg_bracket(s.L_basis_[a], s.L_basis_[b], g);
                if (!s.L_.contains(br.coords))
                    throw std::logic_error("internal invariant: L is not bracket-closed");
            }

        std::size_t type_from_rho = rho.min_degree();
        if (type_known && type_from_rho != expected_type)
            throw std::logic_error("internal invariant: type of rho does not match spec");
        s.type_k_ = type_from_rho;

        build_decomposition(s);
        split_d(s);
        verify_operator_identities(s);
        return s;
    }

    static void build_decomposition(GCStructure& s) {
        const std::size_t m = s.algebra_.dim();
        const std::size_t N = std::size_t(1) << m;
        const std::size_t two_n = 2 * s.n_;
        auto lbar = s.Lbar_basis();
        s.U_.clear();
        for (std::size_t r = 0; r <= two_n; ++r) {
            std::vector<Vec> rows;
            for (Mask subset = 0; subset < (Mask(1) << two_n); ++subset) {
                if (static_cast<std::size_t>(degree_of(subset)) != r) continue;
                Form f = s.rho_;
                // Apply the subset's Clifford factors from the highest
                // index down, so the product reads ascending left to right.
                for (int k = static_cast<int>(two_n) - 1; k >= 0; --k)
                    if (subset >> k & 1) f = clifford(lbar[static_cast<std::size_t>(k)], f);
                rows.push_back(f.to_coords());
            }
            Subspace span = Subspace::span(Matrix::from_rows(rows, N));
            if (span.dim() != binomial(static_cast<unsigned>(two_n), static_cast<unsigned>(r)))
                throw std::logic_error("internal invariant: U^{n-r} has wrong dimension");
            s.U_.push_back(span.basis());
        }
        // Stack all bases as columns and invert; invertibility is the
        // directness of the decomposition.
        Matrix stack(N, N);
        std::size_t col = 0;
        for (std::size_t r = 0; r <= two_n; ++r)
            for (std::size_t b = 0; b < s.U_[r].rows(); ++b, ++col)
                for (std::size_t x = 0; x < N; ++x) stack.at(x, col) = s.U_[r].at(b, x);
        auto inv = solve_columns(stack, Matrix::identity(N));
        if (!inv || col != N)
            throw std::logic_error("internal invariant: U decomposition is not direct");
        s.U_stack_ = std::move(stack);
        s.U_stack_inv_ = std::move(*inv);
    }

    static void split_d(GCStructure& s) {
        const int n = static_cast<int>(s.n_);
        for (int j = n; j >= -n; --j) {
            const Matrix& Bj = s.U_basis(j);
            std::size_t up = (j < n) ? s.U_dim(j + 1) : 0;
            std::size_t down = (j > -n) ? s.U_dim(j - 1) : 0;
            Matrix del(up, Bj.rows());
            Matrix delbar(down, Bj.rows());
            // Solve d(phi) against the concatenated target bases.
            Matrix targets(std::size_t(1) << s.algebra_.dim(), up + down);
            if (j < n) {
                const Matrix& Up = s.U_basis(j + 1);
                for (std::size_t b = 0; b < up; ++b)
                    for (std::size_t x = 0; x < Up.cols(); ++x) targets.at(x, b) = Up.at(b, x);
            }
            if (j > -n) {
                const Matrix& Dn = s.U_basis(j - 1);
                for (std::size_t b = 0; b < down; ++b)
                    for (std::size_t x = 0; x < Dn.cols(); ++x) targets.at(x, up + b) = Dn.at(b, x);
            }
            Matrix rhs(std::size_t(1) << s.algebra_.dim(), Bj.rows());
            for (std::size_t c = 0; c < Bj.rows(); ++c) {
                Form phi(s.algebra_.dim());
                for (std::size_t x = 0; x < Bj.cols(); ++x)
                    if (!Bj.at(c, x).is_zero()) phi.add(static_cast<Mask>(x), Bj.at(c, x));
                Form dphi = s.ce_.apply(phi);
                for (const auto& [mask, coeff] : dphi.terms()) rhs.at(mask, c) = coeff;
            }
            auto sol = solve_columns(targets, rhs);
            if (!sol)
                throw std::logic_error(
                    "ComponentLeak: d of U^" + std::to_string(j) + " leaves U^{j+1} + U^{j-1}");
            for (std::size_t c = 0; c < Bj.rows(); ++c) {
                for (std::size_t b = 0; b < up; ++b) del.at(b, c) = sol->at(b, c);
                for (std::size_t b = 0; b < down; ++b) delbar.at(b, c) = sol->at(up + b, c);
            }
            s.del_[j] = std::move(del);
            s.delbar_[j] = std::move(delbar);
        }
    }

    static void verify_operator_identities(const GCStructure& s) {
        const int n = static_cast<int>(s.n_);
        for (int j = -n; j <= n; ++j) {
            if (j + 1 <= n)
                if (!(s.del(j + 1) * s.del(j)).is_zero())
                    throw std::logic_error("internal invariant: del^2 != 0");
            if (j - 1 >= -n)
                if (!(s.delbar(j - 1) * s.delbar(j)).is_zero())
                    throw std::logic_error("internal invariant: delbar^2 != 0");
            Matrix anti(s.U_dim(j), s.U_dim(j));
            if (j + 1 <= n) anti = anti + s.delbar(j + 1) * s.del(j);
            if (j - 1 >= -n) anti = anti + s.del(j - 1) * s.delbar(j);
            if (!anti.is_zero())
                throw std::logic_error("internal invariant: del delbar + delbar del != 0");
        }
    }
};

ValidationResult validate(const LieAlgebra& g, const PureFormSpec& spec) {
    spec.validate_shape();
    if (spec.m != g.dim()) throw std::invalid_argument("validate: spec ambient mismatch");
    if (!check_nondegenerate(spec, g.dim() / 2)) {
        return ValidationError{ValidationError::Kind::Degenerate,
                               "omega^{n-k} ^ Omega ^ conj(Omega) = 0", ""};
    }
    return GCSBuilder::run(g, build_pure_form(spec), spec.type_k, true);
}

ValidationResult validate_raw(const LieAlgebra& g, const Form& rho) {
    if (rho.is_zero())
        return ValidationError{ValidationError::Kind::NotPure, "zero form", ""};
    return GCSBuilder::run(g, rho, 0, false);
}

}  // namespace gencoh
