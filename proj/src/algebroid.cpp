#include "gencoh/algebroid.hpp"

#include <bit>
#include <stdexcept>

namespace gencoh {

Vec AlgebroidFrame::l_bracket(std::size_t i, std::size_t j) const {
    Vec out(two_n);
    if (i == j) return out;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = l_brackets.find({i, j});
    if (it == l_brackets.end()) return out;
    for (std::size_t k = 0; k < two_n; ++k) out[k] = flip ? -it->second[k] : it->second[k];
    return out;
}

Vec AlgebroidFrame::m_bracket(std::size_t i, std::size_t j) const {
    Vec out(two_n);
    if (i == j) return out;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = m_brackets.find({i, j});
    if (it == m_brackets.end()) return out;
    for (std::size_t k = 0; k < two_n; ++k) out[k] = flip ? -it->second[k] : it->second[k];
    return out;
}

Vec AlgebroidFrame::l_bracket_vectors(const Vec& a, const Vec& b) const {
    if (a.size() != two_n || b.size() != two_n)
        throw std::invalid_argument("l_bracket_vectors: length mismatch");
    Vec out(two_n);
    for (std::size_t i = 0; i < two_n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < two_n; ++j) {
            if (b[j].is_zero() || i == j) continue;
            Vec c = l_bracket(i, j);
            GaussianRational f = a[i] * b[j];
            for (std::size_t k = 0; k < two_n; ++k)
                if (!c[k].is_zero()) out[k] += f * c[k];
        }
    }
    return out;
}

namespace {

Vec expand_in(const std::vector<DoubleVector>& basis, const Vec& coords_4n) {
    Matrix cols(coords_4n.size(), basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (std::size_t x = 0; x < coords_4n.size(); ++x) cols.at(x, b) = basis[b].coords[x];
    auto sol = solve(cols, coords_4n);
    if (!sol) throw std::logic_error("expand_in: vector not in span");
    return *sol;
}

}  // namespace

AlgebroidFrame dual_frame(const GCStructure& s) {
    AlgebroidFrame f;
    f.two_n = 2 * s.n();
    f.base = s.algebra();
    f.l_basis = s.L_basis();
    f.rho = s.rho();
    auto lbar = s.Lbar_basis();

    // Pairing Gram matrix P_ij = <l_i, conj(l_j)>; the dual frame solves
    // C P^T = I, m_j = sum_k C_jk conj(l_k).
    const std::size_t d = f.two_n;
    Matrix P(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) P.at(i, j) = pairing(f.l_basis[i], lbar[j]);
    auto C = solve_columns(P.transpose(), Matrix::identity(d));
    if (!C) throw std::logic_error("dual_frame: pairing between L and conj(L) is singular");
    for (std::size_t j = 0; j < d; ++j) {
        DoubleVector m(s.algebra().dim());
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t x = 0; x < m.coords.size(); ++x)
                m.coords[x] += C->at(k, j) * lbar[k].coords[x];
        f.dual_basis.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (!(pairing(f.l_basis[i], f.dual_basis[j]) ==
                  GaussianRational(i == j ? 1 : 0)))
                throw std::logic_error("dual_frame: duality normalization failed");

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            DoubleVector br = dg_bracket(f.l_basis[i], f.l_basis[j], f.base);
            Vec c = expand_in(f.l_basis, br.coords);
            bool nonzero = false;
            for (const auto& x : c)
                if (!x.is_zero()) nonzero = true;
            if (nonzero) f.l_brackets[{i, j}] = std::move(c);

            DoubleVector mbr = dg_bracket(f.dual_basis[i], f.dual_basis[j], f.base);
            Vec mc = expand_in(f.dual_basis, mbr.coords);
            nonzero = false;
            for (const auto& x : mc)
                if (!x.is_zero()) nonzero = true;
            if (nonzero) f.m_brackets[{i, j}] = std::move(mc);
        }
    return f;
}

GradedComplex dL_complex(const AlgebroidFrame& f) {
    std::vector<Form> d_gen(f.two_n, Form(f.two_n));
    for (const auto& [ij, coeffs] : f.l_brackets) {
        auto [i, j] = ij;
        Mask mono = (Mask(1) << i) | (Mask(1) << j);
        for (std::size_t k = 0; k < f.two_n; ++k)
            if (!coeffs[k].is_zero()) d_gen[k].add(mono, -coeffs[k]);
    }
    return graded_complex_from_generators(f.two_n, d_gen);
}

AlgebroidCohomology algebroid_cohomology(const AlgebroidFrame& f) {
    GradedComplex cx = dL_complex(f);
    AlgebroidCohomology out;
    for (std::size_t k = 0; k <= f.two_n; ++k) {
        Subspace ker_k = kernel(cx.d[k]);
        Subspace img = (k == 0) ? Subspace::zero(cx.bases[k].size()) : column_space(cx.d[k - 1]);
        Quotient q = quotient(ker_k, img);
        out.dims.push_back(q.dim);
        std::vector<Form> reps;
        for (std::size_t r = 0; r < q.representatives.rows(); ++r) {
            Form fm(f.two_n);
            for (std::size_t c = 0; c < cx.bases[k].size(); ++c)
                fm.add(cx.bases[k][c], q.representatives.at(r, c));
            reps.push_back(std::move(fm));
        }
        out.reps.push_back(std::move(reps));
    }
    return out;
}

IsoReport check_iso_U(const AlgebroidFrame& f, const GCStructure& s) {
    if (!s.d_rho_zero())
        return IsoReport{false, 0, "d rho != 0: the identification requires a closed generator"};
    const std::size_t two_n = f.two_n;
    const int n = static_cast<int>(s.n());
    GradedComplex dl = dL_complex(f);

    // psi_r in U-coordinates, with the 2^{-r} normalization induced by the
    // half-weighted pairing.
    std::vector<Matrix> psi(two_n + 1);
    for (std::size_t r = 0; r <= two_n; ++r) {
        const auto& basis_r = dl.bases[r];
        int j = n - static_cast<int>(r);
        Matrix M(s.U_dim(j), basis_r.size());
        GaussianRational scale(1);
        for (std::size_t t = 0; t < r; ++t) scale /= GaussianRational(2);
        for (std::size_t c = 0; c < basis_r.size(); ++c) {
            Form img = s.rho();
            for (int k = static_cast<int>(two_n) - 1; k >= 0; --k)
                if (basis_r[c] >> k & 1) img = clifford(f.dual_basis[static_cast<std::size_t>(k)], img);
            img = img * scale;
            auto coords = s.coords_in_U(j, img);
            if (!coords)
                return IsoReport{false, r, "psi image not in U^" + std::to_string(j)};
            for (std::size_t x = 0; x < coords->size(); ++x) M.at(x, c) = (*coords)[x];
        }
        psi[r] = std::move(M);
    }
    for (std::size_t r = 0; r < two_n; ++r) {
        int j = n - static_cast<int>(r);
        Matrix lhs = psi[r + 1] * dl.d[r];
        Matrix rhs = s.delbar(j) * psi[r];
        if (!(lhs - rhs).is_zero())
            return IsoReport{false, r, "psi d_L != delbar psi in degree " + std::to_string(r)};
    }
    return IsoReport{};
}

Form schouten(const AlgebroidFrame& f, const Form& a, const Form& b) {
    if (a.ambient() != f.two_n || b.ambient() != f.two_n)
        throw std::invalid_argument("schouten: ambient mismatch");
    Form out(f.two_n);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            // positions (1-based) of the factors inside each monomial
            int spos = 0;
            Mask mka = ma;
            while (mka) {
                int ibit = std::countr_zero(mka);
                mka &= mka - 1;
                ++spos;
                int tpos = 0;
                Mask mkb = mb;
                while (mkb) {
                    int jbit = std::countr_zero(mkb);
                    mkb &= mkb - 1;
                    ++tpos;
                    Vec br = f.m_bracket(static_cast<std::size_t>(ibit), static_cast<std::size_t>(jbit));
                    bool nz = false;
                    for (const auto& x : br)
                        if (!x.is_zero()) nz = true;
                    if (!nz) continue;
                    Form bracket1(f.two_n);
                    for (std::size_t k = 0; k < f.two_n; ++k)
                        if (!br[k].is_zero()) bracket1.add(Mask(1) << k, br[k]);
                    Form rest = wedge(Form::monomial(f.two_n, ma & ~(Mask(1) << ibit)),
                                      Form::monomial(f.two_n, mb & ~(Mask(1) << jbit)));
                    Form term = wedge(bracket1, rest) * (ca * cb);
                    if ((spos + tpos) % 2 != 0) term = -term;
                    out = out + term;
                }
            }
        }
    }
    return out;
}

MetricOperators metric_operators(const AlgebroidFrame& f) {
    GradedComplex cx = dL_complex(f);
    const std::size_t top = f.two_n;
    MetricOperators ops;
    ops.dL = cx.d;
    ops.dL_star.resize(top + 1);
    ops.laplacian.resize(top + 1);
    ops.H.resize(top + 1);
    ops.G.resize(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        std::size_t dim_k = cx.bases[k].size();
        ops.dL_star[k] = (k == 0) ? Matrix(0, dim_k) : cx.d[k - 1].conjugate_transpose();
    }
    for (std::size_t k = 0; k <= top; ++k) {
        std::size_t dim_k = cx.bases[k].size();
        Matrix delta(dim_k, dim_k);
        if (k < top) delta = delta + ops.dL_star[k + 1] * ops.dL[k];
        if (k > 0) delta = delta + ops.dL[k - 1] * ops.dL_star[k];
        Subspace ker_d = kernel(delta);
        Subspace img = column_space(delta);
        if (ker_d.dim() + img.dim() != dim_k ||
            subspace_intersect(ker_d, img).dim() != 0)
            throw std::logic_error("metric_operators: ker/im decomposition failed");
        // Change of basis T = [ker | im] columns; H and G are block maps.
        Matrix T(dim_k, dim_k);
        for (std::size_t r = 0; r < ker_d.dim(); ++r)
            for (std::size_t x = 0; x < dim_k; ++x) T.at(x, r) = ker_d.basis().at(r, x);
        for (std::size_t r = 0; r < img.dim(); ++r)
            for (std::size_t x = 0; x < dim_k; ++x)
                T.at(x, ker_d.dim() + r) = img.basis().at(r, x);
        auto Tinv = solve_columns(T, Matrix::identity(dim_k));
        if (!Tinv) throw std::logic_error("metric_operators: basis change singular");
        // Delta restricted to its image, in the image basis.
        Matrix M(img.dim(), img.dim());
        for (std::size_t c = 0; c < img.dim(); ++c) {
            Vec y = delta.apply(img.basis().row(c));
            Matrix cols(dim_k, img.dim());
            for (std::size_t b = 0; b < img.dim(); ++b)
                for (std::size_t x = 0; x < dim_k; ++x) cols.at(x, b) = img.basis().at(b, x);
            auto coords = solve(cols, y);
            if (!coords) throw std::logic_error("metric_operators: image not invariant");
            for (std::size_t r = 0; r < img.dim(); ++r) M.at(r, c) = (*coords)[r];
        }
        auto Minv = solve_columns(M, Matrix::identity(img.dim()));
        if (!Minv) throw std::logic_error("metric_operators: Delta not invertible on image");
        Matrix Hblock(dim_k, dim_k), Gblock(dim_k, dim_k);
        for (std::size_t r = 0; r < ker_d.dim(); ++r) Hblock.at(r, r) = GaussianRational(1);
        for (std::size_t r = 0; r < img.dim(); ++r)
            for (std::size_t c = 0; c < img.dim(); ++c)
                Gblock.at(ker_d.dim() + r, ker_d.dim() + c) = Minv->at(r, c);
        ops.H[k] = T * Hblock * (*Tinv);
        ops.G[k] = T * Gblock * (*Tinv);
        ops.laplacian[k] = std::move(delta);
    }
    return ops;
}

Subspace harmonic_space(const MetricOperators& ops, std::size_t k) {
    return kernel(ops.laplacian[k]);
}

}  // namespace gencoh
