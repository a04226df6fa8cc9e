#include "gencoh/deform.hpp"

#include <bit>
#include <stdexcept>

namespace gencoh {

Form mc_residual(const AlgebroidFrame& f, const Form& eps) {
    if (!eps.is_zero() && !eps.is_homogeneous(2))
        throw std::invalid_argument("mc_residual: epsilon must have degree 2");
    GradedComplex dl = dL_complex(f);
    return dl.apply(eps) + schouten(f, eps, eps) * (GaussianRational(1) / GaussianRational(2));
}

std::vector<DoubleVector> deformed_L_basis(const AlgebroidFrame& f, const Form& eps) {
    const std::size_t two_n = f.two_n;
    std::vector<DoubleVector> out;
    for (std::size_t i = 0; i < two_n; ++i) {
        DoubleVector v = f.l_basis[i];
        for (const auto& [mask, c] : eps.terms()) {
            int a = std::countr_zero(mask);
            Mask rest = mask & (mask - 1);
            int b = std::countr_zero(rest);
            // i_{l_i}(m_a ^ m_b) = delta_ia m_b - delta_ib m_a
            const DoubleVector* add = nullptr;
            GaussianRational coeff = c;
            if (static_cast<std::size_t>(a) == i) {
                add = &f.dual_basis[static_cast<std::size_t>(b)];
            } else if (static_cast<std::size_t>(b) == i) {
                add = &f.dual_basis[static_cast<std::size_t>(a)];
                coeff = -coeff;
            }
            if (add)
                for (std::size_t x = 0; x < v.coords.size(); ++x)
                    v.coords[x] += coeff * add->coords[x];
        }
        out.push_back(std::move(v));
    }
    return out;
}

bool involutive(const std::vector<DoubleVector>& basis, const LieAlgebra& g) {
    if (basis.empty()) return true;
    Matrix rows(basis.size(), basis[0].coords.size());
    for (std::size_t r = 0; r < basis.size(); ++r) rows.set_row(r, basis[r].coords);
    Subspace span = Subspace::span(rows);
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b)
            if (!span.contains(dg_bracket(basis[a], basis[b], g).coords)) return false;
    return true;
}

Form KuranishiSeries::partial_sum() const {
    if (terms.empty()) return Form(0);
    Form out = terms[0];
    for (std::size_t r = 1; r < terms.size(); ++r) out = out + terms[r];
    return out;
}

KuranishiSeries kuranishi(const AlgebroidFrame& f, const MetricOperators& ops, const Form& e1,
                          std::size_t N) {
    if (!e1.is_zero() && !e1.is_homogeneous(2))
        throw std::invalid_argument("kuranishi: eps_1 must have degree 2");
    GradedComplex dl = dL_complex(f);
    auto coords2 = [&](const Form& x) {
        Vec v(dl.bases[2].size());
        for (const auto& [mask, c] : x.terms()) {
            const auto& basis = dl.bases[2];
            std::size_t idx = std::lower_bound(basis.begin(), basis.end(), mask) - basis.begin();
            v[idx] = c;
        }
        return v;
    };
    auto coords3 = [&](const Form& x) {
        Vec v(dl.bases[3].size());
        for (const auto& [mask, c] : x.terms()) {
            const auto& basis = dl.bases[3];
            std::size_t idx = std::lower_bound(basis.begin(), basis.end(), mask) - basis.begin();
            v[idx] = c;
        }
        return v;
    };
    Vec e1c = coords2(e1);
    Vec he1 = ops.H[2].apply(e1c);
    if (he1 != e1c) throw std::invalid_argument("kuranishi: eps_1 is not harmonic");

    KuranishiSeries series;
    series.terms.push_back(e1);
    GaussianRational half = GaussianRational(1) / GaussianRational(2);
    for (std::size_t r = 2; r <= N; ++r) {
        Form bracket_sum(f.two_n);
        for (std::size_t s = 1; s < r; ++s)
            bracket_sum = bracket_sum + schouten(f, series.terms[s - 1], series.terms[r - s - 1]);
        Vec v = coords3(bracket_sum);
        Vec g = ops.G[3].apply(v);
        Vec star = ops.dL_star[3].apply(g);  // degree 3 -> 2
        Form eps_r(f.two_n);
        for (std::size_t x = 0; x < star.size(); ++x)
            if (!star[x].is_zero()) eps_r.add(dl.bases[2][x], star[x] * half);
        series.terms.push_back(std::move(eps_r));
    }
    return series;
}

Form mc_residual_order(const AlgebroidFrame& f, const KuranishiSeries& series, std::size_t h) {
    if (h == 0 || h > series.terms.size() * 2)
        throw std::invalid_argument("mc_residual_order: order out of range");
    GradedComplex dl = dL_complex(f);
    Form out(f.two_n);
    if (h <= series.terms.size()) out = dl.apply(series.terms[h - 1]);
    GaussianRational half = GaussianRational(1) / GaussianRational(2);
    for (std::size_t s = 1; s < h; ++s) {
        std::size_t u = h - s;
        if (s > series.terms.size() || u > series.terms.size()) continue;
        out = out + schouten(f, series.terms[s - 1], series.terms[u - 1]) * half;
    }
    return out;
}

Matrix clifford_operator(const DoubleVector& v) {
    const std::size_t m = v.m;
    const std::size_t N = std::size_t(1) << m;
    Matrix M(N, N);
    for (std::size_t mask = 0; mask < N; ++mask) {
        Form img = clifford(v, Form::monomial(m, static_cast<Mask>(mask)));
        for (const auto& [tm, c] : img.terms()) M.at(tm, mask) = c;
    }
    return M;
}

ValidationResult deformed_structure(const GCStructure& s, const AlgebroidFrame& f, const Form& eps) {
    Form residual = mc_residual(f, eps);
    if (!residual.is_zero())
        return ValidationError{ValidationError::Kind::NotIntegrable,
                               "Maurer-Cartan residual is nonzero", residual.str()};
    auto basis = deformed_L_basis(f, eps);
    Matrix rows(basis.size(), basis[0].coords.size());
    for (std::size_t r = 0; r < basis.size(); ++r) rows.set_row(r, basis[r].coords);
    Subspace L_eps = Subspace::span(rows);
    if (subspace_intersect(L_eps, L_eps.conjugate()).dim() != 0)
        return ValidationError{ValidationError::Kind::RealIntersection,
                               "deformed L meets its conjugate; epsilon is not small in the exact sense",
                               ""};
    // Annihilator line of L_eps.
    const std::size_t N = std::size_t(1) << s.algebra().dim();
    Matrix stacked(0, N);
    for (const auto& v : basis) stacked = Matrix::vstack(stacked, clifford_operator(v));
    Subspace K = kernel(stacked);
    if (K.dim() != 1)
        return ValidationError{ValidationError::Kind::NotPure,
                               "deformed annihilator line has dimension " + std::to_string(K.dim()),
                               ""};
    Form rho_eps = Form::from_coords(s.algebra().dim(), K.basis().row(0));
    return validate_raw(s.algebra(), rho_eps);
}

}  // namespace gencoh
