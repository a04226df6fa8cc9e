#include "gencoh/cohomology.hpp"

#include <bit>
#include <stdexcept>

namespace gencoh {

const char* theory_name(Theory t) {
    switch (t) {
        case Theory::Delbar: return "delbar";
        case Theory::Del: return "del";
        case Theory::BottChern: return "bc";
        case Theory::Aeppli: return "aeppli";
        case Theory::DeRham: return "derham";
        case Theory::Algebroid: return "algebroid";
        case Theory::Dolbeault: return "dolbeault";
    }
    return "?";
}

std::vector<std::size_t> GHTable::dims() const {
    std::vector<std::size_t> out;
    for (const auto& e : entries) out.push_back(e.dim);
    return out;
}

namespace {

// del delbar : U^j -> U^j, with the zero matrix at the bottom edge.
Matrix del_delbar(const GCStructure& s, int j) {
    const int n = static_cast<int>(s.n());
    if (j - 1 < -n) return Matrix(s.U_dim(j), s.U_dim(j));
    return s.del(j - 1) * s.delbar(j);
}

Subspace image_from_above(const GCStructure& s, int j) {
    // im(delbar: U^{j+1} -> U^j)
    const int n = static_cast<int>(s.n());
    if (j + 1 > n) return Subspace::zero(s.U_dim(j));
    return column_space(s.delbar(j + 1));
}

Subspace image_from_below(const GCStructure& s, int j) {
    // im(del: U^{j-1} -> U^j)
    const int n = static_cast<int>(s.n());
    if (j - 1 < -n) return Subspace::zero(s.U_dim(j));
    return column_space(s.del(j - 1));
}

GHTable build_table(const GCStructure& s, Theory t) {
    const int n = static_cast<int>(s.n());
    GHTable table;
    table.theory = t;
    for (int j = n; j >= -n; --j) {
        Subspace num = Subspace::zero(s.U_dim(j));
        Subspace den = Subspace::zero(s.U_dim(j));
        switch (t) {
            case Theory::Delbar:
                num = kernel(s.delbar(j));
                den = image_from_above(s, j);
                break;
            case Theory::Del:
                num = kernel(s.del(j));
                den = image_from_below(s, j);
                break;
            case Theory::BottChern:
                num = subspace_intersect(kernel(s.del(j)), kernel(s.delbar(j)));
                den = column_space(del_delbar(s, j));
                break;
            case Theory::Aeppli:
                num = kernel(del_delbar(s, j));
                den = subspace_sum(image_from_below(s, j), image_from_above(s, j));
                break;
            default:
                throw std::invalid_argument("build_table: not a U-graded theory");
        }
        Quotient q = quotient(num, den);
        GHEntry entry;
        entry.degree = j;
        entry.dim = q.dim;
        for (std::size_t r = 0; r < q.representatives.rows(); ++r) {
            Vec coords = q.representatives.row(r);
            entry.rep_coords.push_back(coords);
            entry.reps.push_back(s.from_U_coords(j, coords));
        }
        table.entries.push_back(std::move(entry));
    }
    return table;
}

}  // namespace

GHTable gh_delbar(const GCStructure& s) { return build_table(s, Theory::Delbar); }
GHTable gh_del(const GCStructure& s) { return build_table(s, Theory::Del); }
GHTable gh_bc(const GCStructure& s) { return build_table(s, Theory::BottChern); }
GHTable gh_aeppli(const GCStructure& s) { return build_table(s, Theory::Aeppli); }

GHTable gh_table(const GCStructure& s, Theory t) { return build_table(s, t); }

bool is_cocycle(const GCStructure& s, Theory t, int j, const Form& f) {
    auto coords = s.coords_in_U(j, f);
    if (!coords) return false;
    switch (t) {
        case Theory::Delbar: {
            Vec img = s.delbar(j).apply(*coords);
            for (const auto& c : img)
                if (!c.is_zero()) return false;
            return true;
        }
        case Theory::Del: {
            Vec img = s.del(j).apply(*coords);
            for (const auto& c : img)
                if (!c.is_zero()) return false;
            return true;
        }
        case Theory::BottChern:
            return is_cocycle(s, Theory::Del, j, f) && is_cocycle(s, Theory::Delbar, j, f);
        case Theory::Aeppli: {
            Vec img = del_delbar(s, j).apply(*coords);
            for (const auto& c : img)
                if (!c.is_zero()) return false;
            return true;
        }
        default:
            throw std::invalid_argument("is_cocycle: not a U-graded theory");
    }
}

bool classes_independent(const GCStructure& s, Theory t, int j, const std::vector<Form>& forms) {
    Subspace den = Subspace::zero(s.U_dim(j));
    switch (t) {
        case Theory::Delbar: den = image_from_above(s, j); break;
        case Theory::Del: den = image_from_below(s, j); break;
        case Theory::BottChern: den = column_space(del_delbar(s, j)); break;
        case Theory::Aeppli:
            den = subspace_sum(image_from_below(s, j), image_from_above(s, j));
            break;
        default:
            throw std::invalid_argument("classes_independent: not a U-graded theory");
    }
    Matrix rows(forms.size(), s.U_dim(j));
    for (std::size_t r = 0; r < forms.size(); ++r) {
        if (!is_cocycle(s, t, j, forms[r])) return false;
        rows.set_row(r, *s.coords_in_U(j, forms[r]));
    }
    Subspace together = subspace_sum(den, row_space(rows));
    return together.dim() == den.dim() + forms.size();
}

// --- symplectic-type oracle -------------------------------------------------

namespace {

// Inverse of the 2-form's Gram matrix W_{ab} = omega(X_a, X_b).
Matrix omega_inverse(const Form& omega) {
    const std::size_t m = omega.ambient();
    Matrix W(m, m);
    for (const auto& [mask, c] : omega.terms()) {
        if (degree_of(mask) != 2) throw std::invalid_argument("omega must be a 2-form");
        int a = std::countr_zero(mask);
        Mask rest = mask & (mask - 1);
        int b = std::countr_zero(rest);
        W.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = c;
        W.at(static_cast<std::size_t>(b), static_cast<std::size_t>(a)) = -c;
    }
    auto inv = solve_columns(W, Matrix::identity(m));
    if (!inv) throw std::invalid_argument("omega is degenerate");
    return *inv;
}

}  // namespace

Form lambda_contract(const Form& omega, const Form& a) {
    const std::size_t m = omega.ambient();
    Matrix Winv = omega_inverse(omega);
    Form out(a.ambient());
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = p + 1; q < m; ++q) {
            const GaussianRational& c = Winv.at(p, q);
            if (c.is_zero()) continue;
            Vec ep(m), eq(m);
            ep[p] = GaussianRational(1);
            eq[q] = GaussianRational(1);
            out = out + interior(ep, interior(eq, a)) * (-c);
        }
    }
    return out;
}

Form symplectic_phi(const Form& omega, const Form& a) {
    const std::size_t m = omega.ambient();
    // e^{Lambda/2i} terminates because Lambda lowers degree by 2.
    Form acc = a;
    Form total(m);
    GaussianRational factor(1);
    GaussianRational half_i_inv = GaussianRational(1) / (GaussianRational(2) * GaussianRational::i());
    for (std::size_t k = 0; k <= m / 2 + 1; ++k) {
        total = total + acc * factor;
        acc = lambda_contract(omega, acc);
        if (acc.is_zero()) break;
        factor *= half_i_inv / GaussianRational(static_cast<long>(k + 1));
    }
    Form e_iw = exp_two_form(omega * GaussianRational::i(), m);
    return wedge(e_iw, total);
}

Form d_lambda(const LieAlgebra& g, const Form& omega, const Form& a) {
    GradedComplex cx = ce_differential(g);
    return cx.apply(lambda_contract(omega, a)) - lambda_contract(omega, cx.apply(a));
}

// --- complex-type bigraded table ---------------------------------------------

std::vector<std::size_t> DolbeaultTable::diagonal_sums() const {
    std::vector<std::size_t> out;
    for (int j = static_cast<int>(n); j >= -static_cast<int>(n); --j) {
        std::size_t total = 0;
        for (std::size_t p = 0; p <= n; ++p)
            for (std::size_t q = 0; q <= n; ++q)
                if (static_cast<int>(p) - static_cast<int>(q) == j) total += h[p][q];
        out.push_back(total);
    }
    return out;
}

DolbeaultTable dolbeault_bigraded(const LieAlgebra& g, const PureFormSpec& J_spec) {
    J_spec.validate_shape();
    const std::size_t m = g.dim();
    const std::size_t n = m / 2;
    if (J_spec.type_k != n)
        throw std::invalid_argument("dolbeault_bigraded: spec is not complex-type (k != n)");

    // Frame: theta_1..theta_n, conj(theta_1)..conj(theta_n).
    std::vector<Form> frame;
    for (const auto& th : J_spec.omega_factors) frame.push_back(th);
    for (const auto& th : J_spec.omega_factors) frame.push_back(th.conjugate());

    const std::size_t N = std::size_t(1) << m;
    Matrix F(N, N);
    std::vector<Mask> all_masks(N);
    for (std::size_t mask = 0; mask < N; ++mask) all_masks[mask] = static_cast<Mask>(mask);
    for (std::size_t col = 0; col < N; ++col) {
        Form prod = Form::scalar(m, GaussianRational(1));
        for (std::size_t k = 0; k < m; ++k)
            if (all_masks[col] >> k & 1) prod = wedge(prod, frame[k]);
        for (const auto& [mask, c] : prod.terms()) F.at(mask, col) = c;
    }
    auto Finv = solve_columns(F, Matrix::identity(N));
    if (!Finv) throw std::invalid_argument("dolbeault_bigraded: frame is degenerate");

    // d in frame coordinates.
    GradedComplex cx = ce_differential(g);
    Matrix D(N, N);
    for (std::size_t mask = 0; mask < N; ++mask) {
        Form df = cx.apply(Form::monomial(m, static_cast<Mask>(mask)));
        for (const auto& [tm, c] : df.terms()) D.at(tm, mask) = c;
    }
    Matrix Dframe = (*Finv) * D * F;

    auto bidegree = [&](Mask mask) {
        std::size_t p = std::popcount(mask & ((Mask(1) << n) - 1));
        std::size_t q = std::popcount(mask >> n);
        return std::make_pair(p, q);
    };

    // Integrability: d of a frame monomial may only raise (p,q) by (1,0)
    // or (0,1).
    for (std::size_t col = 0; col < N; ++col) {
        auto [p, q] = bidegree(all_masks[col]);
        for (std::size_t row = 0; row < N; ++row) {
            if (Dframe.at(row, col).is_zero()) continue;
            auto [tp, tq] = bidegree(all_masks[row]);
            bool ok = (tp == p + 1 && tq == q) || (tp == p && tq == q + 1);
            if (!ok)
                throw std::invalid_argument(
                    "dolbeault_bigraded: the induced almost complex structure is not integrable");
        }
    }

    DolbeaultTable table;
    table.n = n;
    table.h.assign(n + 1, std::vector<std::size_t>(n + 1, 0));
    // delbar: (p,q) -> (p,q+1) blocks of Dframe.
    auto block = [&](std::size_t p, std::size_t q) {
        std::vector<std::size_t> src, tgt;
        for (std::size_t mask = 0; mask < N; ++mask) {
            auto [mp, mq] = bidegree(all_masks[mask]);
            if (mp == p && mq == q) src.push_back(mask);
            if (mp == p && mq == q + 1) tgt.push_back(mask);
        }
        Matrix B(tgt.size(), src.size());
        for (std::size_t cc = 0; cc < src.size(); ++cc)
            for (std::size_t rr = 0; rr < tgt.size(); ++rr) B.at(rr, cc) = Dframe.at(tgt[rr], src[cc]);
        return B;
    };
    for (std::size_t p = 0; p <= n; ++p) {
        for (std::size_t q = 0; q <= n; ++q) {
            Matrix out_map = block(p, q);
            std::size_t ker = out_map.cols() - rank(out_map);
            std::size_t img = (q == 0) ? 0 : rank(block(p, q - 1));
            table.h[p][q] = ker - img;
        }
    }
    return table;
}

}  // namespace gencoh
