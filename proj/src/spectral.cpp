#include "gencoh/spectral.hpp"

#include <bit>
#include <stdexcept>

namespace gencoh {

Subspace FilteredComplex::filtration(std::size_t degree, int p) const {
    const std::size_t dim_k = cx.bases[degree].size();
    if (p <= 0) return Subspace::full(dim_k);
    if (static_cast<std::size_t>(p) >= p_len) return Subspace::zero(dim_k);
    return F[degree][static_cast<std::size_t>(p)];
}

std::size_t SpectralPage::dim(int p, int q) const {
    auto it = cells.find({p, q});
    return it == cells.end() ? 0 : it->second.dim;
}

std::vector<std::size_t> SpectralPage::totals(std::size_t degree_max) const {
    std::vector<std::size_t> out(degree_max + 1, 0);
    for (const auto& [pq, cell] : cells) {
        int k = pq.first + pq.second;
        if (k >= 0 && k <= static_cast<int>(degree_max)) out[static_cast<std::size_t>(k)] += cell.dim;
    }
    return out;
}

namespace {

void check_ideal(const AlgebroidFrame& f, const Subspace& S) {
    if (S.ambient() != f.two_n) throw std::invalid_argument("S must live in l-coordinates");
    for (std::size_t i = 0; i < f.two_n; ++i) {
        Vec ei(f.two_n);
        ei[i] = GaussianRational(1);
        for (std::size_t r = 0; r < S.dim(); ++r) {
            Vec br = f.l_bracket_vectors(ei, S.basis().row(r));
            if (!S.contains(br)) {
                throw NotAnIdealError(
                    "[l_" + std::to_string(i + 1) + ", s_" + std::to_string(r + 1) +
                        "] leaves the subspace",
                    "bracket with basis vector " + std::to_string(r + 1));
            }
        }
    }
}

// Degree-k coordinates of a lambda-ambient form.
Vec degree_coords(const GradedComplex& cx, std::size_t k, const Form& f) {
    const auto& basis = cx.bases[k];
    Vec v(basis.size());
    for (const auto& [mask, c] : f.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), mask);
        if (it == basis.end() || *it != mask)
            throw std::logic_error("degree_coords: form not homogeneous of expected degree");
        v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
}

}  // namespace

FilteredComplex hs_filtration(const AlgebroidFrame& f, const Subspace& S) {
    check_ideal(f, S);
    const std::size_t two_n = f.two_n;
    const std::size_t h = S.dim();
    const std::size_t c = two_n - h;

    FilteredComplex fc;
    fc.cx = dL_complex(f);
    fc.p_len = c + 1;

    // Adapted frame: complement vectors first, then the ideal's basis.
    Quotient comp = quotient(Subspace::full(two_n), S);
    Matrix Q(two_n, two_n);
    for (std::size_t r = 0; r < c; ++r) Q.set_row(r, comp.representatives.row(r));
    for (std::size_t r = 0; r < h; ++r) Q.set_row(c + r, S.basis().row(r));
    auto Pinv = solve_columns(Q.transpose(), Matrix::identity(two_n));
    if (!Pinv) throw std::logic_error("hs_filtration: adapted frame is singular");
    // Dual 1-forms of the adapted frame, as forms in lambda-coordinates:
    // mu_r = sum_k P_rk lambda_k with P = (Q^T)^{-1} read row-wise.
    std::vector<Form> mu;
    for (std::size_t r = 0; r < two_n; ++r) {
        Form m1(two_n);
        for (std::size_t k = 0; k < two_n; ++k) m1.add(Mask(1) << k, Pinv->at(k, r));
        mu.push_back(std::move(m1));
    }

    fc.F.resize(two_n + 1);
    for (std::size_t k = 0; k <= two_n; ++k) {
        const std::size_t dim_k = fc.cx.bases[k].size();
        fc.F[k].assign(fc.p_len + 1, Subspace::zero(dim_k));
        // Adapted monomials of degree k, bucketed by their count of
        // complement factors.
        std::vector<std::vector<Vec>> buckets(c + 1);
        for (Mask mask = 0; mask < (Mask(1) << two_n); ++mask) {
            if (static_cast<std::size_t>(degree_of(mask)) != k) continue;
            std::size_t t_count = static_cast<std::size_t>(std::popcount(mask & ((Mask(1) << c) - 1)));
            Form prod = Form::scalar(two_n, GaussianRational(1));
            for (std::size_t b = 0; b < two_n; ++b)
                if (mask >> b & 1) prod = wedge(prod, mu[b]);
            buckets[t_count].push_back(degree_coords(fc.cx, k, prod));
        }
        for (std::size_t p = 0; p <= c; ++p) {
            std::vector<Vec> rows;
            for (std::size_t t = p; t <= c; ++t)
                for (const auto& v : buckets[t]) rows.push_back(v);
            fc.F[k][p] = Subspace::span(Matrix::from_rows(rows, dim_k));
        }
        // F[k][p_len] stays zero.
    }

    // Compatibility d F^p <= F^p.
    for (std::size_t k = 0; k < two_n; ++k)
        for (std::size_t p = 0; p <= c; ++p) {
            Subspace img = image_of(fc.cx.d[k], fc.F[k][p]);
            if (!fc.F[k + 1][p].contains(img))
                throw std::logic_error("hs_filtration: d does not preserve the filtration");
        }
    return fc;
}

namespace {

// Z_r^{p,q} = F^p(C^{p+q}) cap d^{-1} F^{p+r}(C^{p+q+1}).
Subspace z_space(const FilteredComplex& fc, int r, int p, int q) {
    int k = p + q;
    int m = static_cast<int>(fc.cx.m);
    if (k < 0 || k > m) return Subspace::zero(0);
    Subspace base = fc.filtration(static_cast<std::size_t>(k), p);
    if (k == m) return base;  // d vanishes out of the top degree
    Subspace target = fc.filtration(static_cast<std::size_t>(k + 1), p + r);
    return subspace_intersect(base, preimage(fc.cx.d[static_cast<std::size_t>(k)], target));
}

// Denominator d Z_{r-1}^{p-r+1, q+r-2} + Z_{r-1}^{p+1, q-1}.
Subspace b_space(const FilteredComplex& fc, int r, int p, int q) {
    int k = p + q;
    std::size_t dim_k = fc.cx.bases[static_cast<std::size_t>(k)].size();
    Subspace out = Subspace::zero(dim_k);
    int sp = p - r + 1, sq = q + r - 2;
    if (sp + sq >= 0 && sp + sq <= static_cast<int>(fc.cx.m) && sp + sq == k - 1) {
        Subspace zprev = z_space(fc, r - 1, sp, sq);
        if (zprev.ambient() > 0 && k >= 1)
            out = subspace_sum(out, image_of(fc.cx.d[static_cast<std::size_t>(k - 1)], zprev));
    }
    Subspace zsame = z_space(fc, r - 1, p + 1, q - 1);
    if (zsame.ambient() == dim_k) out = subspace_sum(out, zsame);
    return out;
}

}  // namespace

std::vector<SpectralPage> pages(const FilteredComplex& fc, std::size_t r_max) {
    const int m = static_cast<int>(fc.cx.m);
    const int pmax = static_cast<int>(fc.p_len) - 1;
    std::vector<SpectralPage> out;
    for (std::size_t r = 0; r <= r_max; ++r) {
        SpectralPage page;
        page.r = r;
        // Cell spaces and representatives.
        for (int k = 0; k <= m; ++k) {
            for (int p = 0; p <= std::min(k, pmax); ++p) {
                int q = k - p;
                Subspace Z = z_space(fc, static_cast<int>(r), p, q);
                Subspace B = b_space(fc, static_cast<int>(r), p, q);
                Quotient qt = quotient(Z, B);
                SpectralCell cell;
                cell.dim = qt.dim;
                cell.reps = qt.representatives;
                page.cells[{p, q}] = std::move(cell);
            }
        }
        // Differentials d_r: (p,q) -> (p+r, q-r+1).
        for (auto& [pq, cell] : page.cells) {
            auto [p, q] = pq;
            int tk = p + q + 1;
            auto tgt_it = page.cells.find({p + static_cast<int>(r), q - static_cast<int>(r) + 1});
            if (tk > m || tgt_it == page.cells.end()) {
                cell.d_r = Matrix(0, cell.dim);
                continue;
            }
            const SpectralCell& tgt = tgt_it->second;
            Subspace tgt_den = b_space(fc, static_cast<int>(r), p + static_cast<int>(r),
                                       q - static_cast<int>(r) + 1);
            // Solve d(rep) against [target reps | target denominator].
            std::size_t tdim = fc.cx.bases[static_cast<std::size_t>(tk)].size();
            Matrix cols(tdim, tgt.dim + tgt_den.dim());
            for (std::size_t b = 0; b < tgt.dim; ++b)
                for (std::size_t x = 0; x < tdim; ++x) cols.at(x, b) = tgt.reps.at(b, x);
            for (std::size_t b = 0; b < tgt_den.dim(); ++b)
                for (std::size_t x = 0; x < tdim; ++x)
                    cols.at(x, tgt.dim + b) = tgt_den.basis().at(b, x);
            Matrix rhs(tdim, cell.dim);
            for (std::size_t cidx = 0; cidx < cell.dim; ++cidx) {
                Vec img = fc.cx.d[static_cast<std::size_t>(p + q)].apply(cell.reps.row(cidx));
                for (std::size_t x = 0; x < tdim; ++x) rhs.at(x, cidx) = img[x];
            }
            auto sol = solve_columns(cols, rhs);
            if (!sol) throw std::logic_error("pages: d_r image leaves the target cell");
            Matrix dr(tgt.dim, cell.dim);
            for (std::size_t rr = 0; rr < tgt.dim; ++rr)
                for (std::size_t cc = 0; cc < cell.dim; ++cc) dr.at(rr, cc) = sol->at(rr, cc);
            cell.d_r = std::move(dr);
        }
        // d_r o d_r = 0 and the ker/im consistency with the next page.
        for (const auto& [pq, cell] : page.cells) {
            auto [p, q] = pq;
            auto tgt = page.cells.find({p + static_cast<int>(r), q - static_cast<int>(r) + 1});
            if (tgt == page.cells.end()) continue;
            if (tgt->second.d_r.rows() > 0 && cell.d_r.rows() > 0)
                if (!(tgt->second.d_r * cell.d_r).is_zero())
                    throw std::logic_error("pages: d_r^2 != 0");
        }
        if (!out.empty()) {
            const SpectralPage& prev = out.back();
            for (const auto& [pq, cell] : page.cells) {
                auto [p, q] = pq;
                auto prev_cell = prev.cells.find(pq);
                if (prev_cell == prev.cells.end()) continue;
                std::size_t ker_dim = prev_cell->second.dim - rank(prev_cell->second.d_r);
                std::size_t img_dim = 0;
                auto src = prev.cells.find({p - static_cast<int>(r) + 1, q + static_cast<int>(r) - 2});
                if (src != prev.cells.end()) img_dim = rank(src->second.d_r);
                if (cell.dim != ker_dim - img_dim)
                    throw std::logic_error("pages: E_{r+1} is not ker/im of page r");
            }
        }
        out.push_back(std::move(page));
    }
    return out;
}

SpectralPage einfty(const FilteredComplex& fc) {
    return pages(fc, fc.p_len + 1).back();
}

std::vector<std::size_t> total_cohomology_dims(const GradedComplex& cx) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k <= cx.m; ++k) {
        std::size_t ker_dim = cx.bases[k].size() - rank(cx.d[k]);
        std::size_t img_dim = (k == 0) ? 0 : rank(cx.d[k - 1]);
        out.push_back(ker_dim - img_dim);
    }
    return out;
}

std::map<std::pair<int, int>, std::size_t> e2_direct(const AlgebroidFrame& f, const Subspace& S) {
    check_ideal(f, S);
    const std::size_t two_n = f.two_n;
    const std::size_t h = S.dim();
    const std::size_t c = two_n - h;

    Quotient comp = quotient(Subspace::full(two_n), S);

    // Structure constants of S in its own basis.
    auto expand_in_rows = [&](const Matrix& rows, const Vec& v) {
        Matrix cols = rows.transpose();
        auto sol = solve(cols, v);
        if (!sol) throw std::logic_error("e2_direct: expansion failed");
        return *sol;
    };
    std::vector<Form> dS_gen(h, Form(h));
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = i + 1; j < h; ++j) {
            Vec br = f.l_bracket_vectors(S.basis().row(i), S.basis().row(j));
            Vec cc = expand_in_rows(S.basis(), br);
            Mask mono = (Mask(1) << i) | (Mask(1) << j);
            for (std::size_t k = 0; k < h; ++k)
                if (!cc[k].is_zero()) dS_gen[k].add(mono, -cc[k]);
        }
    GradedComplex cxS = graded_complex_from_generators(h, dS_gen);

    // H^q(S) with representative coordinates.
    std::vector<Matrix> reps_q(h + 1);         // rows: representatives
    std::vector<Subspace> bdry_q(h + 1, Subspace::zero(0));
    for (std::size_t q = 0; q <= h; ++q) {
        Subspace ker_q = kernel(cxS.d[q]);
        Subspace img =
            (q == 0) ? Subspace::zero(cxS.bases[q].size()) : column_space(cxS.d[q - 1]);
        Quotient qt = quotient(ker_q, img);
        reps_q[q] = qt.representatives;
        bdry_q[q] = img;
    }

    // Action of the complement frame on wedge^q S* (coadjoint derivation),
    // then induced on H^q(S).
    std::vector<Matrix> ad(c, Matrix(h, h));  // [t_a, s_j] = sum_k ad[a](k,j) s_k
    for (std::size_t a = 0; a < c; ++a)
        for (std::size_t j = 0; j < h; ++j) {
            Vec br = f.l_bracket_vectors(comp.representatives.row(a), S.basis().row(j));
            if (!S.contains(br)) throw std::logic_error("e2_direct: not an ideal");
            Vec cc = expand_in_rows(S.basis(), br);
            for (std::size_t k = 0; k < h; ++k) ad[a].at(k, j) = cc[k];
        }
    auto theta_on_monomial = [&](std::size_t a, std::size_t q, Mask mono) {
        Form out(h);
        Mask mm = mono;
        while (mm) {
            int i = std::countr_zero(mm);
            mm &= mm - 1;
            // theta_a sigma_i = -sum_j ad[a](i,j) sigma_j
            Form repl(h);
            for (std::size_t j = 0; j < h; ++j)
                if (!ad[a].at(static_cast<std::size_t>(i), j).is_zero())
                    repl.add(Mask(1) << j, -ad[a].at(static_cast<std::size_t>(i), j));
            int below = std::popcount(mono & ((Mask(1) << i) - 1));
            Form term = wedge(repl, Form::monomial(h, mono & ~(Mask(1) << i)));
            if (below % 2 != 0) term = -term;
            out = out + term;
        }
        (void)q;
        return out;
    };
    // Module matrices on H^q(S).
    std::vector<std::vector<Matrix>> module(h + 1, std::vector<Matrix>(c));
    for (std::size_t q = 0; q <= h; ++q) {
        std::size_t hd = reps_q[q].rows();
        for (std::size_t a = 0; a < c; ++a) {
            Matrix M(hd, hd);
            std::size_t amb = cxS.bases[q].size();
            Matrix cols(amb, hd + bdry_q[q].dim());
            for (std::size_t b = 0; b < hd; ++b)
                for (std::size_t x = 0; x < amb; ++x) cols.at(x, b) = reps_q[q].at(b, x);
            for (std::size_t b = 0; b < bdry_q[q].dim(); ++b)
                for (std::size_t x = 0; x < amb; ++x)
                    cols.at(x, hd + b) = bdry_q[q].basis().at(b, x);
            for (std::size_t ridx = 0; ridx < hd; ++ridx) {
                Form rep(h);
                for (std::size_t x = 0; x < amb; ++x)
                    if (!reps_q[q].at(ridx, x).is_zero()) rep.add(cxS.bases[q][x], reps_q[q].at(ridx, x));
                Form img(h);
                for (const auto& [mask, coeff] : rep.terms())
                    img = img + theta_on_monomial(a, q, mask) * coeff;
                Vec v = degree_coords(cxS, q, img);
                auto sol = solve(cols, v);
                if (!sol) throw std::logic_error("e2_direct: action does not preserve cocycles");
                for (std::size_t rr = 0; rr < hd; ++rr) M.at(rr, ridx) = (*sol)[rr];
            }
            module[q][a] = std::move(M);
        }
    }

    // Quotient algebra structure constants gamma^c_ab.
    std::vector<std::vector<Vec>> gamma(c, std::vector<Vec>(c, Vec(c)));
    Matrix adapted(two_n, two_n);
    for (std::size_t r = 0; r < c; ++r) adapted.set_row(r, comp.representatives.row(r));
    for (std::size_t r = 0; r < h; ++r) adapted.set_row(c + r, S.basis().row(r));
    for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = a + 1; b < c; ++b) {
            Vec br = f.l_bracket_vectors(comp.representatives.row(a), comp.representatives.row(b));
            Vec cc = expand_in_rows(adapted, br);
            for (std::size_t k = 0; k < c; ++k) {
                gamma[a][b][k] = cc[k];
                gamma[b][a][k] = -cc[k];
            }
        }
    std::vector<Form> dQ_gen(c, Form(c));
    for (std::size_t a = 0; a < c; ++a)
        for (std::size_t b = a + 1; b < c; ++b) {
            Mask mono = (Mask(1) << a) | (Mask(1) << b);
            for (std::size_t k = 0; k < c; ++k)
                if (!gamma[a][b][k].is_zero()) dQ_gen[k].add(mono, -gamma[a][b][k]);
        }
    GradedComplex cxQ = graded_complex_from_generators(c, dQ_gen);

    // Verify the rep property on each H^q(S): [M_a, M_b] = sum gamma M_k.
    for (std::size_t q = 0; q <= h; ++q)
        for (std::size_t a = 0; a < c; ++a)
            for (std::size_t b = a + 1; b < c; ++b) {
                Matrix comm = module[q][a] * module[q][b] - module[q][b] * module[q][a];
                Matrix expect(reps_q[q].rows(), reps_q[q].rows());
                for (std::size_t k = 0; k < c; ++k)
                    if (!gamma[a][b][k].is_zero()) expect = expect + module[q][k] * gamma[a][b][k];
                if (!(comm - expect).is_zero())
                    throw std::logic_error("e2_direct: induced action is not a representation");
            }

    // CE of Q with coefficients in H^q(S): basis (P-mask, module index).
    std::map<std::pair<int, int>, std::size_t> out;
    for (std::size_t q = 0; q <= h; ++q) {
        std::size_t hd = reps_q[q].rows();
        auto dim_c = [&](std::size_t p) { return cxQ.bases[p].size() * hd; };
        auto build_d = [&](std::size_t p) {
            std::size_t next = (p < c) ? cxQ.bases[p + 1].size() : 0;
            Matrix D(next * hd, dim_c(p));
            if (p >= c) return D;
            for (std::size_t col_mask = 0; col_mask < cxQ.bases[p].size(); ++col_mask) {
                Mask P = cxQ.bases[p][col_mask];
                for (std::size_t u = 0; u < hd; ++u) {
                    std::size_t col = col_mask * hd + u;
                    // scalar part: d_Q(sigma_P) tensor u
                    Form dqp(c);
                    {
                        Form mono = Form::monomial(c, P);
                        dqp = cxQ.apply(mono);
                    }
                    for (const auto& [mask, coeff] : dqp.terms()) {
                        const auto& nb = cxQ.bases[p + 1];
                        std::size_t row_mask =
                            std::lower_bound(nb.begin(), nb.end(), mask) - nb.begin();
                        D.at(row_mask * hd + u, col) += coeff;
                    }
                    // action part: sum_a sigma_a ^ sigma_P tensor M_a u
                    for (std::size_t a = 0; a < c; ++a) {
                        if (P >> a & 1) continue;
                        Mask target = P | (Mask(1) << a);
                        int sign = merge_sign(Mask(1) << a, P);
                        const auto& nb = cxQ.bases[p + 1];
                        std::size_t row_mask =
                            std::lower_bound(nb.begin(), nb.end(), target) - nb.begin();
                        for (std::size_t v = 0; v < hd; ++v) {
                            GaussianRational entry = module[q][a].at(v, u);
                            if (entry.is_zero()) continue;
                            if (sign < 0) entry = -entry;
                            D.at(row_mask * hd + v, col) += entry;
                        }
                    }
                }
            }
            return D;
        };
        std::vector<Matrix> D(c + 1);
        for (std::size_t p = 0; p <= c; ++p) D[p] = build_d(p);
        for (std::size_t p = 0; p + 1 <= c; ++p)
            if (!(D[p + 1] * D[p]).is_zero())
                throw std::logic_error("e2_direct: coefficient complex differential fails d^2=0");
        for (std::size_t p = 0; p <= c; ++p) {
            std::size_t ker_dim = dim_c(p) - rank(D[p]);
            std::size_t img_dim = (p == 0) ? 0 : rank(D[p - 1]);
            out[{static_cast<int>(p), static_cast<int>(q)}] = ker_dim - img_dim;
        }
    }
    return out;
}

}  // namespace gencoh
