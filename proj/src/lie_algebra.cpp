#include "gencoh/lie_algebra.hpp"

#include "gencoh/subspace.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace gencoh {

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const std::vector<Rational>& coeffs) {
    if (i >= j) throw std::invalid_argument("set_bracket: requires i < j");
    if (j >= dim_) throw std::invalid_argument("set_bracket: index out of range");
    if (coeffs.size() != dim_) throw std::invalid_argument("set_bracket: coefficient length");
    bool all_zero = true;
    for (const auto& c : coeffs)
        if (sgn(c) != 0) all_zero = false;
    if (all_zero)
        brackets_.erase({i, j});
    else
        brackets_[{i, j}] = coeffs;
}

std::vector<Rational> LieAlgebra::bracket(std::size_t i, std::size_t j) const {
    std::vector<Rational> out(dim_, Rational(0));
    if (i == j) return out;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = brackets_.find({i, j});
    if (it == brackets_.end()) return out;
    for (std::size_t k = 0; k < dim_; ++k) out[k] = flip ? Rational(-it->second[k]) : it->second[k];
    return out;
}

Vec LieAlgebra::bracket_vectors(const Vec& a, const Vec& b) const {
    if (a.size() != dim_ || b.size() != dim_)
        throw std::invalid_argument("bracket_vectors: length mismatch");
    Vec out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (b[j].is_zero() || i == j) continue;
            auto c = bracket(i, j);
            GaussianRational f = a[i] * b[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (sgn(c[k]) != 0) out[k] += f * GaussianRational(c[k]);
        }
    }
    return out;
}

JacobiReport check_jacobi(const LieAlgebra& g) {
    const std::size_t m = g.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                std::vector<Rational> sum(m, Rational(0));
                auto add_term = [&](std::size_t a, std::size_t b, std::size_t c) {
                    // [[X_a, X_b], X_c]
                    auto ab = g.bracket(a, b);
                    for (std::size_t t = 0; t < m; ++t) {
                        if (sgn(ab[t]) == 0) continue;
                        auto tc = g.bracket(t, c);
                        for (std::size_t s = 0; s < m; ++s) sum[s] += ab[t] * tc[s];
                    }
                };
                add_term(i, j, k);
                add_term(j, k, i);
                add_term(k, i, j);
                for (std::size_t s = 0; s < m; ++s)
                    if (sgn(sum[s]) != 0)
                        return JacobiReport{false, i + 1, j + 1, k + 1, sum};
            }
    return JacobiReport{};
}

NilpotencyReport check_nilpotent(const LieAlgebra& g) {
    const std::size_t m = g.dim();
    // Lower central series over Q, tracked with the Q(i) subspace kernel
    // (imaginary parts stay zero throughout).
    Subspace current = Subspace::full(m);
    std::size_t step = 0;
    while (true) {
        ++step;
        // next = [g, current]
        std::vector<Vec> gens;
        for (std::size_t i = 0; i < m; ++i) {
            Vec ei(m);
            ei[i] = GaussianRational(1);
            for (std::size_t r = 0; r < current.dim(); ++r)
                gens.push_back(g.bracket_vectors(ei, current.basis().row(r)));
        }
        Subspace next = Subspace::span(Matrix::from_rows(gens, m));
        if (next.dim() == 0) return NilpotencyReport{true, step};
        if (next == current) return NilpotencyReport{false, 0};
        current = next;
    }
}

bool GradedComplex::differentials_square_to_zero() const {
    for (std::size_t k = 0; k + 1 < d.size(); ++k)
        if (!(d[k + 1] * d[k]).is_zero()) return false;
    return true;
}

Form GradedComplex::apply(const Form& f) const {
    Form out(m);
    for (const auto& [mask, c] : f.terms()) {
        std::size_t k = static_cast<std::size_t>(degree_of(mask));
        if (k >= m) continue;  // top degree maps to zero
        const auto& basis_k = bases[k];
        std::size_t idx = std::lower_bound(basis_k.begin(), basis_k.end(), mask) - basis_k.begin();
        const auto& basis_k1 = bases[k + 1];
        for (std::size_t r = 0; r < basis_k1.size(); ++r) {
            const GaussianRational& e = d[k].at(r, idx);
            if (!e.is_zero()) out.add(basis_k1[r], e * c);
        }
    }
    return out;
}

namespace {

// d on a monomial via the odd derivation rule, recursing on the lowest
// generator: d(x_i ^ rest) = dx_i ^ rest - x_i ^ d(rest).
Form d_monomial(const std::vector<Form>& d_gen, std::size_t m, Mask mask) {
    if (mask == 0) return Form(m);
    int k = std::countr_zero(mask);
    Mask rest = mask & (mask - 1);
    Form xk = Form::generator(m, static_cast<std::size_t>(k));
    Form head = wedge(d_gen[static_cast<std::size_t>(k)], Form::monomial(m, rest));
    Form tail = wedge(xk, d_monomial(d_gen, m, rest));
    return head - tail;
}

}  // namespace

GradedComplex graded_complex_from_generators(std::size_t m, const std::vector<Form>& d_gen) {
    GradedComplex cx;
    cx.m = m;
    cx.bases.resize(m + 1);
    cx.d.resize(m + 1);
    for (std::size_t k = 0; k <= m; ++k) cx.bases[k] = masks_of_degree(m, k);
    for (std::size_t k = 0; k <= m; ++k) {
        std::size_t next = (k < m) ? cx.bases[k + 1].size() : 0;
        Matrix dk(next, cx.bases[k].size());
        for (std::size_t c = 0; c < cx.bases[k].size(); ++c) {
            Form df = d_monomial(d_gen, m, cx.bases[k][c]);
            for (const auto& [mask, coeff] : df.terms()) {
                const auto& basis_next = cx.bases[k + 1];
                std::size_t r =
                    std::lower_bound(basis_next.begin(), basis_next.end(), mask) - basis_next.begin();
                dk.at(r, c) = coeff;
            }
        }
        cx.d[k] = std::move(dk);
    }
    return cx;
}

GradedComplex ce_differential(const LieAlgebra& g) {
    const std::size_t m = g.dim();
    std::vector<Form> d_gen(m, Form(m));
    for (const auto& [ij, coeffs] : g.stored_brackets()) {
        auto [i, j] = ij;
        Mask mono = (Mask(1) << i) | (Mask(1) << j);
        for (std::size_t k = 0; k < m; ++k)
            if (sgn(coeffs[k]) != 0)
                d_gen[k].add(mono, GaussianRational(-coeffs[k]));
    }
    return graded_complex_from_generators(m, d_gen);
}

std::vector<CohomologyEntry> derham_cohomology(const LieAlgebra& g) {
    GradedComplex cx = ce_differential(g);
    const std::size_t m = g.dim();
    std::vector<CohomologyEntry> table;
    for (std::size_t k = 0; k <= m; ++k) {
        Subspace ker = kernel(cx.d[k]);
        Subspace img = (k == 0) ? Subspace::zero(cx.bases[k].size())
                                : column_space(cx.d[k - 1]);
        Quotient q = quotient(ker, img);
        CohomologyEntry entry;
        entry.degree = static_cast<int>(k);
        entry.dim = q.dim;
        for (std::size_t r = 0; r < q.representatives.rows(); ++r) {
            Form f(m);
            for (std::size_t c = 0; c < cx.bases[k].size(); ++c)
                f.add(cx.bases[k][c], q.representatives.at(r, c));
            entry.representatives.push_back(std::move(f));
        }
        table.push_back(std::move(entry));
    }
    return table;
}

std::vector<std::size_t> betti_numbers(const LieAlgebra& g) {
    auto table = derham_cohomology(g);
    std::vector<std::size_t> out;
    for (const auto& e : table) out.push_back(e.dim);
    return out;
}

}  // namespace gencoh
