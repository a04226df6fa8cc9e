#include "support/fixtures.hpp"

#include "gencoh/lie_algebra.hpp"

namespace gencoh::tests {

LieAlgebra kt_algebra() {
    LieAlgebra g(4);
    std::vector<Rational> c(4, Rational(0));
    c[2] = 1;
    g.set_bracket(0, 1, c);
    return g;
}

PureFormSpec kt_spec() {
    PureFormSpec spec;
    spec.m = 4;
    spec.type_k = 1;
    spec.B = Form(4);
    spec.omega = Form::monomial(4, 0b0110);  // x2 ^ x3
    Form theta = Form::generator(4, 0) + Form::generator(4, 3) * GaussianRational::i();
    spec.omega_factors = {theta};
    return spec;
}

LieAlgebra abelian(std::size_t dim) { return LieAlgebra(dim); }

PureFormSpec torus_symplectic_spec() {
    PureFormSpec spec;
    spec.m = 4;
    spec.type_k = 0;
    spec.B = Form(4);
    spec.omega = Form::monomial(4, 0b0011) + Form::monomial(4, 0b1100);  // x12 + x34
    return spec;
}

PureFormSpec torus_complex_spec() {
    PureFormSpec spec;
    spec.m = 4;
    spec.type_k = 2;
    spec.B = Form(4);
    spec.omega = Form(4);
    Form t1 = Form::generator(4, 0) + Form::generator(4, 1) * GaussianRational::i();
    Form t2 = Form::generator(4, 2) + Form::generator(4, 3) * GaussianRational::i();
    spec.omega_factors = {t1, t2};
    return spec;
}

PureFormSpec kt_symplectic_spec() {
    PureFormSpec spec;
    spec.m = 4;
    spec.type_k = 0;
    spec.B = Form(4);
    spec.omega = Form::monomial(4, 0b0101) + Form::monomial(4, 0b1010);  // x13 + x24
    return spec;
}

PureFormSpec kodaira_complex_spec() {
    PureFormSpec spec = torus_complex_spec();
    return spec;
}

LieAlgebra kt6_algebra() {
    LieAlgebra g(6);
    std::vector<Rational> c(6, Rational(0));
    c[2] = 1;
    g.set_bracket(0, 1, c);
    return g;
}

PureFormSpec kt6_spec() {
    PureFormSpec spec;
    spec.m = 6;
    spec.type_k = 1;
    spec.B = Form(6);
    spec.omega = Form::monomial(6, 0b000110) + Form::monomial(6, 0b110000);  // x23 + x56
    Form theta = Form::generator(6, 0) + Form::generator(6, 3) * GaussianRational::i();
    spec.omega_factors = {theta};
    return spec;
}

LieAlgebra aff_algebra() {
    LieAlgebra g(4);
    std::vector<Rational> c(4, Rational(0));
    c[1] = 1;
    g.set_bracket(0, 1, c);  // [X1, X2] = X2
    return g;
}

Form form_of(std::size_t m, std::initializer_list<std::pair<Mask, GaussianRational>> terms) {
    Form f(m);
    for (const auto& [mask, c] : terms) f.add(mask, c);
    return f;
}

Rational Rng::rational(int num_range, int den_range) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    Rational r(num(engine), den(engine));
    r.canonicalize();
    return r;
}

GaussianRational Rng::gaussian(int num_range, int den_range) {
    return GaussianRational(rational(num_range, den_range), rational(num_range, den_range));
}

GaussianRational Rng::nonzero_gaussian(int num_range, int den_range) {
    for (;;) {
        GaussianRational g = gaussian(num_range, den_range);
        if (!g.is_zero()) return g;
    }
}

std::size_t Rng::index(std::size_t bound) {
    std::uniform_int_distribution<std::size_t> d(0, bound - 1);
    return d(engine);
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng.index(3) != 0) m.at(r, c) = rng.gaussian();
    return m;
}

Form random_form(Rng& rng, std::size_t m, std::size_t degree) {
    Form f(m);
    for (Mask mask : masks_of_degree(m, degree))
        if (rng.index(2) == 0) f.add(mask, rng.gaussian());
    return f;
}

namespace {

LieAlgebra nilpotent_model(Rng& rng, std::size_t dim) {
    LieAlgebra g(dim);
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
        std::vector<Rational> c(dim, Rational(0));
        c[k] = 1;
        g.set_bracket(i, j, c);
    };
    if (dim == 4) {
        switch (rng.index(3)) {
            case 0: break;  // abelian
            case 1: set(0, 1, 2); break;                 // h3 + R
            case 2: set(0, 1, 2); set(0, 2, 3); break;   // filiform n4
        }
    } else if (dim == 6) {
        switch (rng.index(5)) {
            case 0: break;
            case 1: set(0, 1, 2); break;                                // h3 + R^3
            case 2: set(0, 1, 2); set(3, 4, 5); break;                  // h3 + h3
            case 3: set(0, 1, 2); set(0, 2, 3); break;                  // n4 + R^2
            case 4: set(0, 1, 2); set(0, 2, 3); set(0, 3, 4); break;    // filiform n5 + R
        }
    } else {
        throw std::invalid_argument("nilpotent_model: dim must be 4 or 6");
    }
    return g;
}

}  // namespace

LieAlgebra random_nilpotent(Rng& rng, std::size_t dim) {
    LieAlgebra model = nilpotent_model(rng, dim);
    // Random rational change of basis keeps Jacobi and nilpotency.
    for (;;) {
        Matrix P(dim, dim);
        for (std::size_t r = 0; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c) {
                if (r == c)
                    P.at(r, c) = GaussianRational(1);
                else if (rng.index(3) == 0)
                    P.at(r, c) = GaussianRational(rng.rational(2, 2));
            }
        if (rank(P) != dim) continue;
        Matrix cols = P.transpose();  // columns are the new basis vectors
        LieAlgebra g(dim);
        bool ok = true;
        for (std::size_t i = 0; i < dim && ok; ++i)
            for (std::size_t j = i + 1; j < dim && ok; ++j) {
                Vec br = model.bracket_vectors(P.row(i), P.row(j));
                auto sol = solve(cols, br);
                if (!sol) {
                    ok = false;
                    break;
                }
                std::vector<Rational> c(dim, Rational(0));
                bool nonzero = false;
                for (std::size_t k = 0; k < dim; ++k) {
                    c[k] = (*sol)[k].re();
                    if (sgn(c[k]) != 0) nonzero = true;
                }
                if (nonzero) g.set_bracket(i, j, c);
            }
        if (ok) return g;
    }
}

namespace {

// Basis of closed k-forms as Forms.
std::vector<Form> closed_forms(const LieAlgebra& g, std::size_t k) {
    GradedComplex cx = ce_differential(g);
    Subspace ker_k = kernel(cx.d[k]);
    std::vector<Form> out;
    for (std::size_t r = 0; r < ker_k.dim(); ++r) {
        Form f(g.dim());
        for (std::size_t c = 0; c < cx.bases[k].size(); ++c)
            f.add(cx.bases[k][c], ker_k.basis().at(r, c));
        out.push_back(std::move(f));
    }
    return out;
}

Form random_real_combination(Rng& rng, const std::vector<Form>& basis, std::size_t m) {
    Form out(m);
    for (const auto& b : basis)
        if (rng.index(2) == 0) out = out + b * GaussianRational(rng.rational(3, 2));
    return out;
}

}  // namespace

PureFormSpec random_integrable_spec(Rng& rng, const LieAlgebra& g) {
    const std::size_t m = g.dim();
    const std::size_t n = m / 2;
    auto closed1 = closed_forms(g, 1);
    auto closed2 = closed_forms(g, 2);
    for (std::size_t attempt = 0; attempt < 400; ++attempt) {
        PureFormSpec spec;
        spec.m = m;
        // Favor small types; type n requires many independent closed
        // 1-forms and often fails the non-degeneracy rejection.
        spec.type_k = rng.index(n + 1);
        spec.B = random_real_combination(rng, closed2, m);
        spec.omega = random_real_combination(rng, closed2, m);
        bool shape_ok = true;
        for (std::size_t t = 0; t < spec.type_k; ++t) {
            Form re = random_real_combination(rng, closed1, m);
            Form im = random_real_combination(rng, closed1, m);
            Form theta = re + im * GaussianRational::i();
            if (theta.is_zero() || !theta.is_homogeneous(1)) {
                shape_ok = false;
                break;
            }
            spec.omega_factors.push_back(theta);
        }
        if (!shape_ok) continue;
        if (!check_nondegenerate(spec, n)) continue;
        return spec;
    }
    throw std::runtime_error("random_integrable_spec: sampler exhausted");
}

std::optional<PureFormSpec> random_nonclosed_spec(Rng& rng, const LieAlgebra& g) {
    const std::size_t m = g.dim();
    const std::size_t n = m / 2;
    GradedComplex cx = ce_differential(g);
    auto closed2 = closed_forms(g, 2);
    for (std::size_t attempt = 0; attempt < 400; ++attempt) {
        PureFormSpec spec;
        spec.m = m;
        spec.type_k = 0;
        spec.B = Form(m);
        spec.omega = random_real_combination(rng, closed2, m) +
                     random_form(rng, m, 2).component(2);
        // keep omega real
        Form real_omega(m);
        for (const auto& [mask, c] : spec.omega.terms())
            real_omega.add(mask, GaussianRational(c.re()));
        spec.omega = real_omega;
        if (spec.omega.is_zero()) continue;
        if (!check_nondegenerate(spec, n)) continue;
        Form rho = build_pure_form(spec);
        if (cx.apply(rho).is_zero()) continue;
        return spec;
    }
    return std::nullopt;
}

}  // namespace gencoh::tests
