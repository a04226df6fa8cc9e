#ifndef GENCOH_TESTS_FIXTURES_HPP
#define GENCOH_TESTS_FIXTURES_HPP

#include "gencoh/gcs.hpp"

#include <random>
#include <vector>

namespace gencoh::tests {

// --- fixed fixtures ----------------------------------------------------------

/// [X1,X2] = X3 on R^4 (Heisenberg x R, the Kodaira-Thurston algebra).
LieAlgebra kt_algebra();

/// rho = e^{i x2^x3} ^ (x1 + i x4), type 1.
PureFormSpec kt_spec();

/// Abelian R^4.
LieAlgebra abelian(std::size_t dim);

/// omega = x12 + x34 on the abelian R^4, type 0.
PureFormSpec torus_symplectic_spec();

/// Omega = (x1+i x2)^(x3+i x4) on the abelian R^4, type 2.
PureFormSpec torus_complex_spec();

/// omega = x13 + x24 on the KT algebra, type 0 (non-abelian symplectic).
PureFormSpec kt_symplectic_spec();

/// Omega = (x1+i x2)^(x3+i x4) on the KT algebra, type 2 (Kodaira surface).
PureFormSpec kodaira_complex_spec();

/// [X1,X2] = X3 on R^6 with omega = x23 + x56, theta = x1 + i x4, type 1.
LieAlgebra kt6_algebra();
PureFormSpec kt6_spec();

/// [X1,X2] = X2 on R^4 (solvable, not nilpotent).
LieAlgebra aff_algebra();

Form form_of(std::size_t m, std::initializer_list<std::pair<Mask, GaussianRational>> terms);

// --- randomized generators (deterministic seeds) -------------------------------

struct Rng {
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    std::mt19937_64 engine;

    Rational rational(int num_range = 4, int den_range = 3);
    GaussianRational gaussian(int num_range = 4, int den_range = 3);
    GaussianRational nonzero_gaussian(int num_range = 4, int den_range = 3);
    std::size_t index(std::size_t bound);  // 0..bound-1
};

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);
Form random_form(Rng& rng, std::size_t m, std::size_t degree);

/// A random Lie algebra guaranteed nilpotent: a standard nilpotent model
/// conjugated by a random rational basis change.
LieAlgebra random_nilpotent(Rng& rng, std::size_t dim);

/// A random valid pure-form spec on g (closed B, omega, closed theta
/// factors, non-degenerate), produced by rejection sampling.
PureFormSpec random_integrable_spec(Rng& rng, const LieAlgebra& g);

/// Like the above but with d rho != 0 (uses a non-closed omega); returns
/// nullopt when the sampler cannot find one.
std::optional<PureFormSpec> random_nonclosed_spec(Rng& rng, const LieAlgebra& g);

}  // namespace gencoh::tests

#endif
