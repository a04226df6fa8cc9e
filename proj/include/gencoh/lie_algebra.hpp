#ifndef GENCOH_LIE_ALGEBRA_HPP
#define GENCOH_LIE_ALGEBRA_HPP

#include "gencoh/form.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gencoh {

/// Finite-dimensional real Lie algebra given by rational structure
/// constants: [X_i, X_j] = sum_k c^k_ij X_k with only i < j stored, so
/// antisymmetry is structural. The basis doubles as the recorded
/// Q-structure; rationality is by construction.
class LieAlgebra {
public:
    LieAlgebra() : dim_(0) {}
    explicit LieAlgebra(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }

    /// Sets [X_{i+1}, X_{j+1}] = sum coeffs[k] X_{k+1}; requires i < j.
    void set_bracket(std::size_t i, std::size_t j, const std::vector<Rational>& coeffs);

    /// Structure constants of [X_{i+1}, X_{j+1}] for any i, j.
    std::vector<Rational> bracket(std::size_t i, std::size_t j) const;

    /// Bracket of arbitrary complexified vectors (coordinate vectors of
    /// length dim).
    Vec bracket_vectors(const Vec& a, const Vec& b) const;

    const std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>>& stored_brackets() const {
        return brackets_;
    }

    bool is_abelian() const { return brackets_.empty(); }

private:
    std::size_t dim_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> brackets_;
};

struct JacobiReport {
    bool ok = true;
    // First violating triple (1-based) and the nonzero cyclic sum.
    std::size_t i = 0, j = 0, k = 0;
    std::vector<Rational> violation;
};

JacobiReport check_jacobi(const LieAlgebra& g);

struct NilpotencyReport {
    bool nilpotent = false;
    std::size_t step = 0;  // smallest s with g^s = 0 (g^1 = [g,g])
};

/// Lower central series test. Also reports step counts for non-nilpotent
/// algebras by noticing when the series stabilizes.
NilpotencyReport check_nilpotent(const LieAlgebra& g);

/// A Z-graded cochain complex on exterior monomials of m generators:
/// d[k] maps degree k to degree k+1 in the masks_of_degree bases.
struct GradedComplex {
    std::size_t m = 0;
    std::vector<std::vector<Mask>> bases;  // bases[k], ascending masks
    std::vector<Matrix> d;                 // d[k]: C(m,k) -> C(m,k+1)

    /// Verifies d_{k+1} d_k = 0 for all k.
    bool differentials_square_to_zero() const;

    /// d applied to a (mixed-degree) form.
    Form apply(const Form& f) const;
};

/// Chevalley-Eilenberg differential, fixed by d x_k = -sum_{i<j} c^k_ij
/// x_i ^ x_j on generators and extended as an odd derivation.
GradedComplex ce_differential(const LieAlgebra& g);

/// Extends given generator differentials (d x_k = d_gen[k]) to the whole
/// exterior algebra as an odd derivation. Shared by the CE complex of g
/// and the d_L complex of L.
GradedComplex graded_complex_from_generators(std::size_t m, const std::vector<Form>& d_gen);

struct CohomologyEntry {
    int degree = 0;
    std::size_t dim = 0;
    std::vector<Form> representatives;
};

/// de Rham (Chevalley-Eilenberg) cohomology of g with representatives.
std::vector<CohomologyEntry> derham_cohomology(const LieAlgebra& g);

/// Betti numbers only.
std::vector<std::size_t> betti_numbers(const LieAlgebra& g);

}  // namespace gencoh

#endif
