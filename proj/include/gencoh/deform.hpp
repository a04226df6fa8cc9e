#ifndef GENCOH_DEFORM_HPP
#define GENCOH_DEFORM_HPP

#include "gencoh/spectral.hpp"

namespace gencoh {

/// Deformation parameters are degree-2 elements of wedge^* L* in the
/// dual-frame monomial basis.

/// Exact Maurer-Cartan residual d_L eps + [eps,eps]/2 (degree 3).
Form mc_residual(const AlgebroidFrame& f, const Form& eps);

/// (1 + eps) l_i = l_i + i_{l_i} eps with first-slot contraction against
/// the dual frame.
std::vector<DoubleVector> deformed_L_basis(const AlgebroidFrame& f, const Form& eps);

/// Checks closure of the span of `basis` under the Dg bracket.
bool involutive(const std::vector<DoubleVector>& basis, const LieAlgebra& g);

struct KuranishiSeries {
    /// terms[r-1] = eps_r; eps_1 is the harmonic input and
    /// eps_r = (1/2) sum_{s=1}^{r-1} d_L* G [eps_s, eps_{r-s}] for r >= 2.
    std::vector<Form> terms;

    Form partial_sum() const;
};

/// Runs the recursion to order N. Throws std::invalid_argument when e1 is
/// not harmonic.
KuranishiSeries kuranishi(const AlgebroidFrame& f, const MetricOperators& ops, const Form& e1,
                          std::size_t N);

/// Order-h component of the Maurer-Cartan residual of the partial sum,
/// grading by powers of eps_1 (eps_r is homogeneous of order r):
/// R_h = d_L eps_h + (1/2) sum_{s+u=h} [eps_s, eps_u].
Form mc_residual_order(const AlgebroidFrame& f, const KuranishiSeries& series, std::size_t h);

/// Builds the deformed structure L_eps = (1+eps)L: requires a vanishing
/// Maurer-Cartan residual and L_eps cap conj(L_eps) = 0, extracts the
/// annihilator line's generator and re-validates it from scratch.
ValidationResult deformed_structure(const GCStructure& s, const AlgebroidFrame& f, const Form& eps);

/// Clifford action of a fixed element as a 2^m x 2^m operator on form
/// coordinates.
Matrix clifford_operator(const DoubleVector& v);

}  // namespace gencoh

#endif
