#ifndef GENCOH_ALGEBROID_HPP
#define GENCOH_ALGEBROID_HPP

#include "gencoh/cohomology.hpp"

#include <map>
#include <vector>

namespace gencoh {

/// L viewed as a Lie algebra with L* identified with conj(L) through the
/// pairing: frame l_1..l_{2n} of L, the dual frame m_1..m_{2n} in conj(L)
/// with <l_i, m_j> = delta_ij, and the structure constants of both.
///
/// Elements of wedge^k L* are stored as Forms on 2n generators, bitmask
/// monomials in the dual frame.
struct AlgebroidFrame {
    std::size_t two_n = 0;
    LieAlgebra base;                        // the underlying algebra g
    std::vector<DoubleVector> l_basis;      // canonical basis of L
    std::vector<DoubleVector> dual_basis;   // m_j in conj(L), delta-dual
    /// [l_i, l_j] = sum_k c^k_ij l_k (complex coefficients), i < j.
    std::map<std::pair<std::size_t, std::size_t>, Vec> l_brackets;
    /// [m_i, m_j] = sum_k gamma^k_ij m_k, i < j.
    std::map<std::pair<std::size_t, std::size_t>, Vec> m_brackets;
    Form rho;  // generator of U^n, kept for the U-identification

    Vec l_bracket(std::size_t i, std::size_t j) const;
    Vec m_bracket(std::size_t i, std::size_t j) const;
    /// Bracket of L-coordinate vectors, expanded in the l-basis.
    Vec l_bracket_vectors(const Vec& a, const Vec& b) const;
};

AlgebroidFrame dual_frame(const GCStructure& s);

/// The Chevalley-Eilenberg complex (wedge^* L*, d_L). On invariant
/// cochains only the bracket term of the algebroid differential survives,
/// so d_L is the CE differential of L's structure constants.
GradedComplex dL_complex(const AlgebroidFrame& f);

struct AlgebroidCohomology {
    std::vector<std::size_t> dims;  // degree 0..2n
    std::vector<std::vector<Form>> reps;  // in the dual-frame monomial basis
};

AlgebroidCohomology algebroid_cohomology(const AlgebroidFrame& f);

struct IsoReport {
    bool ok = true;
    std::size_t degree = 0;
    std::string witness;
};

/// Checks that psi_r(omega) = 2^{-r} m_{i_1}...m_{i_r} . rho intertwines
/// d_L with delbar: psi_{r+1} d_L = delbar psi_r on every degree. Requires
/// d rho = 0.
IsoReport check_iso_U(const AlgebroidFrame& f, const GCStructure& s);

/// Schouten bracket on wedge^* L*, built from the conj(L) bracket of the
/// dual frame; degree |a|+|b|-1.
Form schouten(const AlgebroidFrame& f, const Form& a, const Form& b);

struct MetricOperators {
    /// Everything indexed by degree 0..2n in the dual-frame monomial
    /// bases, which the declared inner product makes orthonormal.
    std::vector<Matrix> dL;         // degree k -> k+1
    std::vector<Matrix> dL_star;    // degree k -> k-1 stored at index k
    std::vector<Matrix> laplacian;  // degree k -> k
    std::vector<Matrix> H;          // harmonic projection
    std::vector<Matrix> G;          // Green operator
};

/// Finite-dimensional Hodge package for d_L with the dual-frame monomial
/// basis declared orthonormal: Delta = d d* + d* d, H the projection onto
/// ker Delta, G the inverse of Delta on its image with G Delta + H = id.
MetricOperators metric_operators(const AlgebroidFrame& f);

/// Harmonic space of degree k as a subspace of the degree-k coordinates.
Subspace harmonic_space(const MetricOperators& ops, std::size_t k);

}  // namespace gencoh

#endif
