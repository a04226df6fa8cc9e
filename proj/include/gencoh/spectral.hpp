#ifndef GENCOH_SPECTRAL_HPP
#define GENCOH_SPECTRAL_HPP

#include "gencoh/algebroid.hpp"

#include <map>
#include <utility>
#include <vector>

namespace gencoh {

/// A graded complex with a decreasing bounded filtration per degree:
/// F[k][0] is everything, F[k][p_len] is zero, and d F^p <= F^p.
struct FilteredComplex {
    GradedComplex cx;
    std::vector<std::vector<Subspace>> F;
    std::size_t p_len = 0;

    /// Clamped access: p <= 0 gives the full space, p >= p_len zero.
    Subspace filtration(std::size_t degree, int p) const;
};

struct NotAnIdealError : std::runtime_error {
    NotAnIdealError(std::string msg, std::string w)
        : std::runtime_error(std::move(msg)), witness(std::move(w)) {}
    std::string witness;
};

/// Hochschild-Serre filtration of (wedge^* L*, d_L) for an ideal S of L:
/// F^p of degree p+q is spanned by the cochains vanishing whenever q+1
/// arguments come from S. `S` lives in l-basis coordinates (ambient 2n).
FilteredComplex hs_filtration(const AlgebroidFrame& f, const Subspace& S);

struct SpectralCell {
    std::size_t dim = 0;
    Matrix reps;  // rows, total-complex coordinates of the cell's degree
    Matrix d_r;   // matrix into the (p+r, q-r+1) cell's representatives
};

struct SpectralPage {
    std::size_t r = 0;
    std::map<std::pair<int, int>, SpectralCell> cells;

    std::size_t dim(int p, int q) const;
    /// Sums over p+q = k, k = 0..degree_max.
    std::vector<std::size_t> totals(std::size_t degree_max) const;
};

/// Pages E_0..E_{r_max} by exact subspace arithmetic:
/// Z_r = F^p cap d^{-1} F^{p+r}, E_r = Z_r / (d Z_{r-1} + Z_{r-1}').
/// Each page re-checks that its cells are ker/im of the previous page's
/// differential.
std::vector<SpectralPage> pages(const FilteredComplex& fc, std::size_t r_max);

/// The stable page (r = p_len + 1).
SpectralPage einfty(const FilteredComplex& fc);

/// Cohomology dims of the unfiltered total complex.
std::vector<std::size_t> total_cohomology_dims(const GradedComplex& cx);

/// E_2^{p,q} = H^p(L/S, H^q(S)) computed directly: the CE cohomology of
/// the quotient with coefficients in the S-cohomology module carrying the
/// induced (nilpotent) action.
std::map<std::pair<int, int>, std::size_t> e2_direct(const AlgebroidFrame& f, const Subspace& S);

}  // namespace gencoh

#endif
