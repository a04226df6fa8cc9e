#ifndef GENCOH_COHOMOLOGY_HPP
#define GENCOH_COHOMOLOGY_HPP

#include "gencoh/gcs.hpp"

#include <string>
#include <vector>

namespace gencoh {

enum class Theory { Delbar, Del, BottChern, Aeppli, DeRham, Algebroid, Dolbeault };

const char* theory_name(Theory t);

struct GHEntry {
    int degree = 0;  // the U-grading j
    std::size_t dim = 0;
    std::vector<Vec> rep_coords;  // coordinates in the U^j basis
    std::vector<Form> reps;       // the same classes in the monomial basis
};

struct GHTable {
    Theory theory;
    std::vector<GHEntry> entries;  // j = n .. -n

    std::vector<std::size_t> dims() const;
};

GHTable gh_delbar(const GCStructure& s);
GHTable gh_del(const GCStructure& s);
GHTable gh_bc(const GCStructure& s);
GHTable gh_aeppli(const GCStructure& s);
GHTable gh_table(const GCStructure& s, Theory t);

/// True when f is a cocycle of the theory in U^j (for BottChern this means
/// del f = delbar f = 0, for Aeppli del delbar f = 0).
bool is_cocycle(const GCStructure& s, Theory t, int j, const Form& f);

/// True when the given forms are cocycles in U^j and linearly independent
/// modulo the theory's coboundaries there.
bool classes_independent(const GCStructure& s, Theory t, int j, const std::vector<Form>& forms);

// --- symplectic-type oracle -------------------------------------------------

/// Lambda = -i_{omega^{-1}}, the bivector contraction used by the
/// symplectic chain isomorphism. `omega` must be a non-degenerate 2-form.
Form lambda_contract(const Form& omega, const Form& a);

/// Phi(alpha) = e^{i omega} ^ (e^{Lambda/2i} alpha).
Form symplectic_phi(const Form& omega, const Form& a);

/// d^Lambda = d Lambda - Lambda d for the algebra's CE differential.
Form d_lambda(const LieAlgebra& g, const Form& omega, const Form& a);

// --- complex-type bigraded table ---------------------------------------------

struct DolbeaultTable {
    std::size_t n = 0;
    /// h[p][q] for 0 <= p, q <= n.
    std::vector<std::vector<std::size_t>> h;

    /// Sums over p - q = j, listed j = n .. -n.
    std::vector<std::size_t> diagonal_sums() const;
};

/// Dolbeault cohomology of the complex structure defined by a type-n pure
/// form spec (the Omega factors span the (1,0) covectors). Requires the
/// induced J to be integrable; throws std::invalid_argument otherwise.
DolbeaultTable dolbeault_bigraded(const LieAlgebra& g, const PureFormSpec& J_spec);

}  // namespace gencoh

#endif
