#ifndef GENCOH_FORM_HPP
#define GENCOH_FORM_HPP

#include "gencoh/matrix.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gencoh {

/// Exterior monomials are strictly increasing index tuples encoded as
/// bitmasks; bit k stands for the generator x_{k+1}. The sign of any
/// product is the parity of the merge permutation.
using Mask = std::uint32_t;

int merge_sign(Mask a, Mask b);
int degree_of(Mask m);
std::vector<Mask> masks_of_degree(std::size_t m, std::size_t k);
std::string monomial_str(Mask mask);
unsigned long long binomial(unsigned n, unsigned k);

/// Element of the complexified exterior algebra on m generators. Mixed
/// degree is allowed; zero coefficients are never stored.
class Form {
public:
    Form() : m_(0) {}
    explicit Form(std::size_t m) : m_(m) {}

    static Form scalar(std::size_t m, const GaussianRational& c);
    static Form monomial(std::size_t m, Mask mask, const GaussianRational& c = GaussianRational(1));
    /// Degree-one generator x_{index+1}.
    static Form generator(std::size_t m, std::size_t index);

    std::size_t ambient() const { return m_; }
    const std::map<Mask, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GaussianRational coeff(Mask mask) const;
    void set(Mask mask, const GaussianRational& c);
    void add(Mask mask, const GaussianRational& c);

    bool is_homogeneous(std::size_t degree) const;
    /// Smallest degree with a nonzero term; m+1 for the zero form.
    std::size_t min_degree() const;
    std::size_t max_degree() const;
    Form component(std::size_t degree) const;

    Form conjugate() const;

    Form operator+(const Form& o) const;
    Form operator-(const Form& o) const;
    Form operator*(const GaussianRational& c) const;
    Form operator-() const { return *this * GaussianRational(-1); }
    friend bool operator==(const Form& a, const Form& b) {
        return a.m_ == b.m_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    Vec to_coords() const;  // length 2^m, indexed by mask
    static Form from_coords(std::size_t m, const Vec& coords);

    /// Deterministic display, terms in mask order: "(1+i)*x1^x2 + x3".
    std::string str() const;

private:
    std::size_t m_;
    std::map<Mask, GaussianRational> terms_;
};

Form wedge(const Form& a, const Form& b);

/// Interior product with the vector sum(v_k X_{k+1}); a degree-lowering
/// antiderivation.
Form interior(const Vec& v, const Form& a);

/// Element X + zeta of Dg_C = (g + g*) tensor C; coordinates 0..m-1 hold
/// the vector part, m..2m-1 the covector part.
struct DoubleVector {
    std::size_t m = 0;
    Vec coords;

    DoubleVector() = default;
    explicit DoubleVector(std::size_t m_) : m(m_), coords(2 * m_) {}
    DoubleVector(std::size_t m_, Vec c) : m(m_), coords(std::move(c)) {}

    GaussianRational& vec(std::size_t k) { return coords[k]; }
    const GaussianRational& vec(std::size_t k) const { return coords[k]; }
    GaussianRational& covec(std::size_t k) { return coords[m + k]; }
    const GaussianRational& covec(std::size_t k) const { return coords[m + k]; }

    DoubleVector conjugate() const;
    std::string str() const;  // e.g. "X2-i*x3"
};

/// Clifford action (X+zeta) . a = i_X a + zeta ^ a.
Form clifford(const DoubleVector& w, const Form& a);

/// exp of a degree-2 form, truncated at degree `cap`; the series is exact
/// because it terminates.
Form exp_two_form(const Form& b, std::size_t cap);

/// Data of a pure form rho = e^{B+i omega} ^ theta_1 ^ ... ^ theta_k.
struct PureFormSpec {
    std::size_t m = 0;       // ambient dimension (2n)
    std::size_t type_k = 0;  // number of theta factors
    Form B;                  // real degree-2
    Form omega;              // real degree-2
    std::vector<Form> omega_factors;  // degree-1 theta_1..theta_k

    void validate_shape() const;  // throws std::invalid_argument on misuse
};

Form build_pure_form(const PureFormSpec& spec);

/// Non-degeneracy test: omega^{n-k} ^ Omega ^ conj(Omega) has nonzero top
/// coefficient.
bool check_nondegenerate(const PureFormSpec& spec, std::size_t n);

}  // namespace gencoh

#endif
