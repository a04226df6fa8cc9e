#include "gencoh/form.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace gencoh {

int degree_of(Mask m) { return std::popcount(m); }

int merge_sign(Mask a, Mask b) {
    // Number of transpositions needed to interleave b past a: for every
    // bit j of b, count the bits of a above j.
    int inversions = 0;
    Mask bb = b;
    while (bb) {
        int j = std::countr_zero(bb);
        bb &= bb - 1;
        inversions += std::popcount(a >> (j + 1));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

std::vector<Mask> masks_of_degree(std::size_t m, std::size_t k) {
    std::vector<Mask> out;
    for (Mask mask = 0; mask < (Mask(1) << m); ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) == k) out.push_back(mask);
    return out;
}

std::string monomial_str(Mask mask) {
    if (mask == 0) return "1";
    std::string s;
    for (int k = 0; k < 32; ++k) {
        if (!(mask >> k & 1)) continue;
        if (!s.empty()) s += "^";
        s += "x" + std::to_string(k + 1);
    }
    return s;
}

unsigned long long binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    unsigned long long r = 1;
    for (unsigned j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

Form Form::scalar(std::size_t m, const GaussianRational& c) {
    Form f(m);
    f.set(0, c);
    return f;
}

Form Form::monomial(std::size_t m, Mask mask, const GaussianRational& c) {
    if (mask >= (Mask(1) << m)) throw std::invalid_argument("monomial out of range");
    Form f(m);
    f.set(mask, c);
    return f;
}

Form Form::generator(std::size_t m, std::size_t index) {
    if (index >= m) throw std::invalid_argument("generator index out of range");
    return monomial(m, Mask(1) << index);
}

GaussianRational Form::coeff(Mask mask) const {
    auto it = terms_.find(mask);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void Form::set(Mask mask, const GaussianRational& c) {
    if (c.is_zero())
        terms_.erase(mask);
    else
        terms_[mask] = c;
}

void Form::add(Mask mask, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
        terms_.emplace(mask, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool Form::is_homogeneous(std::size_t degree) const {
    for (const auto& [mask, c] : terms_)
        if (static_cast<std::size_t>(degree_of(mask)) != degree) return false;
    return true;
}

std::size_t Form::min_degree() const {
    std::size_t best = m_ + 1;
    for (const auto& [mask, c] : terms_)
        best = std::min(best, static_cast<std::size_t>(degree_of(mask)));
    return best;
}

std::size_t Form::max_degree() const {
    std::size_t best = 0;
    for (const auto& [mask, c] : terms_)
        best = std::max(best, static_cast<std::size_t>(degree_of(mask)));
    return best;
}

Form Form::component(std::size_t degree) const {
    Form out(m_);
    for (const auto& [mask, c] : terms_)
        if (static_cast<std::size_t>(degree_of(mask)) == degree) out.set(mask, c);
    return out;
}

Form Form::conjugate() const {
    Form out(m_);
    for (const auto& [mask, c] : terms_) out.set(mask, c.conj());
    return out;
}

Form Form::operator+(const Form& o) const {
    if (m_ != o.m_) throw std::invalid_argument("form sum: ambient mismatch");
    Form out = *this;
    for (const auto& [mask, c] : o.terms_) out.add(mask, c);
    return out;
}

Form Form::operator-(const Form& o) const {
    if (m_ != o.m_) throw std::invalid_argument("form diff: ambient mismatch");
    Form out = *this;
    for (const auto& [mask, c] : o.terms_) out.add(mask, -c);
    return out;
}

Form Form::operator*(const GaussianRational& c) const {
    Form out(m_);
    if (c.is_zero()) return out;
    for (const auto& [mask, x] : terms_) out.set(mask, x * c);
    return out;
}

Vec Form::to_coords() const {
    Vec v(std::size_t(1) << m_);
    for (const auto& [mask, c] : terms_) v[mask] = c;
    return v;
}

Form Form::from_coords(std::size_t m, const Vec& coords) {
    if (coords.size() != (std::size_t(1) << m))
        throw std::invalid_argument("from_coords: wrong length");
    Form f(m);
    for (std::size_t mask = 0; mask < coords.size(); ++mask)
        f.set(static_cast<Mask>(mask), coords[mask]);
    return f;
}

std::string Form::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : terms_) {
        std::string cs = c.str();
        if (!first) {
            if (!cs.empty() && cs[0] == '-') {
                os << " - ";
                cs = cs.substr(1);
            } else {
                os << " + ";
            }
        }
        first = false;
        if (mask == 0) {
            os << cs;
        } else if (cs == "1") {
            os << monomial_str(mask);
        } else if (cs == "-1") {
            os << "-" << monomial_str(mask);
        } else {
            bool composite = cs.find('+') != std::string::npos ||
                             cs.find('-', 1) != std::string::npos;
            if (composite)
                os << "(" << cs << ")*" << monomial_str(mask);
            else
                os << cs << "*" << monomial_str(mask);
        }
    }
    return os.str();
}

Form wedge(const Form& a, const Form& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("wedge: ambient mismatch");
    Form out(a.ambient());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (ma & mb) continue;
            GaussianRational c = ca * cb;
            if (merge_sign(ma, mb) < 0) c = -c;
            out.add(ma | mb, c);
        }
    }
    return out;
}

Form interior(const Vec& v, const Form& a) {
    if (v.size() != a.ambient()) throw std::invalid_argument("interior: ambient mismatch");
    Form out(a.ambient());
    for (const auto& [mask, c] : a.terms()) {
        Mask mm = mask;
        while (mm) {
            int k = std::countr_zero(mm);
            mm &= mm - 1;
            if (v[k].is_zero()) continue;
            int below = std::popcount(mask & ((Mask(1) << k) - 1));
            GaussianRational coeff = v[k] * c;
            if (below % 2 != 0) coeff = -coeff;
            out.add(mask & ~(Mask(1) << k), coeff);
        }
    }
    return out;
}

DoubleVector DoubleVector::conjugate() const {
    DoubleVector w(m);
    for (std::size_t k = 0; k < coords.size(); ++k) w.coords[k] = coords[k].conj();
    return w;
}

std::string DoubleVector::str() const {
    std::string out;
    auto append = [&](const GaussianRational& c, const std::string& name) {
        if (c.is_zero()) return;
        std::string cs = c.str();
        if (cs == "1")
            cs = "";
        else if (cs == "-1")
            cs = "-";
        else if (cs == "i")
            cs = "i*";
        else if (cs == "-i")
            cs = "-i*";
        else if (cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos)
            cs = "(" + cs + ")*";
        else
            cs += "*";
        if (!out.empty() && (cs.empty() || cs[0] != '-')) out += "+";
        out += cs + name;
    };
    for (std::size_t k = 0; k < m; ++k) append(vec(k), "X" + std::to_string(k + 1));
    for (std::size_t k = 0; k < m; ++k) append(covec(k), "x" + std::to_string(k + 1));
    return out.empty() ? "0" : out;
}

Form clifford(const DoubleVector& w, const Form& a) {
    if (w.m != a.ambient()) throw std::invalid_argument("clifford: ambient mismatch");
    Vec xpart(w.m);
    Form zeta(w.m);
    for (std::size_t k = 0; k < w.m; ++k) {
        xpart[k] = w.vec(k);
        if (!w.covec(k).is_zero()) zeta.add(Mask(1) << k, w.covec(k));
    }
    return interior(xpart, a) + wedge(zeta, a);
}

Form exp_two_form(const Form& b, std::size_t cap) {
    if (!b.is_zero() && !b.is_homogeneous(2))
        throw std::invalid_argument("exp_two_form: argument must be homogeneous of degree 2");
    Form out = Form::scalar(b.ambient(), GaussianRational(1));
    Form power = out;
    GaussianRational factorial(1);
    for (std::size_t j = 1; 2 * j <= cap; ++j) {
        power = wedge(power, b);
        if (power.is_zero()) break;
        factorial *= GaussianRational(static_cast<long>(j));
        out = out + power * (GaussianRational(1) / factorial);
    }
    return out;
}

void PureFormSpec::validate_shape() const {
    if (m % 2 != 0) throw std::invalid_argument("pure form: ambient dimension must be even");
    if (type_k != omega_factors.size())
        throw std::invalid_argument("pure form: type does not match number of Omega factors");
    if (type_k > m / 2) throw std::invalid_argument("pure form: type exceeds n");
    auto check2 = [&](const Form& f, const char* name) {
        if (f.ambient() != m) throw std::invalid_argument(std::string(name) + ": ambient mismatch");
        if (!f.is_zero() && !f.is_homogeneous(2))
            throw std::invalid_argument(std::string(name) + " must be a 2-form");
        for (const auto& [mask, c] : f.terms())
            if (!c.is_real())
                throw std::invalid_argument(std::string(name) + " must have real coefficients");
    };
    check2(B, "B");
    check2(omega, "omega");
    for (const auto& th : omega_factors) {
        if (th.ambient() != m) throw std::invalid_argument("Omega factor: ambient mismatch");
        if (th.is_zero() || !th.is_homogeneous(1))
            throw std::invalid_argument("Omega factors must be nonzero 1-forms");
    }
}

Form build_pure_form(const PureFormSpec& spec) {
    spec.validate_shape();
    Form beta = spec.B + spec.omega * GaussianRational::i();
    Form rho = exp_two_form(beta, spec.m);
    for (const auto& th : spec.omega_factors) rho = wedge(rho, th);
    return rho;
}

bool check_nondegenerate(const PureFormSpec& spec, std::size_t n) {
    spec.validate_shape();
    if (spec.m != 2 * n) throw std::invalid_argument("check_nondegenerate: ambient must be 2n");
    Form acc = Form::scalar(spec.m, GaussianRational(1));
    for (std::size_t j = 0; j < n - spec.type_k; ++j) acc = wedge(acc, spec.omega);
    for (const auto& th : spec.omega_factors) acc = wedge(acc, th);
    for (const auto& th : spec.omega_factors) acc = wedge(acc, th.conjugate());
    Mask top = (Mask(1) << spec.m) - 1;
    return !acc.coeff(top).is_zero();
}

}  // namespace gencoh
