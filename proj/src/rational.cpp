#include "gencoh/rational.hpp"

#include <cctype>
#include <ostream>

namespace gencoh {

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t slash = text.find('/');
    auto check_int = [&](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("malformed rational literal '" + text + "'");
        std::size_t k = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (k == s.size()) throw std::invalid_argument("malformed rational literal '" + text + "'");
        for (; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                throw std::invalid_argument("malformed rational literal '" + text + "'");
    };
    if (slash == std::string::npos) {
        check_int(text);
        return Rational(mpz_class(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in rational literal '" + text + "'");
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string GaussianRational::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (sgn(re_) != 0) out = rational_str(re_);
    if (sgn(im_) != 0) {
        Rational a = abs(im_);
        std::string mag = (a == 1) ? "i" : rational_str(a) + "i";
        if (out.empty())
            out = (sgn(im_) < 0 ? "-" : "") + mag;
        else
            out += (sgn(im_) < 0 ? "-" : "+") + mag;
    }
    return out;
}

namespace {

// Splits "a+bi"-like text at the top-level sign that separates the two
// parts. Position 0 is a leading sign, not a separator.
std::size_t find_separator(const std::string& s) {
    for (std::size_t k = 1; k < s.size(); ++k)
        if (s[k] == '+' || s[k] == '-') return k;
    return std::string::npos;
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty scalar literal");

    auto parse_imag_coeff = [&](std::string part) -> Rational {
        // `part` ends with 'i'; the coefficient may be implicit (+/-1).
        part.pop_back();
        if (part.empty() || part == "+") return Rational(1);
        if (part == "-") return Rational(-1);
        return parse_rational(part);
    };

    if (s.back() == 'i') {
        std::size_t sep = find_separator(s);
        if (sep == std::string::npos) {
            return GaussianRational(Rational(0), parse_imag_coeff(s));
        }
        // A separator may be inside the imaginary coefficient's fraction
        // sign only when the real part is absent; fractions carry no inner
        // signs after canonical printing, so split at the last top-level
        // +/- that is not immediately after '/'.
        std::size_t split = std::string::npos;
        for (std::size_t k = 1; k < s.size(); ++k) {
            if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') split = k;
        }
        if (split == std::string::npos)
            return GaussianRational(Rational(0), parse_imag_coeff(s));
        std::string head = s.substr(0, split);
        std::string tail = s.substr(split);  // includes sign, ends with 'i'
        return GaussianRational(parse_rational(head), parse_imag_coeff(tail));
    }
    return GaussianRational(parse_rational(s));
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) {
    return os << x.str();
}

}  // namespace gencoh
