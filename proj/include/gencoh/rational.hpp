#ifndef GENCOH_RATIONAL_HPP
#define GENCOH_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace gencoh {

using Rational = mpq_class;

/// Exact scalar a + b*i with rational a, b. The base field for everything
/// in this project; no floating point is used anywhere.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long v) : re_(v), im_(0) {}
    GaussianRational(int v) : re_(v), im_(0) {}
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) { canonicalize(); }
    GaussianRational(Rational re, Rational im)
        : re_(std::move(re)), im_(std::move(im)) { canonicalize(); }

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    /// re^2 + im^2, the square of the complex absolute value.
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        Rational n = o.norm();
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        Rational i = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Canonical serialization: "p/q", "p/q+r/si", "i", "-1/2i", "0".
    std::string str() const;

    /// Parses the scalar grammar used in problem files. Throws
    /// std::invalid_argument with a descriptive message on malformed input
    /// (including zero denominators).
    static GaussianRational parse(const std::string& text);

private:
    void canonicalize() {
        re_.canonicalize();
        im_.canonicalize();
    }

    Rational re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

/// "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& r);

/// Parses "p" or "p/q"; rejects zero denominators.
Rational parse_rational(const std::string& text);

}  // namespace gencoh

#endif
