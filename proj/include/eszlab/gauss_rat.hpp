#pragma once

#include <complex>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace eszlab {

// Exact complex scalar re + im*i with re, im in Q.
//
// gmpxx keeps results of arithmetic in lowest terms with positive
// denominators, so equality is structural.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long v) : re_(v) {}
    GaussRat(mpq_class re) : re_(std::move(re)) {}
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat from_ratio(long num, long den);
    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

    // Accepts "3", "-1/2", "2/3i", "i", "-i", "(1+2i)/5", "1+2i", "1/2-3/4i".
    static GaussRat parse(std::string_view text);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussRat inverse() const;

    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    friend bool operator==(const GaussRat& a, const GaussRat& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    // Lexicographic on (re, im); the canonical GridSet order.
    friend std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b);

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    // Canonical literal, re-parseable by parse(): "3", "-1/2", "2/3i",
    // "(1+2i)/5" style is not used; output is "re+imi" with each part a
    // reduced fraction, e.g. "1/5+2/5i".
    std::string to_string() const;

    std::size_t hash() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

GaussRat pow(const GaussRat& base, unsigned exponent);

// Nearest Gaussian rational with denominators <= max_den, via continued
// fractions on each part.
GaussRat rational_approximation(std::complex<double> z, long max_den);

struct GaussRatHash {
    std::size_t operator()(const GaussRat& v) const { return v.hash(); }
};

} // namespace eszlab
