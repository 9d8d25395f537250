#include "eszlab/gauss_rat.hpp"

#include <cctype>
#include <cmath>
#include <functional>

#include "eszlab/errors.hpp"

namespace eszlab {

namespace {

mpq_class parse_rational(std::string_view s, std::string_view whole)
{
    if (s.empty()) throw InputError("empty rational in literal '" + std::string(whole) + "'");
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') pos = 1;
    bool seen_digit = false, seen_slash = false;
    for (std::size_t k = pos; k < s.size(); ++k) {
        char c = s[k];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            seen_digit = true;
        } else if (c == '/' && !seen_slash && seen_digit && k + 1 < s.size()) {
            seen_slash = true;
            seen_digit = false;
        } else {
            throw InputError("bad rational '" + std::string(s) + "' in literal '" + std::string(whole) + "'");
        }
    }
    if (!seen_digit) throw InputError("bad rational '" + std::string(s) + "'");
    std::string text(s[0] == '+' ? s.substr(1) : s);
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw InputError("bad rational '" + text + "'");
    if (q.get_den() == 0) throw InputError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

// "a", "bi", "a+bi", "a-bi", "i", "-i" with a, b rationals.
GaussRat parse_plain(std::string_view s, std::string_view whole)
{
    if (s.empty()) throw InputError("empty Gaussian rational literal");
    std::size_t split = std::string_view::npos;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') split = k;
    }
    auto imag_part = [&](std::string_view t) -> mpq_class {
        std::string_view coeff = t.substr(0, t.size() - 1);
        if (coeff.empty() || coeff == "+") return mpq_class(1);
        if (coeff == "-") return mpq_class(-1);
        return parse_rational(coeff, whole);
    };
    if (split == std::string_view::npos) {
        if (s.back() == 'i') return GaussRat(mpq_class(0), imag_part(s));
        return GaussRat(parse_rational(s, whole));
    }
    std::string_view left = s.substr(0, split);
    std::string_view right = s.substr(split);
    if (right.back() != 'i' || left.back() == 'i') {
        throw InputError("bad Gaussian rational literal '" + std::string(whole) + "'");
    }
    return GaussRat(parse_rational(left, whole), imag_part(right));
}

} // namespace

GaussRat GaussRat::from_ratio(long num, long den)
{
    mpq_class q(num, den);
    q.canonicalize();
    return GaussRat(q);
}

GaussRat GaussRat::parse(std::string_view text)
{
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw InputError("empty Gaussian rational literal");
    std::string_view sv(s);
    bool negate = false;
    if (sv.size() > 1 && sv[0] == '-' && sv[1] == '(') {
        negate = true;
        sv.remove_prefix(1);
    }
    if (sv.front() == '(') {
        auto close = sv.find(')');
        if (close == std::string_view::npos) throw InputError("unbalanced '(' in literal '" + s + "'");
        GaussRat inner = parse_plain(sv.substr(1, close - 1), s);
        std::string_view rest = sv.substr(close + 1);
        if (!rest.empty()) {
            if (rest.front() != '/') throw InputError("bad literal '" + s + "'");
            mpq_class den = parse_rational(rest.substr(1), s);
            if (sgn(den) == 0) throw InputError("division by zero in literal '" + s + "'");
            inner /= GaussRat(den);
        }
        return negate ? -inner : inner;
    }
    return parse_plain(sv, s);
}

GaussRat GaussRat::inverse() const
{
    mpq_class n = norm();
    if (sgn(n) == 0) throw InputError("division by zero");
    return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o)
{
    if (sgn(o.im_) == 0) {
        if (sgn(o.re_) == 0) throw InputError("division by zero");
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::strong_ordering operator<=>(const GaussRat& a, const GaussRat& b)
{
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string GaussRat::to_string() const
{
    if (sgn(im_) == 0) return re_.get_str();
    std::string imag;
    if (im_ == 1) imag = "i";
    else if (im_ == -1) imag = "-i";
    else imag = im_.get_str() + "i";
    if (sgn(re_) == 0) return imag;
    std::string out = re_.get_str();
    if (sgn(im_) > 0) out += "+";
    return out + imag;
}

std::size_t GaussRat::hash() const
{
    std::size_t h = std::hash<std::string>{}(re_.get_str());
    h ^= std::hash<std::string>{}(im_.get_str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

GaussRat pow(const GaussRat& base, unsigned exponent)
{
    GaussRat result(1);
    GaussRat b = base;
    while (exponent) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent) b *= b;
    }
    return result;
}

namespace {

mpq_class best_rational(double x, long max_den)
{
    // Continued-fraction convergents of x, stopping before the denominator
    // bound is exceeded.
    long sign = x < 0 ? -1 : 1;
    double v = std::fabs(x);
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(v);
        if (a > 1e15) break;
        mpz_class ai(static_cast<long>(a));
        mpz_class p2 = ai * p1 + p0;
        mpz_class q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        double frac = v - a;
        if (frac < 1e-13) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) return mpq_class(0);
    mpq_class r(p1 * sign, q1);
    r.canonicalize();
    return r;
}

} // namespace

GaussRat rational_approximation(std::complex<double> z, long max_den)
{
    return GaussRat(best_rational(z.real(), max_den), best_rational(z.imag(), max_den));
}

} // namespace eszlab
