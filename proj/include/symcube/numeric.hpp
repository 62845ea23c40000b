#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <ostream>
#include <string>

#include "symcube/errors.hpp"

namespace symcube {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k) as an exact integer; 0 when k < 0 or k > n.
Int binomial(long n, long k);

/// Render an exact rational the way the JSON layer expects it:
/// "5", "-5", or "5/3" (always the canonical reduced form).
std::string rat_to_string(const Rat& r);

/// Parse the same format back. Throws parse_error on anything else.
Rat rat_from_string(const std::string& s);

/// Element of Q(i). Enough field structure for the change-of-basis and
/// certificate arithmetic; not a general number type.
struct Gaussian {
    Rat re = 0;
    Rat im = 0;

    Gaussian() = default;
    Gaussian(Rat r) : re(std::move(r)) {}
    Gaussian(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(int r) : re(r) {}

    static Gaussian i() { return Gaussian(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }

    friend bool operator==(const Gaussian&, const Gaussian&) = default;

    Gaussian operator-() const { return Gaussian(-re, -im); }
    Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { a += b; return a; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { a -= b; return a; }
    friend Gaussian operator*(const Gaussian& a, const Gaussian& b) {
        return Gaussian(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    Gaussian& operator*=(const Gaussian& o) { *this = *this * o; return *this; }

    friend Gaussian operator/(const Gaussian& a, const Gaussian& b) {
        if (b.is_zero()) throw internal_error("Gaussian division by zero");
        Rat n = b.re * b.re + b.im * b.im;
        return Gaussian((a.re * b.re + a.im * b.im) / n,
                        (a.im * b.re - a.re * b.im) / n);
    }
    Gaussian& operator/=(const Gaussian& o) { *this = *this / o; return *this; }
};

std::string gaussian_to_string(const Gaussian& g);
Gaussian gaussian_from_string(const std::string& s);
std::ostream& operator<<(std::ostream& os, const Gaussian& g);

/// Laurent polynomial in one formal parameter over Q(i); exponent -> coeff,
/// zero coefficients never stored. Used for border-rank scaling factors.
class Laurent {
public:
    Laurent() = default;
    Laurent(Gaussian c) { if (!c.is_zero()) coeffs_[0] = std::move(c); }
    Laurent(int c) : Laurent(Gaussian(c)) {}

    static Laurent monomial(int degree, Gaussian c) {
        Laurent l;
        if (!c.is_zero()) l.coeffs_[degree] = std::move(c);
        return l;
    }

    bool is_zero() const { return coeffs_.empty(); }
    int min_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    int max_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    Gaussian coefficient(int degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? Gaussian() : it->second;
    }

    const std::map<int, Gaussian>& terms() const { return coeffs_; }

    friend bool operator==(const Laurent&, const Laurent&) = default;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
    friend Laurent operator-(Laurent a, const Laurent& b) { a -= b; return a; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
    Laurent operator-() const;

    std::string to_string() const;        // e.g. "1/3*e^-2 + (2+i)*e"
    static Laurent parse(const std::string& s);

private:
    std::map<int, Gaussian> coeffs_;
};

} // namespace symcube
