#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cralg {

// Exact rational scalar. All core arithmetic in the toolkit runs on these;
// there is no floating point anywhere in the computation path.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rat_from_string(const std::string& text);
std::string rat_to_string(const Rational& q);
Rational rat_abs(const Rational& q);

// Gaussian rational a + b*i. The coefficient field for polynomials and for
// elements of complexified algebras.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(const Rational& r) : re(r), im(0) {}
    GaussianRational(long r) : re(rat(r)), im(0) {}
    GaussianRational(const Rational& r, const Rational& i) : re(r), im(i) {}

    static GaussianRational unit_i() { return GaussianRational(rat(0), rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussianRational conj() const { return GaussianRational(re, -im); }

    GaussianRational operator-() const { return GaussianRational(-re, -im); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = r;
        im = i;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // Total order (by real then imaginary part); used for deterministic output.
    friend bool operator<(const GaussianRational& a, const GaussianRational& b) {
        int c = cmp(a.re, b.re);
        if (c != 0) return c < 0;
        return cmp(a.im, b.im) < 0;
    }
};

using GQ = GaussianRational;

std::string gq_to_string(const GQ& c);

}  // namespace cralg
