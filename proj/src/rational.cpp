#include "cralg/rational.hpp"

#include "cralg/error.hpp"

namespace cralg {

Rational rat_from_string(const std::string& text) {
    try {
        Rational q(text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        raise("BadRational", "not a rational literal: '" + text + "'");
    }
}

std::string rat_to_string(const Rational& q) {
    return q.get_str();
}

Rational rat_abs(const Rational& q) {
    return q < 0 ? Rational(-q) : q;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (n == 0) raise("DivisionByZero", "division by zero Gaussian rational");
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = r;
    im = i;
    return *this;
}

std::string gq_to_string(const GQ& c) {
    if (c.im == 0) return rat_to_string(c.re);
    std::string imag = (c.im == 1) ? "i" : (c.im == -1 ? "-i" : rat_to_string(c.im) + "*i");
    if (c.re == 0) return imag;
    std::string out = "(" + rat_to_string(c.re);
    if (c.im > 0)
        out += " + " + ((c.im == 1) ? std::string("i") : rat_to_string(c.im) + "*i");
    else
        out += " - " + ((c.im == -1) ? std::string("i") : rat_to_string(Rational(-c.im)) + "*i");
    return out + ")";
}

}  // namespace cralg
