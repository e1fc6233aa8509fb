#include "twinec/arith/gaussian.hpp"

#include <stdexcept>

namespace twinec {

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero()) {
        throw std::domain_error("gaussian division by zero");
    }
    Rational n = b.norm();
    GaussianRational t = a * b.conj();
    return {t.re() / n, t.im() / n};
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) {
        return re_.str();
    }
    std::string imag = im_ == Rational(1) ? "i" : im_ == Rational(-1) ? "-i" : im_.str() + "i";
    if (re_.is_zero()) {
        return imag;
    }
    if (im_.sign() > 0) {
        return re_.str() + "+" + imag;
    }
    return re_.str() + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

bool is_square_in_gauss(const Rational& r) {
    return is_square_rational(r).has_value() || is_square_rational(-r).has_value();
}

}  // namespace twinec
