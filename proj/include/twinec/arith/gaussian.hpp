#pragma once

#include <ostream>
#include <string>

#include "twinec/arith/rational.hpp"

namespace twinec {

/// Element re + im*i of the Gauss field Q(i).
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(long re) : re_(re) {}                 // NOLINT(google-explicit-constructor)
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    /// re^2 + im^2
    Rational norm() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    /// Throws std::domain_error on division by zero.
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b);

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    std::string str() const;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

/**
 * True iff the rational r is a square in Q(i).
 *
 * If (a + bi)^2 = r with r real then 2ab = 0, so either r = a^2 or
 * r = (bi)^2 = -b^2; r is a square in Q(i) exactly when r or -r is a
 * square in Q.
 */
bool is_square_in_gauss(const Rational& r);

}  // namespace twinec
