#include "twinec/curve/curve.hpp"

#include <stdexcept>

#include "twinec/arith/squarefree.hpp"

namespace twinec {

bool is_twin_prime_p(const Integer& p) {
    if (p < 3) return false;
    if (!p.fits_ulong_p() || !Integer(p + 2).fits_ulong_p()) {
        throw std::out_of_range("twin-prime test limited to 64-bit inputs");
    }
    return is_prime(p) && is_prime(Integer(p + 2));
}

TwinPrimePair TwinPrimePair::from_p(const Integer& p) {
    if (!is_twin_prime_p(p)) {
        throw std::invalid_argument("(" + to_string(p) + ", " + to_string(Integer(p + 2)) +
                                    ") is not a twin-prime pair");
    }
    return {p, p + 2};
}

Curve::Curve(TwinPrimePair pair, int sigma) : pair_(std::move(pair)), sigma_(sigma) {
    if (sigma != 1 && sigma != -1) {
        throw std::invalid_argument("sigma must be +1 or -1");
    }
    e1_ = 0;
    e2_ = -sigma_ * pair_.p();
    e3_ = -sigma_ * pair_.q();
    a2_ = sigma_ * (pair_.p() + pair_.q());
    a4_ = pair_.p() * pair_.q();
}

std::string Curve::equation() const {
    const char* op = sigma_ > 0 ? "+" : "-";
    return "y^2 = x(x" + std::string(op) + to_string(pair_.p()) + ")(x" + op + to_string(pair_.q()) + ")";
}

Curve curve_new(const Integer& p, int sigma) { return {TwinPrimePair::from_p(p), sigma}; }

Integer naive_height(const RationalPoint& P) {
    if (P.is_infinity()) {
        throw std::invalid_argument("naive_height: point at infinity");
    }
    const Rational& x = P.x();
    Integer m = abs(x.num());
    return m > x.den() ? m : x.den();
}

bool in_negative_region(const RationalPoint& P) { return !P.is_infinity() && P.x().sign() < 0; }

GaussianPoint to_gaussian(const RationalPoint& P) {
    if (P.is_infinity()) return GaussianPoint::infinity();
    return GaussianPoint::affine(GaussianRational(P.x()), GaussianRational(P.y()));
}

GaussianPoint twist_map(const Curve& c, const RationalPoint& P) {
    if (!is_on_curve(c, P)) {
        throw std::invalid_argument("twist_map: point " + P.str() + " is not on " + c.equation());
    }
    if (P.is_infinity()) return GaussianPoint::infinity();
    GaussianPoint image =
        GaussianPoint::affine(GaussianRational(-P.x()), GaussianRational(Rational(0), P.y()));
    if (!is_on_curve(c.twist(), image)) {
        throw std::logic_error("twist_map produced an off-curve point");
    }
    return image;
}

std::array<RationalPoint, 3> two_torsion(const Curve& c) {
    return {RationalPoint::affine(Rational(c.e1()), Rational(0)),
            RationalPoint::affine(Rational(c.e2()), Rational(0)),
            RationalPoint::affine(Rational(c.e3()), Rational(0))};
}

}  // namespace twinec
