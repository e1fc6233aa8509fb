#pragma once

// The twin-prime curves E_sigma : y^2 = x (x + sigma p) (x + sigma q), their
// points over Q and over Q(i), and the chord-tangent group law.

#include <array>
#include <concepts>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "twinec/arith/gaussian.hpp"
#include "twinec/arith/integer.hpp"
#include "twinec/arith/rational.hpp"

namespace twinec {

class TwinPrimePair {
public:
    /// Throws std::invalid_argument unless p >= 3 and p, p + 2 are both prime.
    static TwinPrimePair from_p(const Integer& p);

    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }

    friend bool operator==(const TwinPrimePair&, const TwinPrimePair&) = default;

private:
    TwinPrimePair(Integer p, Integer q) : p_(std::move(p)), q_(std::move(q)) {}

    Integer p_;
    Integer q_;
};

/// True iff (p, p + 2) is a twin-prime pair with p >= 3.
bool is_twin_prime_p(const Integer& p);

class Curve {
public:
    /// sigma must be +1 or -1.
    Curve(TwinPrimePair pair, int sigma);

    const TwinPrimePair& pair() const { return pair_; }
    int sigma() const { return sigma_; }

    /// Roots of the cubic: (0, -sigma p, -sigma q).
    const Integer& e1() const { return e1_; }
    const Integer& e2() const { return e2_; }
    const Integer& e3() const { return e3_; }

    /// Short form y^2 = x^3 + a2 x^2 + a4 x.
    const Integer& a2() const { return a2_; }
    const Integer& a4() const { return a4_; }

    /// The quadratic twist by -1, i.e. E_{-sigma}.
    Curve twist() const { return {pair_, -sigma_}; }

    /// "y^2 = x(x+3)(x+5)"
    std::string equation() const;

    friend bool operator==(const Curve& a, const Curve& b) {
        return a.pair_ == b.pair_ && a.sigma_ == b.sigma_;
    }

private:
    TwinPrimePair pair_;
    int sigma_;
    Integer e1_, e2_, e3_, a2_, a4_;
};

/// Throws std::invalid_argument if (p, p + 2) is not a twin-prime pair or sigma is not +-1.
Curve curve_new(const Integer& p, int sigma);

template <class F>
concept ExactField = requires(const F& a, const F& b) {
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    F(Rational(1));
};

template <ExactField F>
class Point {
public:
    Point() = default;  // the point at infinity

    static Point infinity() { return Point(); }
    static Point affine(F x, F y) { return Point(std::move(x), std::move(y)); }

    bool is_infinity() const { return infinity_; }
    const F& x() const {
        require_affine();
        return x_;
    }
    const F& y() const {
        require_affine();
        return y_;
    }

    friend bool operator==(const Point&, const Point&) = default;

    std::string str() const {
        if (infinity_) return "O";
        return "(" + x_.str() + ", " + y_.str() + ")";
    }

private:
    Point(F x, F y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

    void require_affine() const {
        if (infinity_) throw std::logic_error("point at infinity has no coordinates");
    }

    bool infinity_ = true;
    F x_{Rational(0)};
    F y_{Rational(0)};
};

using RationalPoint = Point<Rational>;
using GaussianPoint = Point<GaussianRational>;

template <ExactField F>
std::ostream& operator<<(std::ostream& os, const Point<F>& p) {
    return os << p.str();
}

namespace detail {

template <ExactField F>
F embed(const Integer& n) {
    return F(Rational(n));
}

/// x (x + sigma p)(x + sigma q) = x^3 + a2 x^2 + a4 x
template <ExactField F>
F cubic(const Curve& c, const F& x) {
    return ((x + embed<F>(c.a2())) * x + embed<F>(c.a4())) * x;
}

template <ExactField F>
Point<F> add_unchecked(const Curve& c, const Point<F>& P, const Point<F>& Q) {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    const F& x1 = P.x();
    const F& y1 = P.y();
    const F& x2 = Q.x();
    const F& y2 = Q.y();
    F lambda{Rational(0)};
    if (x1 == x2) {
        if ((y1 + y2).is_zero()) {
            return Point<F>::infinity();
        }
        // Tangent slope (3x^2 + 2 a2 x + a4) / 2y.
        F three{Rational(3)};
        F two{Rational(2)};
        lambda = (three * x1 * x1 + two * embed<F>(c.a2()) * x1 + embed<F>(c.a4())) / (two * y1);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    F x3 = lambda * lambda - embed<F>(c.a2()) - x1 - x2;
    F y3 = lambda * (x1 - x3) - y1;
    return Point<F>::affine(std::move(x3), std::move(y3));
}

template <ExactField F>
Point<F> negate_unchecked(const Point<F>& P) {
    if (P.is_infinity()) return P;
    return Point<F>::affine(P.x(), -P.y());
}

template <ExactField F>
Point<F> scalar_mul_unchecked(const Curve& c, Integer n, Point<F> P) {
    if (sgn(n) < 0) {
        n = -n;
        P = negate_unchecked(P);
    }
    Point<F> acc = Point<F>::infinity();
    while (sgn(n) > 0) {
        if (mpz_odd_p(n.get_mpz_t()) != 0) {
            acc = add_unchecked(c, acc, P);
        }
        n >>= 1;
        if (sgn(n) > 0) {
            P = add_unchecked(c, P, P);
        }
    }
    return acc;
}

template <ExactField F>
void require_on_curve(const Curve& c, const Point<F>& P);

}  // namespace detail

template <ExactField F>
bool is_on_curve(const Curve& c, const Point<F>& P) {
    if (P.is_infinity()) return true;
    return P.y() * P.y() == detail::cubic(c, P.x());
}

/// P + Q. Throws std::invalid_argument if either point is off the curve.
template <ExactField F>
Point<F> add(const Curve& c, const Point<F>& P, const Point<F>& Q) {
    detail::require_on_curve(c, P);
    detail::require_on_curve(c, Q);
    return detail::add_unchecked(c, P, Q);
}

template <ExactField F>
Point<F> negate(const Curve& c, const Point<F>& P) {
    detail::require_on_curve(c, P);
    return detail::negate_unchecked(P);
}

/// n * P by double-and-add; negative n goes through negate.
template <ExactField F>
Point<F> scalar_mul(const Curve& c, const Integer& n, const Point<F>& P) {
    detail::require_on_curve(c, P);
    return detail::scalar_mul_unchecked(c, n, P);
}

template <ExactField F>
void detail::require_on_curve(const Curve& c, const Point<F>& P) {
    if (!is_on_curve(c, P)) {
        throw std::invalid_argument("point " + P.str() + " is not on " + c.equation());
    }
}

/// With x = m / e^2 in lowest terms, max(|m|, e^2). Throws for the point at infinity.
Integer naive_height(const RationalPoint& P);

/// Membership in E(Q)^-: affine with x < 0.
bool in_negative_region(const RationalPoint& P);

/// (x, y) on E_sigma  ->  (-x, i y) on E_{-sigma}. Throws if P is off the curve.
GaussianPoint twist_map(const Curve& c, const RationalPoint& P);

/// Embeds a rational point into E(K).
GaussianPoint to_gaussian(const RationalPoint& P);

/// The 2-torsion points (0,0), (e2,0), (e3,0).
std::array<RationalPoint, 3> two_torsion(const Curve& c);

}  // namespace twinec
