#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>

#include "twinec/arith/integer.hpp"

namespace twinec {

/**
 * Exact rational number.
 *
 * Always stored in lowest terms with a positive denominator, zero as 0/1,
 * so structural equality is numeric equality.
 */
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT
    /// Throws std::domain_error when den == 0.
    Rational(Integer num, Integer den);

    const Integer& num() const { return num_; }
    const Integer& den() const { return den_; }

    int sign() const { return sgn(num_); }
    bool is_zero() const { return sgn(num_) == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    /// "n" for integers, "n/d" otherwise.
    std::string str() const;

private:
    void normalize();

    Integer num_;
    Integer den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

/// Parses "n" or "n/d".
Rational parse_rational(std::string_view text);

Rational rational_normalize(Integer num, Integer den);

/// The nonnegative rational square root of r, if r is a square in Q.
std::optional<Rational> is_square_rational(const Rational& r);

}  // namespace twinec
