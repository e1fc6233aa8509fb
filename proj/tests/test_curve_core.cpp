#include <random>
#include <vector>

#include "doctest.h"
#include "twinec/curve/curve.hpp"

using namespace twinec;

namespace {

RationalPoint pt(long x, long y) { return RationalPoint::affine(Rational(x), Rational(y)); }

// Independent doubling oracle for y^2 = x^3 + a x^2 + b x, written out from
// the implicit derivative rather than through the library's add().
RationalPoint double_oracle(long a, long b, const Rational& x, const Rational& y) {
    Rational slope = (Rational(3) * x * x + Rational(2 * a) * x + Rational(b)) / (Rational(2) * y);
    Rational x2 = slope * slope - Rational(a) - Rational(2) * x;
    Rational y2 = -(y + slope * (x2 - x));
    return RationalPoint::affine(x2, y2);
}

// Small multiples of a generator plus torsion: the sampling space of the
// group-law properties.
std::vector<RationalPoint> sample_points(const Curve& c, const RationalPoint& g, int kmax) {
    std::vector<RationalPoint> out;
    auto torsion = two_torsion(c);
    std::vector<RationalPoint> ts{RationalPoint::infinity(), torsion[0], torsion[1], torsion[2]};
    for (int k = -kmax; k <= kmax; ++k) {
        RationalPoint kg = scalar_mul(c, Integer(k), g);
        for (const auto& t : ts) out.push_back(add(c, kg, t));
    }
    return out;
}

}  // namespace

TEST_CASE("curve_new") {
    Curve c = curve_new(3, 1);
    CHECK(c.equation() == "y^2 = x(x+3)(x+5)");
    CHECK(c.e2() == -3);
    CHECK(c.e3() == -5);
    CHECK(c.e2() - c.e3() == 2 * c.sigma());
    Curve m = curve_new(5, -1);
    CHECK(m.equation() == "y^2 = x(x-5)(x-7)");
    CHECK(m.e2() - m.e3() == 2 * m.sigma());
    CHECK_THROWS_AS(curve_new(7, 1), std::invalid_argument);
    CHECK_THROWS_AS(curve_new(13, 1), std::invalid_argument);
    CHECK_THROWS_AS(curve_new(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(curve_new(5, 0), std::invalid_argument);
}

TEST_CASE("is_on_curve") {
    Curve c = curve_new(3, 1);
    // (-4)(-1)(1) = 4 = 2^2
    CHECK(is_on_curve(c, pt(-4, 2)));
    CHECK(is_on_curve(c, pt(0, 0)));
    CHECK(is_on_curve(curve_new(29, -1), pt(0, 0)));
    CHECK_FALSE(is_on_curve(c, pt(1, 1)));
    CHECK(is_on_curve(c, RationalPoint::infinity()));
}

TEST_CASE("add") {
    Curve c = curve_new(3, 1);
    RationalPoint P = pt(-4, 2);
    CHECK(add(c, P, RationalPoint::infinity()) == P);
    CHECK(add(c, RationalPoint::infinity(), P) == P);
    CHECK(add(c, pt(0, 0), pt(0, 0)).is_infinity());
    CHECK(add(c, pt(0, 0), pt(-3, 0)) == pt(-5, 0));
    CHECK(add(c, pt(-3, 0), pt(-5, 0)) == pt(0, 0));
    CHECK_THROWS_AS(add(c, P, pt(1, 1)), std::invalid_argument);
}

TEST_CASE("negate") {
    Curve c = curve_new(3, 1);
    CHECK(negate(c, pt(-4, 2)) == pt(-4, -2));
    CHECK(negate(c, pt(0, 0)) == pt(0, 0));
    CHECK(negate(c, RationalPoint::infinity()).is_infinity());
}

TEST_CASE("scalar_mul") {
    Curve c = curve_new(3, 1);
    RationalPoint P = pt(-4, 2);
    CHECK(scalar_mul(c, 0, P).is_infinity());
    CHECK(scalar_mul(c, 1, P) == P);
    CHECK(scalar_mul(c, -1, P) == pt(-4, -2));
    RationalPoint twice = scalar_mul(c, 2, P);
    CHECK(twice == double_oracle(8, 15, Rational(-4), Rational(2)));
    CHECK(is_on_curve(c, twice));
    CHECK(twice.x() > Rational(0));
    // Frozen from the oracle: 2(-4,2) = (1/16, -63/64).
    CHECK(twice == RationalPoint::affine(Rational(1, 16), Rational(-63, 64)));
    CHECK(scalar_mul(c, 5, P) == add(c, scalar_mul(c, 2, twice), P));
}

TEST_CASE("naive_height") {
    CHECK(naive_height(pt(-4, 2)) == 4);
    CHECK(naive_height(pt(0, 0)) == 1);
    CHECK(naive_height(RationalPoint::affine(Rational(1, 16), Rational(63, 64))) == 16);
    CHECK_THROWS_AS(naive_height(RationalPoint::infinity()), std::invalid_argument);
}

TEST_CASE("in_negative_region") {
    CHECK(in_negative_region(pt(-4, 2)));
    CHECK_FALSE(in_negative_region(pt(0, 0)));
    CHECK_FALSE(in_negative_region(RationalPoint::infinity()));
}

TEST_CASE("twist_map") {
    Curve c = curve_new(3, 1);
    GaussianPoint image = twist_map(c, pt(-4, 2));
    CHECK(image == GaussianPoint::affine(GaussianRational(4), GaussianRational(Rational(0), Rational(2))));
    // 4 (4 - 3)(4 - 5) = -4 = (2i)^2
    CHECK(is_on_curve(c.twist(), image));
    CHECK(twist_map(c, pt(0, 0)) == GaussianPoint::affine(GaussianRational(0), GaussianRational(0)));
    CHECK(twist_map(c, RationalPoint::infinity()).is_infinity());
    CHECK_THROWS_AS(twist_map(c, pt(1, 1)), std::invalid_argument);
}

TEST_CASE("property: group law closure, identity, inverse, associativity") {
    Curve c = curve_new(3, 1);
    auto pool = sample_points(c, pt(-4, 2), 4);
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 1000; ++i) {
        const auto& P = pool[pick(rng)];
        const auto& Q = pool[pick(rng)];
        const auto& R = pool[pick(rng)];
        RationalPoint PQ = add(c, P, Q);
        CHECK(is_on_curve(c, PQ));
        CHECK(add(c, P, negate(c, P)).is_infinity());
        CHECK(add(c, P, RationalPoint::infinity()) == P);
        CHECK(add(c, PQ, R) == add(c, P, add(c, Q, R)));
        CHECK(PQ == add(c, Q, P));
    }
}

TEST_CASE("property: real components for sigma = +1") {
    Curve c = curve_new(3, 1);
    for (const auto& P : sample_points(c, pt(-4, 2), 6)) {
        if (P.is_infinity()) continue;
        bool bounded = P.x() >= Rational(-5) && P.x() <= Rational(-3);
        CHECK((bounded || P.x() >= Rational(0)));
    }
}

TEST_CASE("property: twist_map is a homomorphism") {
    Curve c = curve_new(3, 1);
    Curve t = c.twist();
    auto pool = sample_points(c, pt(-4, 2), 3);
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = 0; i < 100; ++i) {
        const auto& P = pool[pick(rng)];
        const auto& Q = pool[pick(rng)];
        GaussianPoint lhs = twist_map(c, add(c, P, Q));
        GaussianPoint rhs = add(t, twist_map(c, P), twist_map(c, Q));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("group law over the Gauss field") {
    Curve c = curve_new(5, 1);
    GaussianPoint O = GaussianPoint::infinity();
    GaussianPoint T = to_gaussian(pt(-5, 0));
    CHECK(add(c, T, T) == O);
    CHECK(scalar_mul(c, 3, T) == T);
}
