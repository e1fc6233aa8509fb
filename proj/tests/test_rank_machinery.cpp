#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "twinec/arith/squarefree.hpp"
#include "twinec/rank/census.hpp"
#include "twinec/rank/descent.hpp"
#include "twinec/rank/point_search.hpp"
#include "twinec/rank/torsion.hpp"

using namespace twinec;

namespace {

RationalPoint pt(long x, long y) { return RationalPoint::affine(Rational(x), Rational(y)); }

const std::vector<long> kTwinP = {3, 5, 11, 17, 29, 41, 59, 71, 101, 107, 137, 149, 179, 191, 197};

long mod(long a, long m) { return ((a % m) + m) % m; }

// #E(F_ell) by listing every affine (x, y) mod ell.
long brute_count(long a2, long a4, long ell) {
    long n = 1;
    for (long x = 0; x < ell; ++x) {
        long rhs = mod(mod(x * x % ell * x, ell) + mod(a2, ell) * x % ell * x + mod(a4, ell) * x, ell);
        for (long y = 0; y < ell; ++y) {
            if (y * y % ell == rhs) ++n;
        }
    }
    return n;
}

// F_{ell^2} = F_ell[t]/(t^2 + 1) for ell = 3 (mod 4).
struct Fq2 {
    long a, b, ell;
    Fq2 operator+(const Fq2& o) const { return {(a + o.a) % ell, (b + o.b) % ell, ell}; }
    Fq2 operator*(const Fq2& o) const {
        return {mod(a * o.a - b * o.b, ell), mod(a * o.b + b * o.a, ell), ell};
    }
    bool operator==(const Fq2& o) const { return a == o.a && b == o.b; }
};

long brute_count_square(long a2, long a4, long ell) {
    std::vector<Fq2> all;
    for (long a = 0; a < ell; ++a)
        for (long b = 0; b < ell; ++b) all.push_back({a, b, ell});
    // Number of square roots of each element.
    std::vector<long> roots(ell * ell, 0);
    for (const auto& y : all) {
        Fq2 s = y * y;
        ++roots[s.a * ell + s.b];
    }
    Fq2 A{mod(a2, ell), 0, ell}, B{mod(a4, ell), 0, ell};
    long n = 1;
    for (const auto& x : all) {
        Fq2 r = x * x * x + A * x * x + B * x;
        n += roots[r.a * ell + r.b];
    }
    return n;
}

// Independent local square test in Q_v: sign at the real place; even
// valuation and a unit that is a square mod ell (mod 8 at ell = 2).
bool oracle_local_square(const Rational& r, long ell) {
    if (r.is_zero()) return false;
    if (ell == 0) return r.sign() > 0;
    Integer n = r.num(), d = r.den();
    long v = 0;
    while (n % ell == 0) { n /= ell; ++v; }
    while (d % ell == 0) { d /= ell; --v; }
    if (v % 2 != 0) return false;
    long m = ell == 2 ? 8 : ell;
    long u = mod(Integer(n * d % m).get_si(), m);
    for (long t = 0; t < m; ++t) {
        if (t * t % m == u) return true;
    }
    return false;
}

// Whether the torsor of (d1, d2) has a Q_v-point, by sampling x near every
// root and at every scale: x in d1 Q_v^2, x - e2 in d2 Q_v^2, x - e3 in d1 d2 Q_v^2.
bool oracle_torsor_local(const Curve& c, const DescentPair& d, long ell) {
    const Rational e[3] = {Rational(c.e1()), Rational(c.e2()), Rational(c.e3())};
    Rational d1(d.d1), d2(d.d2), d12(d.d1 * d.d2);
    auto hit = [&](const Rational& x) {
        if (x == e[0] || x == e[1] || x == e[2]) return false;
        return oracle_local_square((x - e[0]) / d1, ell) && oracle_local_square((x - e[1]) / d2, ell) &&
               oracle_local_square((x - e[2]) / d12, ell);
    };
    const long base = ell == 0 ? 7 : ell;
    for (long k = -6; k <= 10; ++k) {
        Integer pw = 1;
        for (long j = 0; j < std::abs(k); ++j) pw *= base;
        Rational scale = k >= 0 ? Rational(pw) : Rational(Integer(1), pw);
        for (long u = -40; u <= 40; ++u) {
            if (u == 0) continue;
            Rational step = Rational(u) * scale;
            for (const auto& root : e) {
                if (hit(root + step)) return true;
            }
        }
    }
    return false;
}

std::vector<RationalPoint> multiples_with_torsion(const Curve& c, const RationalPoint& g, int kmax) {
    std::vector<RationalPoint> out;
    auto t = two_torsion(c);
    for (int k = -kmax; k <= kmax; ++k) {
        RationalPoint kg = scalar_mul(c, Integer(k), g);
        out.push_back(kg);
        for (const auto& s : t) out.push_back(add(c, kg, s));
    }
    return out;
}

}  // namespace

TEST_CASE("torsion over Q") {
    Curve c = curve_new(3, 1);
    TorsionReport t = torsion_over_Q(c);
    REQUIRE(t.points.size() == 4);
    CHECK(t.points[0].is_infinity());
    CHECK(t.points[1] == pt(0, 0));
    CHECK(t.points[2] == pt(-3, 0));
    CHECK(t.points[3] == pt(-5, 0));
    CHECK(t.structure == std::vector<int>{2, 2});
    CHECK(t.complete);
    for (const auto& P : t.points) CHECK(scalar_mul(c, Integer(2), P).is_infinity());

    TorsionReport t5 = torsion_over_Q(curve_new(5, 1));
    CHECK(t5.points[2] == pt(-5, 0));
    CHECK(t5.points[3] == pt(-7, 0));
    CHECK(t5.complete);
}

TEST_CASE("torsion over K") {
    Curve c = curve_new(3, 1);
    TorsionReport t = torsion_over_K(c);
    CHECK(t.field_label == "K");
    CHECK(t.structure == std::vector<int>{2, 2});
    CHECK(t.odd_part_bound == 1);
    CHECK(t.complete);
    CHECK(t.reductions.size() >= 3);
    for (const auto& h : t.halving) CHECK_FALSE(h.halvable);
    CHECK(torsion_over_K(curve_new(5, 1)).complete);
}

TEST_CASE("reduction counts against brute force") {
    Curve c = curve_new(3, 1);
    long n13 = brute_count(8, 15, 13);
    CHECK(count_points_mod(c, 13) == n13);
    CHECK(n13 % 4 == 0);
    for (long p : {3L, 5L, 11L, 17L}) {
        for (int s : {1, -1}) {
            Curve e = curve_new(p, s);
            long a2 = e.a2().get_si(), a4 = e.a4().get_si();
            for (long ell : {7L, 11L, 13L, 19L, 23L, 29L, 31L, 37L}) {
                if (ell == p || ell == p + 2) continue;
                CHECK(count_points_mod(e, ell) == brute_count(a2, a4, ell));
                if (ell % 4 == 3 && ell < 24) {
                    CHECK(count_points_mod_square(e, ell) == brute_count_square(a2, a4, ell));
                }
            }
        }
    }
}

TEST_CASE("point_search") {
    Curve c = curve_new(3, 1);
    auto hits = point_search(c, 10);
    bool found = std::any_of(hits.begin(), hits.end(), [](const SearchHit& h) { return h.point == pt(-4, 2); });
    CHECK(found);
    for (const auto& h : hits) CHECK(is_on_curve(c, h.point));

    auto neg = point_search(c, 10, SearchRegion::NegativeX);
    std::vector<RationalPoint> got;
    for (const auto& h : neg) got.push_back(h.point);
    CHECK(got == std::vector<RationalPoint>{pt(-3, 0), pt(-4, 2), pt(-5, 0)});
    CHECK(neg[0].torsion);
    CHECK_FALSE(neg[1].torsion);

    auto five = point_search(curve_new(5, 1), 10000);
    REQUIRE(five.size() == 4);
    for (const auto& h : five) CHECK(h.torsion);
}

TEST_CASE("point_search agrees with a direct scan") {
    for (long p : {3L, 11L}) {
        Curve c = curve_new(p, 1);
        auto hits = point_search(c, 400);
        std::size_t brute = 1;
        for (long e = 1; e * e <= 400; ++e) {
            for (long m = -400; m <= 400; ++m) {
                if (std::gcd(m, e) != 1) continue;
                Rational x(Integer(m), Integer(e * e));
                if (is_square_rational(x * (x + Rational(p)) * (x + Rational(p + 2)))) ++brute;
            }
        }
        CHECK(hits.size() == brute);
    }
}

TEST_CASE("two_descent") {
    Curve c = curve_new(3, 1);
    CHECK(kummer_image(c, pt(-4, 2)) == DescentPair{Integer(-1), Integer(-1)});
    CHECK(kummer_image(c, RationalPoint::infinity()) == DescentPair{Integer(1), Integer(1)});
    DescentReport r = two_descent(c);
    CHECK(r.rank_upper == 1);
    CHECK(r.rank_lower == 1);
    CHECK(r.resolved);
    REQUIRE(r.generators_found.size() == 1);
    CHECK(r.generators_found[0] == pt(-4, 2));
    auto has = [&](const DescentPair& d) {
        return std::any_of(r.surviving_pairs.begin(), r.surviving_pairs.end(),
                           [&](const SelmerElement& s) { return s.pair == d; });
    };
    CHECK(has({Integer(-1), Integer(-1)}));
    CHECK(has({Integer(1), Integer(1)}));
    CHECK(r.candidate_pairs == 64);

    DescentReport r5 = two_descent(curve_new(5, 1));
    CHECK(r5.rank_upper == 0);
    CHECK(r5.surviving_pairs.size() == 4);
}

TEST_CASE("local solvability against a sampling oracle") {
    for (long p : {3L, 5L, 11L}) {
        for (int s : {1, -1}) {
            Curve c = curve_new(p, s);
            DescentReport r = two_descent(c);
            std::size_t oracle_selmer = 0;
            for (const auto& d1 : squarefree_divisors(Integer(p * (p + 2)))) {
                for (const auto& d2 : squarefree_divisors(Integer(2 * p))) {
                    DescentPair d{d1.value(), d2.value()};
                    bool everywhere = true;
                    for (const auto& img : r.local_images) {
                        bool impl = img.contains(local_pair_code(Rational(d.d1), Rational(d.d2), img.place));
                        bool oracle = oracle_torsor_local(c, d, img.place);
                        CHECK_MESSAGE(impl == oracle, "p=", p, " sigma=", s, " pair (", d.d1, ",", d.d2,
                                      ") place ", img.place);
                        everywhere = everywhere && oracle;
                    }
                    if (everywhere) ++oracle_selmer;
                }
            }
            CHECK(oracle_selmer == r.surviving_pairs.size());
        }
    }
}

TEST_CASE("rank over K") {
    KRankReport k3 = rank_over_K(TwinPrimePair::from_p(3), 1);
    CHECK(k3.rank_lower == 1);
    CHECK(k3.rank_upper == 1);
    CHECK(k3.rank_plus_Q.rank_lower == 1);
    CHECK(k3.rank_minus_Q.rank_upper == 0);
    KRankReport k5 = rank_over_K(TwinPrimePair::from_p(5), 1);
    CHECK(k5.resolved());
    CHECK(k5.rank_upper == 0);
    KRankReport k11 = rank_over_K(TwinPrimePair::from_p(11), 1);
    CHECK(k11.resolved());
    CHECK(k11.rank_upper == 1);
}

TEST_CASE("is_double_in_K") {
    Curve c = curve_new(3, 1);
    CHECK(is_double_in_K(c, pt(-4, 2)));
    CHECK_FALSE(is_double_in_K(c, pt(-3, 0)));
    CHECK(is_double_in_K(c, RationalPoint::infinity()));
    CHECK_THROWS_AS(is_double_in_K(c, pt(1, 1)), std::invalid_argument);
}

TEST_CASE("n2k_census") {
    Curve c = curve_new(3, 1);
    CensusReport r = n2k_census(c, {pt(-4, 2)}, 9);
    CHECK(r.count >= 5);
    CHECK(r.unbounded_hint);
    for (long k : {1L, 3L, 5L, 7L, 9L}) {
        RationalPoint kg = scalar_mul(c, Integer(k), pt(-4, 2));
        if (kg.y().sign() < 0) kg = negate(c, kg);
        CHECK(std::find(r.census_points.begin(), r.census_points.end(), kg) != r.census_points.end());
    }
    for (const auto& P : r.census_points) {
        CHECK(in_negative_region(P));
        CHECK(is_double_in_K(c, P));
        CHECK(P.y().sign() > 0);
    }
    CHECK(n2k_census(c, {}, 9).count == 0);
    CHECK(n2k_census(curve_new(5, 1), {}, 9).count == 0);
}

TEST_CASE("property: descent consistency") {
    for (long p : {3L, 5L, 11L, 17L, 29L, 41L}) {
        for (int s : {1, -1}) {
            Curve c = curve_new(p, s);
            DescentReport r = two_descent(c);
            CHECK(r.rank_lower <= r.rank_upper);
            CHECK(r.surviving_pairs.size() == (std::size_t{1} << (r.rank_upper + 2)));
            for (const auto& h : point_search(c, 2000)) {
                DescentPair d = kummer_image(c, h.point);
                bool in = std::any_of(r.surviving_pairs.begin(), r.surviving_pairs.end(),
                                      [&](const SelmerElement& e) { return e.pair == d; });
                CHECK_MESSAGE(in, "p=", p, " sigma=", s, " point ", h.point.str());
            }
        }
    }
}

TEST_CASE("property: halving soundness") {
    std::mt19937 rng(20240611);
    std::vector<std::pair<Curve, RationalPoint>> seeds = {
        {curve_new(3, 1), pt(-4, 2)},
        {curve_new(11, 1), RationalPoint::affine(parse_rational("-324/25"), parse_rational("126/125"))},
    };
    for (long p : {17L, 41L}) {
        for (int s : {1, -1}) {
            Curve c = curve_new(p, s);
            for (const auto& h : point_search(c, 10000)) {
                if (!h.torsion) {
                    seeds.emplace_back(c, h.point);
                    break;
                }
            }
        }
    }
    REQUIRE(seeds.size() >= 4);
    int checked = 0;
    while (checked < 100) {
        const auto& [c, g] = seeds[rng() % seeds.size()];
        auto pool = multiples_with_torsion(c, g, 3);
        RationalPoint R = pool[rng() % pool.size()];
        RationalPoint D = scalar_mul(c, Integer(2), R);
        CHECK(is_double_in_K(c, D));
        ++checked;
    }
    for (long p : kTwinP) {
        for (int s : {1, -1}) {
            Curve c = curve_new(p, s);
            for (const auto& t : two_torsion(c)) CHECK_FALSE(is_double_in_K(c, t));
        }
    }
}

TEST_CASE("property: census stable under adding doubles") {
    Curve c = curve_new(3, 1);
    RationalPoint g = pt(-4, 2);
    CensusReport r = n2k_census(c, {g}, 5);
    auto pool = multiples_with_torsion(c, g, 2);
    for (const auto& P : r.census_points) {
        for (const auto& R : pool) {
            RationalPoint Q = add(c, P, scalar_mul(c, Integer(2), R));
            if (!Q.is_infinity() && in_negative_region(Q)) CHECK(is_double_in_K(c, Q));
        }
    }
}

TEST_CASE("property: twist rank and the rank bound for p < 200") {
    for (long p : kTwinP) {
        auto pair = TwinPrimePair::from_p(p);
        KRankReport plus = rank_over_K(pair, 1);
        KRankReport minus = rank_over_K(pair, -1);
        CHECK(plus.rank_lower == minus.rank_lower);
        CHECK(plus.rank_upper == minus.rank_upper);
        CHECK_MESSAGE(plus.rank_upper <= 3, "p=", p);
        if (p % 8 == 5) CHECK(plus.rank_upper == 0);
    }
}
