#include "twinec/rank/census.hpp"

#include <algorithm>
#include <stdexcept>

namespace twinec {

namespace {

// Multiples k G for |k| <= bound, indexed by k + bound.
std::vector<RationalPoint> multiples(const Curve& c, const RationalPoint& g, long bound) {
    std::vector<RationalPoint> out(static_cast<std::size_t>(2 * bound + 1));
    RationalPoint acc = RationalPoint::infinity();
    out[static_cast<std::size_t>(bound)] = acc;
    for (long k = 1; k <= bound; ++k) {
        acc = add(c, acc, g);
        out[static_cast<std::size_t>(bound + k)] = acc;
        out[static_cast<std::size_t>(bound - k)] = negate(c, acc);
    }
    return out;
}

bool accepted(const Curve& c, const RationalPoint& P) {
    return in_negative_region(P) && is_double_in_K(c, P);
}

void insert_unique(std::vector<RationalPoint>& points, RationalPoint P) {
    if (P.y().sign() < 0) P = RationalPoint::affine(P.x(), -P.y());
    if (std::find(points.begin(), points.end(), P) == points.end()) points.push_back(std::move(P));
}

}  // namespace

bool is_double_in_K(const Curve& c, const RationalPoint& P) {
    if (!is_on_curve(c, P)) {
        throw std::invalid_argument("is_double_in_K: point " + P.str() + " is not on " + c.equation());
    }
    if (P.is_infinity()) return true;
    const Rational roots[3] = {Rational(c.e1()), Rational(c.e2()), Rational(c.e3())};
    const Rational& x = P.x();
    for (int i = 0; i < 3; ++i) {
        if (x == roots[i]) {
            return is_square_in_gauss(roots[i] - roots[(i + 1) % 3]) &&
                   is_square_in_gauss(roots[i] - roots[(i + 2) % 3]);
        }
    }
    return is_square_in_gauss(x - roots[0]) && is_square_in_gauss(x - roots[1]) &&
           is_square_in_gauss(x - roots[2]);
}

CensusReport n2k_census(const Curve& c, const std::vector<RationalPoint>& generators, long multiple_bound) {
    if (multiple_bound < 0) {
        throw std::invalid_argument("n2k_census: negative multiple bound");
    }
    CensusReport report{c, multiple_bound, {}, 0, false, 0};
    std::vector<RationalPoint> torsion{RationalPoint::infinity()};
    for (const auto& t : two_torsion(c)) torsion.push_back(t);

    std::vector<std::vector<RationalPoint>> tables;
    for (const auto& g : generators) {
        tables.push_back(multiples(c, g, multiple_bound));
        std::vector<RationalPoint> alone;
        for (const auto& kg : tables.back()) {
            for (const auto& t : torsion) {
                RationalPoint P = add(c, kg, t);
                if (accepted(c, P)) insert_unique(alone, P);
            }
        }
        if (alone.size() >= 3) report.unbounded_hint = true;
    }

    // Odometer over (k_1, ..., k_r) in [-B, B]^r.
    const std::size_t width = static_cast<std::size_t>(2 * multiple_bound + 1);
    std::vector<std::size_t> index(generators.size(), 0);
    while (true) {
        RationalPoint sum = RationalPoint::infinity();
        for (std::size_t i = 0; i < index.size(); ++i) sum = add(c, sum, tables[i][index[i]]);
        for (const auto& t : torsion) {
            ++report.enumerated;
            RationalPoint P = add(c, sum, t);
            if (accepted(c, P)) insert_unique(report.census_points, P);
        }
        std::size_t i = 0;
        while (i < index.size() && ++index[i] == width) index[i++] = 0;
        if (i == index.size()) break;
    }

    std::sort(report.census_points.begin(), report.census_points.end(),
              [](const RationalPoint& a, const RationalPoint& b) {
                  Integer ha = naive_height(a);
                  Integer hb = naive_height(b);
                  if (ha != hb) return ha < hb;
                  return a.x() < b.x();
              });
    report.count = report.census_points.size();
    return report;
}

}  // namespace twinec
