#include "twinec/rank/descent.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "twinec/arith/square_sieve.hpp"
#include "twinec/arith/squarefree.hpp"
#include "twinec/rank/point_search.hpp"

namespace twinec {

namespace {

// Square class of r as a squarefree integer supported on {-1, 2, p, q}.
// Any other prime must occur to an even power; that is a theorem for
// descent images, so a leftover non-square means a bug upstream.
Integer class_over(const Rational& r, const std::array<unsigned long, 3>& primes) {
    Integer n = r.num() * r.den();
    Integer out = sgn(n) < 0 ? Integer(-1) : Integer(1);
    n = abs(n);
    for (unsigned long ell : primes) {
        unsigned v = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), ell) != 0) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), ell);
            ++v;
        }
        if (v % 2 == 1) out *= ell;
    }
    if (!is_perfect_square(n)) {
        throw std::logic_error("descent image has unexpected prime support: " + r.str());
    }
    return out;
}

std::array<unsigned long, 3> class_primes(const Curve& c) {
    return {2UL, c.pair().p().get_ui(), c.pair().q().get_ui()};
}

int log2_exact(std::size_t n) {
    int k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    if ((std::size_t{1} << k) != n) {
        throw std::logic_error("group order is not a power of two");
    }
    return k;
}

class PairSpan {
public:
    bool contains(const DescentPair& d) const {
        return std::find(elements_.begin(), elements_.end(), d) != elements_.end();
    }

    void add(const DescentPair& d) {
        if (contains(d)) return;
        std::vector<DescentPair> next = elements_;
        for (const auto& e : elements_) next.push_back(descent_pair_mul(e, d));
        elements_ = std::move(next);
    }

    std::size_t size() const { return elements_.size(); }

private:
    std::vector<DescentPair> elements_{DescentPair{Integer(1), Integer(1)}};
};

std::optional<RationalPoint> torsor_search(const Curve& c, const DescentPair& pair, long bound) {
    const std::int64_t d1 = to_int64(pair.d1);
    const std::int64_t d2 = to_int64(pair.d2);
    const std::int64_t sp = c.sigma() * to_int64(c.pair().p());
    const std::int64_t sq = c.sigma() * to_int64(c.pair().q());
    const long double worst = static_cast<long double>(std::llabs(d1)) * bound * bound *
                              static_cast<long double>(std::llabs(d1 * d2)) * (1.0L + std::llabs(sq));
    if (worst > 1.0e36L) {
        throw std::invalid_argument("torsor search bound too large for the native kernel");
    }
    const SquareSieve& sieve = SquareSieve::instance();
    // x = d1 (a/b)^2 must satisfy x + sigma p in d2 Q^2 and x + sigma q in d1 d2 Q^2.
    auto try_ab = [&](std::int64_t a, std::int64_t b) -> std::optional<RationalPoint> {
        if (std::gcd(a, b) != 1) return std::nullopt;
        const i128 A = static_cast<i128>(d1) * a * a;
        const i128 bb = static_cast<i128>(b) * b;
        const i128 second = d2 * (A + sp * bb);
        if (second <= 0 || !sieve.maybe_square(second) || isqrt_exact_i128(second) < 0) return std::nullopt;
        const i128 third = static_cast<i128>(d1 * d2) * (A + sq * bb);
        if (third <= 0 || !sieve.maybe_square(third) || isqrt_exact_i128(third) < 0) return std::nullopt;
        Rational x(Integer(d1) * a * a, Integer(b) * b);
        Rational fx = x * (x + Rational(sp)) * (x + Rational(sq));
        auto y = is_square_rational(fx);
        if (!y) throw std::logic_error("torsor point with non-square cubic");
        return RationalPoint::affine(x, *y);
    };
    for (std::int64_t s = 1; s <= bound; ++s) {
        for (std::int64_t t = 1; t <= s; ++t) {
            if (auto P = try_ab(s, t)) return P;
            if (t != s) {
                if (auto P = try_ab(t, s)) return P;
            }
        }
    }
    return std::nullopt;
}

bool canonical_less(const RationalPoint& a, const RationalPoint& b) {
    bool na = in_negative_region(a);
    bool nb = in_negative_region(b);
    if (na != nb) return na;
    Integer ha = naive_height(a);
    Integer hb = naive_height(b);
    if (ha != hb) return ha < hb;
    return a.x() < b.x();
}

}  // namespace

DescentPair descent_pair_mul(const DescentPair& a, const DescentPair& b) {
    return {squarefree_mul(a.d1, b.d1), squarefree_mul(a.d2, b.d2)};
}

DescentPair kummer_image(const Curve& c, const RationalPoint& P) {
    if (!is_on_curve(c, P)) {
        throw std::invalid_argument("kummer_image: point " + P.str() + " is not on " + c.equation());
    }
    if (P.is_infinity()) return {Integer(1), Integer(1)};
    const auto primes = class_primes(c);
    const Rational e1(c.e1()), e2(c.e2()), e3(c.e3());
    const Rational& x = P.x();
    if (x == e1) {
        return {class_over((e1 - e2) * (e1 - e3), primes), class_over(e1 - e2, primes)};
    }
    if (x == e2) {
        return {class_over(e2 - e1, primes), class_over((e2 - e1) * (e2 - e3), primes)};
    }
    return {class_over(x - e1, primes), class_over(x - e2, primes)};
}

RationalPoint canonical_modulo_torsion(const Curve& c, const RationalPoint& P) {
    auto torsion = two_torsion(c);
    std::vector<RationalPoint> candidates{P};
    for (const auto& t : torsion) candidates.push_back(add(c, P, t));
    for (auto& cand : candidates) {
        if (!cand.is_infinity() && cand.y().sign() < 0) cand = negate(c, cand);
    }
    RationalPoint best = candidates.front();
    for (const auto& cand : candidates) {
        if (cand.is_infinity()) continue;
        if (best.is_infinity() || canonical_less(cand, best)) best = cand;
    }
    return best;
}

DescentReport two_descent(const Curve& c, const DescentOptions& options) {
    DescentReport report{c, {}, 0, {}, 0, false, {}, options, 0};

    for (Place v : bad_places(c)) {
        report.local_images.push_back(local_kummer_image(c, v));
    }

    const auto d1s = squarefree_divisors(c.pair().p() * c.pair().q());
    const auto d2s = squarefree_divisors(2 * c.pair().p());
    for (const auto& a : d1s) {
        for (const auto& b : d2s) {
            ++report.candidate_pairs;
            bool locally_solvable = true;
            for (const auto& image : report.local_images) {
                if (!image.contains(local_pair_code(Rational(a.value()), Rational(b.value()), image.place))) {
                    locally_solvable = false;
                    break;
                }
            }
            if (locally_solvable) {
                report.surviving_pairs.push_back({{a.value(), b.value()}, false, std::nullopt});
            }
        }
    }
    auto in_selmer = [&](const DescentPair& d) {
        return std::any_of(report.surviving_pairs.begin(), report.surviving_pairs.end(),
                           [&](const SelmerElement& s) { return s.pair == d; });
    };

    PairSpan span;
    for (const auto& t : two_torsion(c)) span.add(kummer_image(c, t));

    auto adopt = [&](const RationalPoint& P) {
        DescentPair image = kummer_image(c, P);
        if (!in_selmer(image)) {
            throw std::logic_error("global point " + P.str() + " maps outside the Selmer group");
        }
        if (span.contains(image)) return false;
        span.add(image);
        report.generators_found.push_back(canonical_modulo_torsion(c, P));
        return true;
    };

    for (const auto& hit : point_search(c, options.height_bound, SearchRegion::All)) {
        if (!hit.torsion) adopt(hit.point);
    }

    // Representatives of cosets of the known image whose torsor search came up empty.
    std::vector<DescentPair> unexplained;
    auto already_tried = [&](const DescentPair& d) {
        return std::any_of(unexplained.begin(), unexplained.end(),
                           [&](const DescentPair& u) { return span.contains(descent_pair_mul(d, u)); });
    };
    for (auto& element : report.surviving_pairs) {
        if (span.contains(element.pair) || already_tried(element.pair)) continue;
        if (auto P = torsor_search(c, element.pair, options.torsor_bound)) {
            if (kummer_image(c, *P) != element.pair) {
                throw std::logic_error("torsor point has the wrong descent image");
            }
            element.witness = P;
            adopt(*P);
        } else {
            unexplained.push_back(element.pair);
        }
    }

    for (auto& element : report.surviving_pairs) {
        element.image_member = span.contains(element.pair);
    }
    for (const auto& g : report.generators_found) {
        DescentPair image = kummer_image(c, g);
        for (auto& element : report.surviving_pairs) {
            if (element.pair == image && !element.witness) element.witness = g;
        }
    }

    report.rank_upper = log2_exact(report.surviving_pairs.size()) - 2;
    report.rank_lower = log2_exact(span.size()) - 2;
    report.resolved = report.rank_lower == report.rank_upper;
    return report;
}

KRankReport rank_over_K(const TwinPrimePair& pair, int sigma, const DescentOptions& options) {
    if (sigma != 1 && sigma != -1) {
        throw std::invalid_argument("sigma must be +1 or -1");
    }
    KRankReport report{pair, sigma, two_descent(Curve(pair, 1), options), two_descent(Curve(pair, -1), options),
                       0, 0};
    report.rank_lower = report.rank_plus_Q.rank_lower + report.rank_minus_Q.rank_lower;
    report.rank_upper = report.rank_plus_Q.rank_upper + report.rank_minus_Q.rank_upper;
    return report;
}

}  // namespace twinec
