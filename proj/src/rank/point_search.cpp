#include "twinec/rank/point_search.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "twinec/arith/square_sieve.hpp"

namespace twinec {

namespace {

void scan_interval(const Curve& c, std::int64_t e, std::int64_t lo, std::int64_t hi, std::int64_t sp,
                   std::int64_t sq, const SquareSieve& sieve, std::vector<SearchHit>& out) {
    const std::int64_t e2 = e * e;
    const std::int64_t e3 = e2 * e;
    for (std::int64_t m = lo; m <= hi; ++m) {
        if (e > 1 && std::gcd(m, e) != 1) continue;
        const i128 value = static_cast<i128>(m) * (m + sp * e2) * static_cast<i128>(m + sq * e2);
        if (value < 0 || !sieve.maybe_square(value)) continue;
        const std::int64_t root = isqrt_exact_i128(value);
        if (root < 0) continue;
        Rational x{Integer(m), Integer(e2)};
        Rational y{Integer(root), Integer(e3)};
        RationalPoint P = RationalPoint::affine(x, y);
        if (!is_on_curve(c, P)) {
            throw std::logic_error("point_search produced an off-curve point");
        }
        out.push_back({P, naive_height(P), root == 0});
    }
}

}  // namespace

std::vector<SearchHit> point_search(const Curve& c, const Integer& height_bound, SearchRegion region) {
    if (height_bound < 1) {
        throw std::invalid_argument("point_search: height bound must be >= 1");
    }
    if (height_bound > 1'000'000'000 || c.pair().q() > 1'000'000) {
        throw std::invalid_argument("point_search: bound or prime too large for the native kernel");
    }
    const std::int64_t H = height_bound.get_si();
    // |m (m + sp e^2)(m + sq e^2)| <= H^3 (q + 1)^2 must stay inside __int128.
    const long double qq = c.pair().q().get_d() + 1.0L;
    if (static_cast<long double>(H) * H * H * qq * qq > 4.0e37L) {
        throw std::invalid_argument("point_search: bound too large for the native kernel");
    }
    const std::int64_t sp = c.sigma() * c.pair().p().get_si();
    const std::int64_t sq = c.sigma() * c.pair().q().get_si();
    const SquareSieve& sieve = SquareSieve::instance();

    std::vector<SearchHit> out;
    if (region == SearchRegion::All) {
        out.push_back({RationalPoint::infinity(), Integer(0), true});
    }
    for (std::int64_t e = 1; e * e <= H; ++e) {
        const std::int64_t e2 = e * e;
        // Cubic nonnegative on [min root, middle root] and [max root, inf).
        std::array<std::int64_t, 3> roots{0, -sp * e2, -sq * e2};
        std::sort(roots.begin(), roots.end());
        std::int64_t lo1 = std::max(roots[0], -H);
        std::int64_t hi1 = std::min(roots[1], H);
        std::int64_t lo2 = std::max(roots[2], -H);
        std::int64_t hi2 = H;
        if (region == SearchRegion::NegativeX) {
            hi1 = std::min<std::int64_t>(hi1, -1);
            hi2 = std::min<std::int64_t>(hi2, -1);
        }
        if (lo1 <= hi1) scan_interval(c, e, lo1, hi1, sp, sq, sieve, out);
        if (lo2 <= hi2) scan_interval(c, e, lo2, hi2, sp, sq, sieve, out);
    }
    std::sort(out.begin(), out.end(), [](const SearchHit& a, const SearchHit& b) {
        if (a.height != b.height) return a.height < b.height;
        if (a.point.is_infinity() != b.point.is_infinity()) return a.point.is_infinity();
        if (a.point.is_infinity()) return false;
        if (a.point.x() != b.point.x()) return a.point.x() < b.point.x();
        return a.point.y() < b.point.y();
    });
    return out;
}

}  // namespace twinec
