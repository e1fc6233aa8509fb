#include "twinec/rank/torsion.hpp"

#include <stdexcept>

#include "twinec/arith/squarefree.hpp"

namespace twinec {

namespace {

// Reduction is injective on torsion at good primes ell >= 3 (unramified, so
// e = 1 < ell - 1). Collect at least this many before trusting the gcd.
constexpr std::size_t kMinReductionPrimes = 3;
constexpr std::size_t kMaxReductionPrimes = 60;

Integer odd_part(Integer n) {
    while (n != 0 && mpz_even_p(n.get_mpz_t()) != 0) n /= 2;
    return n;
}

bool good_prime(const Curve& c, long ell) {
    Integer e(ell);
    return ell > 2 && is_prime_u64(static_cast<std::uint64_t>(ell)) && e != c.pair().p() &&
           e != c.pair().q();
}

// Halvability of (e_i, 0): e_i - e_j and e_i - e_k both squares in the field.
template <class IsSquare>
std::vector<HalvingCheck> halving_checks(const Curve& c, IsSquare is_square) {
    const Integer roots[3] = {c.e1(), c.e2(), c.e3()};
    auto torsion = two_torsion(c);
    std::vector<HalvingCheck> out;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        int k = (i + 2) % 3;
        bool halvable = is_square(Rational(roots[i] - roots[j])) && is_square(Rational(roots[i] - roots[k]));
        out.push_back({torsion[i], halvable});
    }
    return out;
}

TorsionReport assemble(const Curve& c, std::string label, std::vector<HalvingCheck> halving,
                       std::vector<ReductionCount> reductions) {
    TorsionReport report{c, std::move(label), {}, {2, 2}, std::move(reductions), Integer(0),
                         std::move(halving), false};
    report.points.push_back(RationalPoint::infinity());
    for (const auto& t : two_torsion(c)) report.points.push_back(t);
    for (const auto& r : report.reductions) {
        report.odd_part_bound = gcd(report.odd_part_bound, odd_part(r.count));
    }
    bool no_order_four = true;
    for (const auto& h : report.halving) no_order_four = no_order_four && !h.halvable;
    report.complete = no_order_four && report.odd_part_bound == 1;
    return report;
}

}  // namespace

Integer count_points_mod(const Curve& c, long ell) {
    if (!good_prime(c, ell)) {
        throw std::invalid_argument("count_points_mod: bad or non-prime modulus " + std::to_string(ell));
    }
    std::vector<int> chi(static_cast<std::size_t>(ell), -1);
    chi[0] = 0;
    for (long t = 1; t < ell; ++t) chi[static_cast<std::size_t>(t * t % ell)] = 1;
    long a2 = Integer(c.a2() % ell).get_si();
    long a4 = Integer(c.a4() % ell).get_si();
    long count = 1;  // point at infinity
    for (long x = 0; x < ell; ++x) {
        long v = ((x * x % ell + a2 * x) % ell * x % ell + a4 * x % ell) % ell;
        if (v < 0) v += ell;
        count += 1 + chi[static_cast<std::size_t>(v)];
    }
    return Integer(count);
}

Integer count_points_mod_square(const Curve& c, long ell) {
    Integer e(ell);
    Integer trace = e + 1 - count_points_mod(c, ell);
    return e * e + 1 - (trace * trace - 2 * e);
}

TorsionReport torsion_over_Q(const Curve& c) {
    auto halving = halving_checks(c, [](const Rational& r) { return is_square_rational(r).has_value(); });
    std::vector<ReductionCount> reductions;
    Integer g(0);
    for (long ell = 3; reductions.size() < kMaxReductionPrimes; ell += 2) {
        if (!good_prime(c, ell)) continue;
        reductions.push_back({ell, 1, count_points_mod(c, ell)});
        g = gcd(g, odd_part(reductions.back().count));
        if (reductions.size() >= kMinReductionPrimes && g == 1) break;
    }
    return assemble(c, "Q", std::move(halving), std::move(reductions));
}

TorsionReport torsion_over_K(const Curve& c) {
    auto halving = halving_checks(c, [](const Rational& r) { return is_square_in_gauss(r); });
    std::vector<ReductionCount> reductions;
    Integer g(0);
    for (long ell = 3; reductions.size() < kMaxReductionPrimes; ell += 2) {
        if (!good_prime(c, ell)) continue;
        if (ell % 4 == 1) {
            reductions.push_back({ell, 1, count_points_mod(c, ell)});
        } else {
            reductions.push_back({ell, 2, count_points_mod_square(c, ell)});
        }
        g = gcd(g, odd_part(reductions.back().count));
        if (reductions.size() >= kMinReductionPrimes && g == 1) break;
    }
    return assemble(c, "K", std::move(halving), std::move(reductions));
}

}  // namespace twinec
