#include "twinec/diophantine/concordant.hpp"

#include <numeric>
#include <stdexcept>

#include "twinec/arith/square_sieve.hpp"
#include "twinec/rank/census.hpp"

namespace twinec {

namespace {

Integer factor_of(ConcordantSystem s) { return s == ConcordantSystem::I ? Integer(1) : Integer(2); }

// Exact root of n / k when k divides n and the quotient is a square.
std::optional<std::int64_t> root_of_multiple(i128 n, int k, const SquareSieve& sieve) {
    if (n < 0 || n % k != 0) return std::nullopt;
    n /= k;
    if (!sieve.maybe_square(n)) return std::nullopt;
    std::int64_t r = isqrt_exact_i128(n);
    if (r < 0) return std::nullopt;
    return r;
}

}  // namespace

std::string to_string(ConcordantSystem s) { return s == ConcordantSystem::I ? "I" : "II"; }

bool satisfies_system(const ConcordantSolution& sol, const TwinPrimePair& pair) {
    Integer k = factor_of(sol.system);
    Integer X2 = sol.X * sol.X;
    Integer Y2 = sol.Y * sol.Y;
    return X2 - pair.p() * Y2 == k * sol.S * sol.S && X2 - pair.q() * Y2 == -k * sol.T * sol.T;
}

bool is_primary(const ConcordantSolution& sol) {
    return sgn(sol.X) != 0 && sgn(sol.Y) != 0 && gcd(sol.X, sol.Y) == 1;
}

ConcordantSolution canonical_positive(ConcordantSolution sol) {
    sol.X = abs(sol.X);
    sol.Y = abs(sol.Y);
    sol.S = abs(sol.S);
    sol.T = abs(sol.T);
    return sol;
}

std::vector<ConcordantSolution> search_concordant(const TwinPrimePair& pair, ConcordantSystem system,
                                                  const Integer& xy_bound) {
    if (xy_bound < 1) {
        throw std::invalid_argument("search_concordant: bound must be >= 1");
    }
    if (xy_bound > 100'000'000 || pair.q() > 1'000'000) {
        throw std::invalid_argument("search_concordant: bound or prime too large for the native kernel");
    }
    const std::int64_t bound = xy_bound.get_si();
    const std::int64_t p = pair.p().get_si();
    const std::int64_t q = pair.q().get_si();
    const int k = system == ConcordantSystem::I ? 1 : 2;
    const SquareSieve& sieve = SquareSieve::instance();

    std::vector<ConcordantSolution> out;
    for (std::int64_t Y = 1; Y <= bound; ++Y) {
        const i128 Y2 = static_cast<i128>(Y) * Y;
        // Both equations force p Y^2 <= X^2 <= q Y^2.
        const std::int64_t lo = isqrt_floor(Integer(Integer(p) * Y * Y)).get_si();
        const std::int64_t hi = std::min<std::int64_t>(bound, isqrt_floor(Integer(q) * Y * Y).get_si());
        for (std::int64_t X = std::max<std::int64_t>(lo, 1); X <= hi; ++X) {
            const i128 X2 = static_cast<i128>(X) * X;
            const i128 A = X2 - p * Y2;
            // Squares are 0, 1, 4 mod 8, so k S^2 is too (k = 1) or 0, 2 mod 8 (k = 2).
            const auto a8 = static_cast<int>(A % 8);
            if (k == 1 ? (a8 != 0 && a8 != 1 && a8 != 4) : (a8 != 0 && a8 != 2)) continue;
            auto S = root_of_multiple(A, k, sieve);
            if (!S) continue;
            auto T = root_of_multiple(q * Y2 - X2, k, sieve);
            if (!T) continue;
            if (std::gcd(X, Y) != 1) continue;
            ConcordantSolution sol{system, Integer(X), Integer(Y), Integer(*S), Integer(*T)};
            if (!satisfies_system(sol, pair)) {
                throw std::logic_error("search_concordant produced an invalid solution");
            }
            out.push_back(std::move(sol));
        }
    }
    return out;
}

RationalPoint solution_to_point(const ConcordantSolution& sol, const TwinPrimePair& pair) {
    if (!is_primary(sol) || !satisfies_system(sol, pair)) {
        throw std::invalid_argument("solution_to_point: not a primary solution of system " +
                                    to_string(sol.system));
    }
    Integer Y2 = sol.Y * sol.Y;
    Rational x(-(sol.X * sol.X), Y2);
    Rational y(factor_of(sol.system) * sol.X * sol.S * sol.T, Y2 * sol.Y);
    RationalPoint P = RationalPoint::affine(x, y);
    Curve plus(pair, 1);
    if (!is_on_curve(plus, P) || !in_negative_region(P)) {
        throw std::logic_error("solution_to_point produced " + P.str() + " outside E_+(Q)^-");
    }
    return P;
}

std::optional<ConcordantSolution> point_to_solution(const RationalPoint& P, const TwinPrimePair& pair) {
    Curve plus(pair, 1);
    if (!is_on_curve(plus, P)) {
        throw std::invalid_argument("point_to_solution: " + P.str() + " is not on " + plus.equation());
    }
    if (!in_negative_region(P)) {
        throw std::invalid_argument("point_to_solution: " + P.str() + " is not in E(Q)^-");
    }
    if (P.y().is_zero()) {
        throw std::invalid_argument("point_to_solution: " + P.str() + " is a torsion point");
    }
    if (!is_double_in_K(plus, P)) {
        throw std::invalid_argument("point_to_solution: " + P.str() + " is not in 2E(K)");
    }
    auto sol = decompose_negative_point(P, pair);
    if (!sol && !is_square_rational(-P.x())) {
        throw std::logic_error("point_to_solution: -x is not a rational square");
    }
    return sol;
}

std::optional<ConcordantSolution> decompose_negative_point(const RationalPoint& P, const TwinPrimePair& pair) {
    if (P.is_infinity() || !in_negative_region(P) || P.y().is_zero() || !is_on_curve(Curve(pair, 1), P)) {
        throw std::invalid_argument("decompose_negative_point: " + P.str() + " is not a nontorsion point of E(Q)^-");
    }
    auto ratio = is_square_rational(-P.x());
    if (!ratio) return std::nullopt;
    const Integer& X = ratio->num();
    const Integer& Y = ratio->den();
    Integer Y2 = Y * Y;
    Integer A = X * X - pair.p() * Y2;
    Integer B = pair.q() * Y2 - X * X;
    for (ConcordantSystem system : {ConcordantSystem::I, ConcordantSystem::II}) {
        Integer k = factor_of(system);
        if (!mpz_divisible_p(A.get_mpz_t(), k.get_mpz_t()) || !mpz_divisible_p(B.get_mpz_t(), k.get_mpz_t())) {
            continue;
        }
        auto S = sgn(A) >= 0 ? integer_sqrt(Integer(A / k)) : std::nullopt;
        auto T = sgn(B) >= 0 ? integer_sqrt(Integer(B / k)) : std::nullopt;
        if (S && T) {
            ConcordantSolution sol{system, X, Y, *S, *T};
            if (!satisfies_system(sol, pair) || !is_primary(sol)) {
                throw std::logic_error("point_to_solution produced an invalid solution");
            }
            return sol;
        }
    }
    return std::nullopt;
}

}  // namespace twinec
