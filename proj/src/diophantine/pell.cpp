#include "twinec/diophantine/pell.hpp"

#include <stdexcept>

namespace twinec {

namespace {

PellSolution compose(const PellSolution& a, const PellSolution& unit) {
    return {a.d, a.sigma, a.x * unit.x + a.d * a.y * unit.y, a.x * unit.y + a.y * unit.x};
}

void check_solution(const PellSolution& s) {
    if (s.x * s.x - s.d * s.y * s.y != s.sigma) {
        throw std::logic_error("Pell solution fails its equation");
    }
}

}  // namespace

ContinuedFraction cf_sqrt(const Integer& d) {
    if (d < 2) {
        throw std::invalid_argument("cf_sqrt: d must be at least 2");
    }
    if (is_perfect_square(d)) {
        throw std::invalid_argument("cf_sqrt: " + to_string(d) + " is a perfect square");
    }
    ContinuedFraction cf{isqrt_floor(d), {}};
    // (sqrt(d) + m) / den with a = floor of it.
    Integer m = 0;
    Integer den = 1;
    Integer a = cf.a0;
    do {
        m = den * a - m;
        den = (d - m * m) / den;
        a = (cf.a0 + m) / den;
        cf.period.push_back(a);
    } while (a != 2 * cf.a0);
    return cf;
}

std::optional<PellSolution> pell_fundamental(const Integer& d, int sigma) {
    if (sigma != 1 && sigma != -1) {
        throw std::invalid_argument("sigma must be +1 or -1");
    }
    ContinuedFraction cf = cf_sqrt(d);
    const std::size_t L = cf.period.size();
    const bool odd = L % 2 == 1;
    if (sigma == -1 && !odd) {
        return std::nullopt;
    }
    const std::size_t target = (sigma == 1 && odd) ? 2 * L - 1 : L - 1;
    // Convergents h_k / k_k of [a0; period...].
    Integer h_prev = 1, h = cf.a0;
    Integer k_prev = 0, k = 1;
    for (std::size_t i = 1; i <= target; ++i) {
        const Integer& a = cf.period[(i - 1) % L];
        Integer h_next = a * h + h_prev;
        Integer k_next = a * k + k_prev;
        h_prev = std::move(h);
        k_prev = std::move(k);
        h = std::move(h_next);
        k = std::move(k_next);
    }
    PellSolution s{d, sigma, h, k};
    check_solution(s);
    return s;
}

std::vector<PellSolution> pell_enumerate(const Integer& d, int sigma, const Integer& y_bound) {
    if (y_bound < 1) {
        throw std::invalid_argument("pell_enumerate: y bound must be >= 1");
    }
    std::vector<PellSolution> out;
    auto start = pell_fundamental(d, sigma);
    if (!start) return out;
    const PellSolution unit = *pell_fundamental(d, 1);
    for (PellSolution s = *start; s.y <= y_bound; s = compose(s, unit)) {
        check_solution(s);
        out.push_back(s);
    }
    return out;
}

std::vector<SimPellSolution> solve_simultaneous(const TwinPrimePair& pair, int sigma, const Integer& y_bound) {
    auto first = pell_enumerate(pair.p(), sigma, y_bound);
    auto second = pell_enumerate(pair.q(), sigma, y_bound);
    std::vector<SimPellSolution> out;
    std::size_t i = 0, j = 0;
    while (i < first.size() && j < second.size()) {
        int c = cmp(first[i].y, second[j].y);
        if (c < 0) {
            ++i;
        } else if (c > 0) {
            ++j;
        } else {
            out.push_back({pair, sigma, first[i].x, first[i].y, second[j].x});
            ++i;
            ++j;
        }
    }
    return out;
}

RationalPoint simpell_to_point(const SimPellSolution& sol) {
    if (!sol.nontrivial()) {
        throw std::invalid_argument("simpell_to_point: trivial solution (y = 0)");
    }
    Curve c(sol.pair, sol.sigma);
    Integer y2 = sol.y * sol.y;
    RationalPoint P = RationalPoint::affine(Rational(Integer(1), y2), Rational(sol.x * sol.z, y2 * sol.y));
    if (!is_on_curve(c, P)) {
        throw std::invalid_argument("simpell_to_point: " + P.str() + " is not on " + c.equation() +
                                    "; input is not a solution");
    }
    return P;
}

std::optional<Integer> minus_one_obstruction(const Integer& prime) {
    if (Integer(prime % 4) == 3) return prime;
    return std::nullopt;
}

}  // namespace twinec
