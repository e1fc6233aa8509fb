#pragma once

// Continued fractions of quadratic surds, the Pell equations x^2 - d y^2 = +-1,
// and the simultaneous system x^2 - p y^2 = sigma, z^2 - q y^2 = sigma.

#include <optional>
#include <vector>

#include "twinec/curve/curve.hpp"

namespace twinec {

/// sqrt(d) = [a0; period, period, ...]; the period ends with 2 a0.
struct ContinuedFraction {
    Integer a0;
    std::vector<Integer> period;
};

/// Throws std::invalid_argument if d < 2 or d is a perfect square.
ContinuedFraction cf_sqrt(const Integer& d);

struct PellSolution {
    Integer d;
    int sigma = 1;
    Integer x;
    Integer y;

    friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

/**
 * Least positive solution of x^2 - d y^2 = sigma, read off the convergent
 * at index (period length - 1), or (2 * period length - 1) for sigma = +1
 * with an odd period. Absent for sigma = -1 when the period is even.
 */
std::optional<PellSolution> pell_fundamental(const Integer& d, int sigma);

/// All solutions with 1 <= y <= y_bound, ascending in y, obtained by
/// repeatedly composing with the fundamental sigma = +1 solution.
std::vector<PellSolution> pell_enumerate(const Integer& d, int sigma, const Integer& y_bound);

struct SimPellSolution {
    TwinPrimePair pair;
    int sigma = 1;
    Integer x;
    Integer y;
    Integer z;

    bool nontrivial() const { return sgn(y) != 0; }
    friend bool operator==(const SimPellSolution&, const SimPellSolution&) = default;
};

/// Positive solutions with y <= y_bound, intersecting the two ascending y-orbits.
std::vector<SimPellSolution> solve_simultaneous(const TwinPrimePair& pair, int sigma, const Integer& y_bound);

/// (x, y, z) -> (1/y^2, xz/y^3) on E_sigma. Throws std::invalid_argument for
/// y = 0 or when the image fails the curve equation.
RationalPoint simpell_to_point(const SimPellSolution& sol);

/// x^2 - d y^2 = -1 is impossible when -1 is a non-residue mod some prime
/// dividing d; reports that prime for d = p prime with p = 3 (mod 4).
std::optional<Integer> minus_one_obstruction(const Integer& prime);

}  // namespace twinec
