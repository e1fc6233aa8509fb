#pragma once

// The twin-prime concordant systems
//   (I)  X^2 - p Y^2 = S^2,   X^2 - q Y^2 = -T^2
//   (II) X^2 - p Y^2 = 2 S^2, X^2 - q Y^2 = -2 T^2
// and their correspondence with points of E_+ in the region x < 0.

#include <optional>
#include <string>
#include <vector>

#include "twinec/curve/curve.hpp"

namespace twinec {

enum class ConcordantSystem { I, II };

std::string to_string(ConcordantSystem s);

struct ConcordantSolution {
    ConcordantSystem system = ConcordantSystem::I;
    Integer X, Y, S, T;

    friend bool operator==(const ConcordantSolution&, const ConcordantSolution&) = default;
};

bool satisfies_system(const ConcordantSolution& sol, const TwinPrimePair& pair);

/// gcd(X, Y) = 1 and X Y != 0.
bool is_primary(const ConcordantSolution& sol);

/// Same solution with every entry replaced by its absolute value.
ConcordantSolution canonical_positive(ConcordantSolution sol);

/// Primary solutions with 1 <= X, Y <= xy_bound, S, T >= 0, ascending in (Y, X).
std::vector<ConcordantSolution> search_concordant(const TwinPrimePair& pair, ConcordantSystem system,
                                                  const Integer& xy_bound);

/// (I) -> (-X^2/Y^2, XST/Y^3), (II) -> (-X^2/Y^2, 2XST/Y^3) on E_+.
/// Throws std::invalid_argument unless sol is a primary solution of its system.
RationalPoint solution_to_point(const ConcordantSolution& sol, const TwinPrimePair& pair);

/**
 * Inverse direction for points of E_+(Q)^- that are doubles over Q(i).
 *
 * Writes -x = X^2/Y^2 and tests A = X^2 - p Y^2, B = q Y^2 - X^2: squares
 * give a system (I) solution, twice squares a system (II) solution. Absent
 * when neither pattern holds (reported as unclassified by callers).
 * Throws std::invalid_argument if P is off E_+, has x >= 0, is 2-torsion,
 * or is not a double over Q(i).
 */
std::optional<ConcordantSolution> point_to_solution(const RationalPoint& P, const TwinPrimePair& pair);

/// The same decomposition without the halving precondition; system (II)
/// points are never doubles over Q(i) since 2 is not a square there.
/// Absent when -x is not a rational square or neither pattern holds.
std::optional<ConcordantSolution> decompose_negative_point(const RationalPoint& P, const TwinPrimePair& pair);

}  // namespace twinec
