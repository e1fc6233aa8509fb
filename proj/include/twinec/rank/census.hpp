#pragma once

#include <vector>

#include "twinec/curve/curve.hpp"

namespace twinec {

/**
 * Whether P lies in 2E(K), K = Q(i).
 *
 * With all 2-torsion rational, P = (x, y) is a double over K iff x - e_i is
 * a square in K for every root e_i; for P = (e_i, 0) the i-th factor is
 * replaced by (e_i - e_j)(e_i - e_k), which amounts to e_i - e_j and e_i - e_k
 * both being squares. The point at infinity counts as a double.
 * Throws std::invalid_argument if P is off the curve.
 */
bool is_double_in_K(const Curve& c, const RationalPoint& P);

struct CensusReport {
    Curve curve;
    long multiple_bound = 0;
    /// Accepted points, one per +-y pair (y > 0 kept), sorted by height then x.
    std::vector<RationalPoint> census_points;
    std::size_t count = 0;
    /// Some single generator alone already yields >= 3 census points.
    bool unbounded_hint = false;
    std::size_t enumerated = 0;
};

/// Scans T + sum k_i G_i over torsion T and |k_i| <= multiple_bound for points
/// of E(Q)^- that are doubles over K.
CensusReport n2k_census(const Curve& c, const std::vector<RationalPoint>& generators, long multiple_bound);

}  // namespace twinec
