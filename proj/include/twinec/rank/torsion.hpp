#pragma once

#include <string>
#include <vector>

#include "twinec/curve/curve.hpp"

namespace twinec {

/// #E(F_ell) or #E(F_{ell^2}) for a prime ell of good reduction.
struct ReductionCount {
    long ell = 0;
    int residue_degree = 1;
    Integer count;
};

/// Whether a 2-torsion point is divisible by 2 over the field in question.
struct HalvingCheck {
    RationalPoint point;
    bool halvable = false;
};

struct TorsionReport {
    Curve curve;
    std::string field_label;  // "Q" or "K"
    std::vector<RationalPoint> points;
    std::vector<int> structure;  // cyclic factors, [2, 2] for this family
    std::vector<ReductionCount> reductions;
    /// gcd of the odd parts of the reduction counts; 1 rules out odd torsion.
    Integer odd_part_bound;
    std::vector<HalvingCheck> halving;
    /// True when the reduction and halving checks together prove the list is all of the torsion.
    bool complete = false;
};

/// #E(F_ell) by Legendre-symbol summation. ell must be an odd prime not dividing pq.
Integer count_points_mod(const Curve& c, long ell);

/// #E(F_{ell^2}) = ell^2 + 1 - (a^2 - 2 ell) with a = ell + 1 - #E(F_ell).
Integer count_points_mod_square(const Curve& c, long ell);

TorsionReport torsion_over_Q(const Curve& c);

/// Torsion over Q(i): split primes ell = 1 (mod 4) reduce to F_ell, inert ones to F_{ell^2}.
TorsionReport torsion_over_K(const Curve& c);

}  // namespace twinec
