#pragma once

#include <vector>

#include "twinec/curve/curve.hpp"

namespace twinec {

enum class SearchRegion { All, NegativeX };

struct SearchHit {
    RationalPoint point;
    Integer height;  // naive height; 0 for the point at infinity
    bool torsion = false;
};

/**
 * All rational points of naive height <= height_bound, one per +-y pair
 * (y >= 0 kept), sorted by height, then x, then y.
 *
 * Enumerates x = m / e^2 with gcd(m, e) = 1 over the real intervals where
 * the cubic is nonnegative. Residue sieves reject most non-squares before
 * the exact square root. With region All the point at infinity comes first.
 * Cost grows like height_bound^{3/2}; p must be below 10^6 and the bound
 * below 10^9.
 */
std::vector<SearchHit> point_search(const Curve& c, const Integer& height_bound,
                                    SearchRegion region = SearchRegion::All);

}  // namespace twinec
