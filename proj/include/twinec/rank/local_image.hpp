#pragma once

// Local images of the 2-descent map P -> (x - e1, x - e2) in
// (Q_v* / Q_v*^2)^2, for v the real place or a prime.
//
// A square class in Q_v is encoded as a small bit vector:
//   real place: bit 0 = negative;
//   odd ell:    bit 0 = odd valuation, bit 1 = unit part is a non-residue;
//   ell = 2:    bit 0 = odd valuation, bit 1 = unit = 3 (mod 4),
//               bit 2 = unit = 5 or 7 (mod 8).
// Products of classes are XORs of codes; a pair packs as c1 | c2 << width.

#include <bitset>
#include <cstdint>
#include <vector>

#include "twinec/curve/curve.hpp"

namespace twinec {

/// 0 denotes the real place.
using Place = long;

unsigned class_width(Place v);

/// Square class of a nonzero rational in Q_v*/Q_v*^2.
std::uint32_t local_square_class(const Rational& a, Place v);

/// True iff a is a nonzero square in Q_v (Hensel: unit part a residue mod ell, or 1 mod 8 at 2).
bool is_local_square(const Rational& a, Place v);

struct LocalImage {
    Place place = 0;
    unsigned width = 1;
    /// |E(Q_v)/2E(Q_v)|: 2 at the real place, 4 at odd ell, 8 at ell = 2.
    std::size_t expected_size = 0;
    std::bitset<64> members;
    std::vector<std::uint32_t> basis;
    std::size_t samples_tried = 0;

    std::size_t size() const { return members.count(); }
    bool contains(std::uint32_t code) const { return members.test(code); }
    bool complete() const { return size() == expected_size; }
};

std::uint32_t local_pair_code(const Rational& a, const Rational& b, Place v);

/**
 * Computes the image of E(Q_v) under the local descent map.
 *
 * The image is a group of known order. It is seeded with the 2-torsion
 * images and grown from exact rational sample points x with f(x) a square in
 * Q_v, until it reaches that order, which certifies completeness. Throws
 * std::runtime_error if the sampling budget runs out first.
 */
LocalImage local_kummer_image(const Curve& c, Place v);

/// Places where a pair (d1 | pq, d2 | 2p) can fail to be locally trivial: R, 2, p, q.
std::vector<Place> bad_places(const Curve& c);

}  // namespace twinec
