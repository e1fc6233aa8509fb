#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twinec/curve/curve.hpp"
#include "twinec/rank/local_image.hpp"

namespace twinec {

/// A class (d1, d2) of (Q*/Q*^2)^2 with d1 | pq and d2 | 2p squarefree.
struct DescentPair {
    Integer d1;
    Integer d2;

    friend bool operator==(const DescentPair&, const DescentPair&) = default;
};

DescentPair descent_pair_mul(const DescentPair& a, const DescentPair& b);

/// One element of the 2-Selmer group. image_member is set once a global
/// point with this image is known; witness holds it when it came from the
/// torsor search or a generator.
struct SelmerElement {
    DescentPair pair;
    bool image_member = false;
    std::optional<RationalPoint> witness;
};

struct DescentOptions {
    /// Naive-height bound for the point search that seeds generators.
    Integer height_bound{10000};
    /// Numerators and denominators of z1 = a/b in the torsor search.
    long torsor_bound = 1000;
};

struct DescentReport {
    Curve curve;
    std::vector<SelmerElement> surviving_pairs;
    int rank_upper = 0;
    std::vector<RationalPoint> generators_found;
    int rank_lower = 0;
    bool resolved = false;
    std::vector<LocalImage> local_images;
    DescentOptions options;
    std::size_t candidate_pairs = 0;
};

/**
 * Image of P under the descent map E(Q) -> (Q* mod squares)^2,
 * P -> (x - e1, x - e2), with the usual fix-ups at the 2-torsion points
 * and (1, 1) at infinity.
 */
DescentPair kummer_image(const Curve& c, const RationalPoint& P);

/**
 * Complete 2-descent over Q.
 *
 * Candidates are d1 | pq, d2 | 2p (signed, squarefree). A pair survives
 * when it lies in the local image at R, 2, p and q; at every other prime
 * both entries are units and the condition is automatic. The survivors form
 * the 2-Selmer group, of order 2^(rank_upper + 2). rank_lower comes from
 * the span of images of points found by the height search and by a bounded
 * search on each unexplained torsor.
 */
DescentReport two_descent(const Curve& c, const DescentOptions& options = {});

/// Representative of P + E(Q)[2] preferring x < 0, then small height, then y > 0.
RationalPoint canonical_modulo_torsion(const Curve& c, const RationalPoint& P);

struct KRankReport {
    TwinPrimePair pair;
    int sigma = 1;
    DescentReport rank_plus_Q;
    DescentReport rank_minus_Q;
    /// rank E(K) lies in [rank_lower, rank_upper].
    int rank_lower = 0;
    int rank_upper = 0;
    bool resolved() const { return rank_lower == rank_upper; }
};

/// rank E(K) = rank E_+(Q) + rank E_-(Q), via E_sigma twisted by -1 = E_{-sigma}.
KRankReport rank_over_K(const TwinPrimePair& pair, int sigma, const DescentOptions& options = {});

}  // namespace twinec
