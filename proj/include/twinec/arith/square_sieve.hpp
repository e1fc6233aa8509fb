#pragma once

#include <array>
#include <cstdint>

#include "twinec/arith/integer.hpp"

namespace twinec {

/// Quadratic-residue tables mod 64, 63, 65 and 11: a cheap necessary
/// condition for a native integer to be a perfect square.
class SquareSieve {
public:
    static const SquareSieve& instance() {
        static const SquareSieve sieve;
        return sieve;
    }

    bool maybe_square(i128 n) const {
        if (n < 0) return false;
        return mod64_[static_cast<std::size_t>(n % 64)] && mod63_[static_cast<std::size_t>(n % 63)] &&
               mod65_[static_cast<std::size_t>(n % 65)] && mod11_[static_cast<std::size_t>(n % 11)];
    }

private:
    SquareSieve() {
        for (std::size_t r = 0; r < 64; ++r) mod64_[r * r % 64] = true;
        for (std::size_t r = 0; r < 63; ++r) mod63_[r * r % 63] = true;
        for (std::size_t r = 0; r < 65; ++r) mod65_[r * r % 65] = true;
        for (std::size_t r = 0; r < 11; ++r) mod11_[r * r % 11] = true;
    }

    std::array<bool, 64> mod64_{};
    std::array<bool, 63> mod63_{};
    std::array<bool, 65> mod65_{};
    std::array<bool, 11> mod11_{};
};

}  // namespace twinec
