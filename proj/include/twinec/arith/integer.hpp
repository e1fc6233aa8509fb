#pragma once

// Arbitrary-precision integers and the small integer utilities the rest of
// the library leans on (square roots, gcd, valuations, decimal I/O).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace twinec {

using Integer = mpz_class;

/// Exact square root of a perfect square. Throws std::domain_error for n < 0.
std::optional<Integer> integer_sqrt(const Integer& n);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt_floor(const Integer& n);

bool is_perfect_square(const Integer& n);

Integer gcd(const Integer& a, const Integer& b);

/// Largest k with ell^k | n. n must be nonzero.
unsigned valuation(const Integer& n, unsigned long ell);

std::string to_string(const Integer& n);

/// Parses an optionally signed decimal integer; throws std::invalid_argument.
Integer parse_integer(std::string_view text);

/// Narrowing with a range check; throws std::out_of_range.
std::int64_t to_int64(const Integer& n);

// Overflow-free helpers for the native search kernels.
using i128 = __int128;

/// Exact square root for 0 <= n < 2^126, or -1 when n is not a square.
std::int64_t isqrt_exact_i128(i128 n);

}  // namespace twinec
