#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twinec/arith/integer.hpp"
#include "twinec/arith/rational.hpp"

namespace twinec {

/// A nonzero squarefree integer of either sign; a class of Q*/Q*^2.
class SignedSquarefreeDivisor {
public:
    /// Throws std::invalid_argument if value is zero or has a repeated prime factor.
    explicit SignedSquarefreeDivisor(Integer value);

    const Integer& value() const { return value_; }

    friend bool operator==(const SignedSquarefreeDivisor&, const SignedSquarefreeDivisor&) = default;

private:
    Integer value_;
};

/// Prime factorization by trial division, ascending primes with exponents.
/// |n| must be nonzero; the sign is ignored.
std::vector<std::pair<Integer, unsigned>> factor_trial(const Integer& n);

bool is_squarefree(const Integer& n);

/// All signed squarefree divisors of n, ordered by |d| then + before -.
/// Throws std::invalid_argument for n == 0.
std::vector<SignedSquarefreeDivisor> squarefree_divisors(const Integer& n);

/// The squarefree integer in the same class of Q*/Q*^2 as r (r != 0).
Integer squarefree_part(const Rational& r);

/// Class product in Q*/Q*^2 of two squarefree integers: ab / gcd(a,b)^2.
Integer squarefree_mul(const Integer& a, const Integer& b);

/// Deterministic Miller-Rabin for 64-bit inputs (values < 2 are not prime).
bool is_prime_u64(std::uint64_t n);

/// Primality of an Integer; throws std::out_of_range above 2^64.
bool is_prime(const Integer& n);

}  // namespace twinec
