#include "twinec/arith/squarefree.hpp"

#include <algorithm>
#include <stdexcept>

namespace twinec {

SignedSquarefreeDivisor::SignedSquarefreeDivisor(Integer value) : value_(std::move(value)) {
    if (sgn(value_) == 0 || !is_squarefree(value_)) {
        throw std::invalid_argument("not a nonzero squarefree integer: " + to_string(value_));
    }
}

std::vector<std::pair<Integer, unsigned>> factor_trial(const Integer& n) {
    if (sgn(n) == 0) {
        throw std::invalid_argument("factor_trial: zero");
    }
    std::vector<std::pair<Integer, unsigned>> out;
    Integer m = abs(n);
    for (Integer d = 2; d * d <= m; d += (d == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t()) != 0) {
            m /= d;
            ++e;
        }
        if (e > 0) {
            out.emplace_back(d, e);
        }
    }
    if (m > 1) {
        out.emplace_back(m, 1);
    }
    return out;
}

bool is_squarefree(const Integer& n) {
    for (const auto& [prime, e] : factor_trial(n)) {
        if (e > 1) {
            return false;
        }
    }
    return true;
}

std::vector<SignedSquarefreeDivisor> squarefree_divisors(const Integer& n) {
    if (sgn(n) == 0) {
        throw std::invalid_argument("squarefree_divisors: zero");
    }
    std::vector<Integer> positive{Integer(1)};
    for (const auto& [prime, e] : factor_trial(n)) {
        std::size_t k = positive.size();
        for (std::size_t i = 0; i < k; ++i) {
            positive.push_back(positive[i] * prime);
        }
    }
    std::sort(positive.begin(), positive.end());
    std::vector<SignedSquarefreeDivisor> out;
    out.reserve(2 * positive.size());
    for (const auto& d : positive) {
        out.emplace_back(d);
        out.emplace_back(-d);
    }
    return out;
}

Integer squarefree_part(const Rational& r) {
    if (r.is_zero()) {
        throw std::invalid_argument("squarefree_part: zero");
    }
    // num/den and num*den differ by the square den^2.
    Integer n = r.num() * r.den();
    Integer out = sgn(n) < 0 ? Integer(-1) : Integer(1);
    for (const auto& [prime, e] : factor_trial(n)) {
        if (e % 2 == 1) {
            out *= prime;
        }
    }
    return out;
}

Integer squarefree_mul(const Integer& a, const Integer& b) {
    Integer g = gcd(a, b);
    return (a / g) * (b / g);
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    // These twelve witnesses are deterministic for every n < 3.3e24.
    constexpr u64 kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 w : kWitnesses) {
        if (n % w == 0) return n == w;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (u64 w : kWitnesses) {
        u64 x = pow_mod(w, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const Integer& n) {
    if (sgn(n) <= 0) return false;
    if (!n.fits_ulong_p()) {
        throw std::out_of_range("primality test limited to 64-bit inputs");
    }
    return is_prime_u64(n.get_ui());
}

}  // namespace twinec
