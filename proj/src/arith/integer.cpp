#include "twinec/arith/integer.hpp"

#include <cmath>
#include <stdexcept>

namespace twinec {

std::optional<Integer> integer_sqrt(const Integer& n) {
    if (sgn(n) < 0) {
        throw std::domain_error("integer_sqrt: negative input");
    }
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

Integer isqrt_floor(const Integer& n) {
    if (sgn(n) < 0) {
        throw std::domain_error("isqrt_floor: negative input");
    }
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

bool is_perfect_square(const Integer& n) {
    return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

unsigned valuation(const Integer& n, unsigned long ell) {
    if (sgn(n) == 0) {
        throw std::domain_error("valuation of zero");
    }
    unsigned k = 0;
    Integer m = n;
    while (mpz_divisible_ui_p(m.get_mpz_t(), ell) != 0) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), ell);
        ++k;
    }
    return k;
}

std::string to_string(const Integer& n) { return n.get_str(10); }

Integer parse_integer(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("empty integer literal");
    }
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) {
        throw std::invalid_argument("bad integer literal: " + s);
    }
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') {
            throw std::invalid_argument("bad integer literal: " + s);
        }
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return Integer(s, 10);
}

std::int64_t to_int64(const Integer& n) {
    if (!n.fits_slong_p()) {
        throw std::out_of_range("integer does not fit in 64 bits: " + to_string(n));
    }
    return n.get_si();
}

std::int64_t isqrt_exact_i128(i128 n) {
    if (n < 0) {
        return -1;
    }
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<i128>(r) * r > n) {
        --r;
    }
    while (static_cast<i128>(r + 1) * (r + 1) <= n) {
        ++r;
    }
    return static_cast<i128>(r) * r == n ? r : -1;
}

}  // namespace twinec
