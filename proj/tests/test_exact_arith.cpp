#include <random>
#include <set>

#include "doctest.h"
#include "twinec/arith/gaussian.hpp"
#include "twinec/arith/integer.hpp"
#include "twinec/arith/rational.hpp"
#include "twinec/arith/squarefree.hpp"

using namespace twinec;

namespace {

// Brute-force integer square root, independent of GMP's.
std::optional<long> brute_sqrt(long n) {
    for (long s = 0; s * s <= n; ++s) {
        if (s * s == n) return s;
    }
    return std::nullopt;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-5000, 5000);
    std::uniform_int_distribution<long> den(1, 5000);
    return Rational(Integer(num(rng)), Integer(den(rng)));
}

}  // namespace

TEST_CASE("rational_normalize") {
    CHECK(rational_normalize(2, 4) == Rational(1, 2));
    CHECK(rational_normalize(2, 4).num() == 1);
    CHECK(rational_normalize(2, 4).den() == 2);
    Rational r = rational_normalize(-4, -2);
    CHECK(r.num() == 2);
    CHECK(r.den() == 1);
    Rational z = rational_normalize(0, 5);
    CHECK(z.num() == 0);
    CHECK(z.den() == 1);
    CHECK(rational_normalize(3, -6).str() == "-1/2");
    CHECK_THROWS_AS(rational_normalize(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(a > b);
    CHECK(-a < b);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
}

TEST_CASE("is_square_rational") {
    CHECK(is_square_rational(Rational(4, 9)) == Rational(2, 3));
    CHECK_FALSE(is_square_rational(Rational(2)).has_value());
    CHECK_FALSE(is_square_rational(Rational(-4)).has_value());
    CHECK(is_square_rational(Rational(0)) == Rational(0));

    // 3969/4096: roots of numerator and denominator from the brute oracle.
    auto n = brute_sqrt(3969);
    auto d = brute_sqrt(4096);
    REQUIRE(n);
    REQUIRE(d);
    CHECK(is_square_rational(Rational(3969, 4096)) == Rational(Integer(*n), Integer(*d)));
    CHECK(*n == 63);
    CHECK(*d == 64);
}

TEST_CASE("is_square_in_gauss") {
    CHECK(is_square_in_gauss(Rational(-1)));
    CHECK(is_square_in_gauss(Rational(4)));
    CHECK(is_square_in_gauss(Rational(-9, 4)));
    CHECK_FALSE(is_square_in_gauss(Rational(-2)));
    CHECK_FALSE(is_square_in_gauss(Rational(2)));
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
}

TEST_CASE("is_square_in_gauss: -2 has no root among small Gaussian rationals") {
    // Brute oracle over (a + b i)^2 = (a^2 - b^2) + 2ab i with small a, b.
    std::vector<Rational> grid;
    for (long n = -12; n <= 12; ++n) {
        for (long d = 1; d <= 8; ++d) grid.emplace_back(Integer(n), Integer(d));
    }
    for (const auto& a : grid) {
        for (const auto& b : grid) {
            GaussianRational z(a, b);
            CHECK(z * z != GaussianRational(-2));
        }
    }
}

TEST_CASE("integer_sqrt") {
    CHECK(integer_sqrt(81) == Integer(9));
    CHECK_FALSE(integer_sqrt(80).has_value());
    auto oracle = brute_sqrt(421201);
    REQUIRE(oracle);
    CHECK(*oracle == 649);
    CHECK(integer_sqrt(421201) == Integer(649));
    CHECK_THROWS_AS(integer_sqrt(-1), std::domain_error);
    CHECK(isqrt_exact_i128(static_cast<i128>(3037000499LL) * 3037000499LL) == 3037000499LL);
    CHECK(isqrt_exact_i128(static_cast<i128>(3037000499LL) * 3037000499LL + 1) == -1);
}

TEST_CASE("squarefree_divisors") {
    auto values = [](const Integer& n) {
        std::vector<long> out;
        for (const auto& d : squarefree_divisors(n)) out.push_back(d.value().get_si());
        return out;
    };
    CHECK(values(15) == std::vector<long>{1, -1, 3, -3, 5, -5, 15, -15});
    CHECK(values(6) == std::vector<long>{1, -1, 2, -2, 3, -3, 6, -6});
    CHECK(values(1) == std::vector<long>{1, -1});
    CHECK(values(-12) == std::vector<long>{1, -1, 2, -2, 3, -3, 6, -6});
    CHECK_THROWS_AS(squarefree_divisors(0), std::invalid_argument);
    CHECK_THROWS_AS(SignedSquarefreeDivisor(Integer(12)), std::invalid_argument);
}

TEST_CASE("squarefree classes") {
    CHECK(squarefree_part(Rational(-4)) == -1);
    CHECK(squarefree_part(Rational(45, 8)) == 10);
    CHECK(squarefree_mul(6, -10) == -15);
}

TEST_CASE("primality") {
    for (unsigned long n = 0; n < 200; ++n) {
        bool brute = n >= 2;
        for (unsigned long d = 2; d * d <= n; ++d) {
            if (n % d == 0) brute = false;
        }
        CHECK(is_prime_u64(n) == brute);
    }
    CHECK(is_prime_u64(18446744073709551557ULL));  // largest 64-bit prime
    CHECK_FALSE(is_prime_u64(3215031751ULL));      // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("property: square roots of random squares") {
    std::mt19937_64 rng(20261016);
    for (int i = 0; i < 1000; ++i) {
        Rational r = random_rational(rng);
        auto root = is_square_rational(r * r);
        REQUIRE(root.has_value());
        CHECK(*root == abs(r));
    }
}

TEST_CASE("property: Gaussian squareness of rationals") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        Rational r = random_rational(rng);
        // Mix in genuine squares and negated squares half the time.
        if (i % 4 == 1) r = r * r;
        if (i % 4 == 2) r = -(r * r);
        bool expected = is_square_rational(r).has_value() || is_square_rational(-r).has_value();
        CHECK(is_square_in_gauss(r) == expected);
        if (auto s = is_square_rational(-r)) {
            // The witness for -s^2 is i s.
            GaussianRational z(Rational(0), *s);
            CHECK(z * z == GaussianRational(r));
        }
    }
}

TEST_CASE("property: squarefree divisor lists") {
    for (long n : {1L, 2L, 15L, 30L, 35L, 143L, 2 * 197L, 197L * 199L, 360L}) {
        auto divs = squarefree_divisors(n);
        std::set<std::string> seen;
        for (const auto& d : divs) seen.insert(to_string(d.value()));
        for (const auto& d : divs) {
            CHECK(n % d.value().get_si() == 0);
            CHECK(is_squarefree(d.value()));
            CHECK(seen.count(to_string(Integer(-d.value()))) == 1);
        }
    }
}

TEST_CASE("gaussian field axioms on samples") {
    GaussianRational a(Rational(1, 2), Rational(-3)), b(Rational(2), Rational(5, 7));
    CHECK((a * b) / b == a);
    CHECK(a * (b + a) == a * b + a * a);
    CHECK_THROWS_AS(a / GaussianRational(), std::domain_error);
    CHECK(a.str() == "1/2-3i");
}
