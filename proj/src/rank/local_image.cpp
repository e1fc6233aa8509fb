#include "twinec/rank/local_image.hpp"

#include <stdexcept>
#include <string>

namespace twinec {

namespace {

struct Split {
    long valuation = 0;
    Integer unit;  // numerator * denominator with ell removed, sign kept
};

Split split_at(const Rational& a, unsigned long ell) {
    Integer n = a.num();
    Integer d = a.den();
    long v = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), ell) != 0) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), ell);
        ++v;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), ell) != 0) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), ell);
        --v;
    }
    // n/d and n*d differ by the square d^2.
    return {v, n * d};
}

std::uint32_t pair_torsion_code(const Integer& a, const Integer& b, Place v) {
    return local_pair_code(Rational(a), Rational(b), v);
}

class Span {
public:
    explicit Span(LocalImage& image) : image_(image) { image_.members.set(0); }

    void add(std::uint32_t code) {
        if (image_.members.test(code)) return;
        std::bitset<64> next = image_.members;
        for (std::uint32_t m = 0; m < 64; ++m) {
            if (image_.members.test(m)) next.set(m ^ code);
        }
        image_.members = next;
        image_.basis.push_back(code);
    }

private:
    LocalImage& image_;
};

}  // namespace

unsigned class_width(Place v) {
    if (v == 0) return 1;
    return v == 2 ? 3 : 2;
}

std::uint32_t local_square_class(const Rational& a, Place v) {
    if (a.is_zero()) {
        throw std::invalid_argument("square class of zero");
    }
    if (v == 0) {
        return a.sign() < 0 ? 1U : 0U;
    }
    auto ell = static_cast<unsigned long>(v);
    Split s = split_at(a, ell);
    std::uint32_t code = (s.valuation % 2 != 0) ? 1U : 0U;
    if (ell == 2) {
        unsigned long u = mpz_fdiv_ui(s.unit.get_mpz_t(), 8);
        if (u % 4 == 3) code |= 2U;
        if (u == 5 || u == 7) code |= 4U;
    } else {
        Integer e(v);
        if (mpz_legendre(s.unit.get_mpz_t(), e.get_mpz_t()) < 0) code |= 2U;
    }
    return code;
}

bool is_local_square(const Rational& a, Place v) {
    return !a.is_zero() && local_square_class(a, v) == 0;
}

std::uint32_t local_pair_code(const Rational& a, const Rational& b, Place v) {
    return local_square_class(a, v) | (local_square_class(b, v) << class_width(v));
}

std::vector<Place> bad_places(const Curve& c) {
    return {0, 2, to_int64(c.pair().p()), to_int64(c.pair().q())};
}

LocalImage local_kummer_image(const Curve& c, Place v) {
    LocalImage image;
    image.place = v;
    image.width = class_width(v);
    image.expected_size = v == 0 ? 2 : (v == 2 ? 8 : 4);
    Span span(image);

    // 2-torsion: (e1,0) -> ((e1-e2)(e1-e3), e1-e2), (e2,0) -> (e2-e1, (e2-e1)(e2-e3)),
    // (e3,0) -> (e3-e1, e3-e2).
    const Integer& e1 = c.e1();
    const Integer& e2 = c.e2();
    const Integer& e3 = c.e3();
    span.add(pair_torsion_code((e1 - e2) * (e1 - e3), e1 - e2, v));
    span.add(pair_torsion_code(e2 - e1, (e2 - e1) * (e2 - e3), v));
    span.add(pair_torsion_code(e3 - e1, e3 - e2, v));

    // Sample x = base +- u * scale^k near each root and near infinity.
    const Integer scale = v == 0 ? Integer(2) : Integer(v);
    const Integer bases[3] = {e1, e2, e3};
    const Rational sigma_p(c.sigma() * c.pair().p());
    for (long budget : {16L, 64L, 512L}) {
        for (long k = 0; k <= 16 && !image.complete(); ++k) {
            for (int dir : {1, -1}) {
                if (k == 0 && dir < 0) continue;
                // scale^(dir*k)
                Integer power;
                mpz_pow_ui(power.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(k));
                Rational step = dir > 0 ? Rational(power) : Rational(Integer(1), power);
                for (const auto& base : bases) {
                    for (long u = 1; u <= budget && !image.complete(); ++u) {
                        for (int sign : {1, -1}) {
                            Rational x = Rational(base) + Rational(sign * u) * step;
                            ++image.samples_tried;
                            Rational fx = x * (x + sigma_p) * (x + Rational(c.sigma() * c.pair().q()));
                            if (fx.is_zero() || !is_local_square(fx, v)) continue;
                            span.add(local_pair_code(x, x + sigma_p, v));
                        }
                    }
                }
            }
        }
        if (image.complete()) return image;
    }
    throw std::runtime_error("local image at place " + std::to_string(v) + " incomplete for " +
                             c.equation() + ": found " + std::to_string(image.size()) + " of " +
                             std::to_string(image.expected_size));
}

}  // namespace twinec
