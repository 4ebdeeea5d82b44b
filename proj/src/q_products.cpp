#include "qgordon/q_products.hpp"

#include <cassert>
#include <string>

namespace qgordon {

BiSeries pochhammer(const Monomial& a, long step, std::optional<long> count, long x_trunc,
                    long q_trunc) {
    if (!count && step <= 0)
        throw DivergentProduct("infinite product needs a positive step, got " +
                               std::to_string(step));
    BiSeries acc = BiSeries::one(x_trunc, q_trunc);
    if (a.xdeg > x_trunc) return acc;  // every factor is 1 within the window
    long i = 0;
    while (true) {
        if (count && i >= *count) break;
        long e = a.qdeg + step * i;
        if (!count) {
            // A skipped factor first touches exponent e + val(acc); factors with
            // negative exponents may have pushed the valuation below zero.
            long v = std::min(acc.q_valuation().value_or(0), 0L);
            if (e + v > q_trunc) break;
        }
        acc = acc.mul(BiSeries::one_minus(Monomial{a.sign, a.xdeg, e}, x_trunc, q_trunc));
        ++i;
    }
    return acc;
}

LaurentSeries pochhammer_q(const Monomial& a, long step, std::optional<long> count,
                           long q_trunc) {
    assert(a.xdeg == 0);
    return pochhammer(a, step, count, 0, q_trunc).entry(0);
}

LaurentSeries theta_sum(long exponent_a, long modulus, long q_trunc) {
    if (modulus <= 0 || exponent_a <= 0 || exponent_a >= modulus)
        throw NonTruncating("theta sum truncates only for 0 < a < modulus, got a=" +
                            std::to_string(exponent_a) + " modulus=" +
                            std::to_string(modulus));
    LaurentSeries acc(q_trunc);
    // n >= 0 tail: exponent modulus*n(n-1)/2 + a*n, strictly increasing.
    for (long n = 0;; ++n) {
        long e = modulus * (n * (n - 1) / 2) + exponent_a * n;
        if (e > q_trunc) break;
        acc = acc.add(LaurentSeries((n % 2 == 0) ? 1 : -1, e, q_trunc));
    }
    // n < 0 tail: with n = -m, exponent modulus*m(m+1)/2 - a*m, increasing in m.
    for (long m = 1;; ++m) {
        long e = modulus * (m * (m + 1) / 2) - exponent_a * m;
        if (e > q_trunc) break;
        acc = acc.add(LaurentSeries((m % 2 == 0) ? 1 : -1, e, q_trunc));
    }
    return acc;
}

LaurentSeries triple_product(long exponent_a, long modulus, long q_trunc, ProductRoute route) {
    if (exponent_a < 0 || exponent_a > modulus)
        throw NonTruncating("triple product exponent outside [0, modulus]");
    if (exponent_a == 0 || exponent_a == modulus) return LaurentSeries(q_trunc);  // (1-q^0) factor
    if (route == ProductRoute::Theta) return theta_sum(exponent_a, modulus, q_trunc);
    LaurentSeries p = pochhammer_q(q_pow(exponent_a), modulus, kInfinite, q_trunc);
    p = p.mul(pochhammer_q(q_pow(modulus - exponent_a), modulus, kInfinite, q_trunc));
    return p.mul(pochhammer_q(q_pow(modulus), modulus, kInfinite, q_trunc)).truncated(q_trunc);
}

} // namespace qgordon
