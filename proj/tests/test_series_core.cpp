#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qgordon/q_products.hpp"

using namespace qgordon;

namespace {

LaurentSeries from_coeffs(std::vector<long> cs, long offset, long trunc) {
    std::vector<mpz_class> v(cs.begin(), cs.end());
    return LaurentSeries(std::move(v), offset, trunc);
}

// Small random Laurent series for property tests.
LaurentSeries random_series(std::mt19937& rng, long trunc, bool unit = false) {
    std::uniform_int_distribution<long> val(-3, 3), len(0, 6), coeff(-9, 9);
    long v = val(rng);
    std::vector<mpz_class> cs;
    long width = len(rng);
    for (long i = 0; i <= width; ++i) cs.emplace_back(coeff(rng));
    if (unit) cs[0] = (coeff(rng) % 2 == 0) ? 1 : -1;
    return LaurentSeries(std::move(cs), v, trunc);
}

BiSeries random_biseries(std::mt19937& rng, long x_trunc, long q_trunc) {
    std::vector<LaurentSeries> entries;
    for (long m = 0; m <= x_trunc; ++m) entries.push_back(random_series(rng, q_trunc));
    return BiSeries::from_entries(std::move(entries));
}

} // namespace

TEST_CASE("laurent series basics") {
    LaurentSeries zero(10);
    CHECK(zero.is_zero());
    CHECK(!zero.valuation());

    LaurentSeries s = from_coeffs({1, -1}, 0, 10);  // 1 - q
    CHECK(s.valuation() == 0);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == -1);
    CHECK(s.coeff(5) == 0);

    // additive identity and cancellation
    CHECK(s.add(zero) == s);
    LaurentSeries q(1, 1, 10);
    LaurentSeries sum = s.add(q);
    CHECK(sum == LaurentSeries::one(10));

    // monomials beyond the truncation order are dropped
    LaurentSeries high(1, 11, 10);
    CHECK(high.is_zero());
}

TEST_CASE("laurent multiplication guard rule") {
    // (1 - q)(1 + q + ... + q^N) telescopes to 1 within the window
    long N = 12;
    std::vector<long> ones(N + 1, 1);
    LaurentSeries geo = from_coeffs(ones, 0, N);
    LaurentSeries s = from_coeffs({1, -1}, 0, N);
    CHECK(s.mul(geo) == LaurentSeries::one(N));

    // negative valuations shift the declared order
    LaurentSeries lau = from_coeffs({1}, -3, 5);  // q^-3 known to order 5
    LaurentSeries t = from_coeffs({1, 2}, 0, 5);
    CHECK(lau.mul(t).trunc_order() == 2);
    CHECK(lau.mul(t).coeff(-3) == 1);
    CHECK(lau.mul(t).coeff(-2) == 2);
}

TEST_CASE("laurent inversion") {
    LaurentSeries s = from_coeffs({1, -1}, 0, 4);  // 1 - q
    LaurentSeries inv = s.invert_unit();
    CHECK(inv == from_coeffs({1, 1, 1, 1, 1}, 0, 4));

    CHECK_THROWS_AS(from_coeffs({2, -1}, 0, 4).invert_unit(), NotAUnit);
    CHECK_THROWS_AS(LaurentSeries(6).invert_unit(), NotAUnit);

    // Laurent unit with negative valuation: q^-2 - 1 = q^-2(1 - q^2)
    LaurentSeries lu = from_coeffs({1, 0, -1}, -2, 6);
    LaurentSeries li = lu.invert_unit();
    CHECK(lu.mul(li).coeff(0) == 1);
    for (long e = 1; e <= lu.mul(li).trunc_order(); ++e) CHECK(lu.mul(li).coeff(e) == 0);
}

TEST_CASE("laurent ring axioms on random series") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentSeries a = random_series(rng, 12), b = random_series(rng, 12),
                      c = random_series(rng, 12);
        long ord = std::min({a.add(b).trunc_order(), b.add(a).trunc_order()});
        CHECK(!first_mismatch(a.add(b), b.add(a), ord));
        ord = std::min(a.mul(b).trunc_order(), b.mul(a).trunc_order());
        CHECK(!first_mismatch(a.mul(b), b.mul(a), ord));
        auto lhs = a.mul(b.add(c));
        auto rhs = a.mul(b).add(a.mul(c));
        ord = std::min(lhs.trunc_order(), rhs.trunc_order());
        CHECK(!first_mismatch(lhs, rhs, ord));
        auto assoc_l = a.mul(b).mul(c);
        auto assoc_r = a.mul(b.mul(c));
        ord = std::min(assoc_l.trunc_order(), assoc_r.trunc_order());
        CHECK(!first_mismatch(assoc_l, assoc_r, ord));
    }
}

TEST_CASE("inverse coefficients exceed 64 bits and stay exact") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        LaurentSeries s = random_series(rng, 40, true);
        if (s.is_zero()) continue;
        LaurentSeries inv = s.invert_unit();
        LaurentSeries prod = s.mul(inv);
        CHECK(prod.coeff(0) == 1);
        for (long e = *prod.valuation(); e <= prod.trunc_order(); ++e)
            if (e != 0) CHECK(prod.coeff(e) == 0);
    }
    // deliberately explosive inverse: 1/(1 - 9q) has coefficients 9^n
    std::vector<long> cs{1, -9};
    LaurentSeries s = from_coeffs(cs, 0, 40);
    // lowest coefficient 1 is a unit; inverse coefficients are 9^n
    LaurentSeries inv = s.invert_unit();
    mpz_class nine_40;
    mpz_ui_pow_ui(nine_40.get_mpz_t(), 9, 40);
    CHECK(inv.coeff(40) == nine_40);
    CHECK(nine_40 > mpz_class("18446744073709551615"));  // beyond 2^64
}

TEST_CASE("biseries product and identity examples") {
    // (1 - xq)(1 - xq^3) = 1 - xq - xq^3 + x^2 q^4
    BiSeries a = BiSeries::one_minus(x_pow(1, 1), 4, 10);
    BiSeries b = BiSeries::one_minus(x_pow(1, 3), 4, 10);
    BiSeries prod = a.mul(b);
    CHECK(prod.coeff(0, 0) == 1);
    CHECK(prod.coeff(1, 1) == -1);
    CHECK(prod.coeff(1, 3) == -1);
    CHECK(prod.coeff(2, 4) == 1);
    CHECK(prod.coeff(1, 2) == 0);
    CHECK(prod.coeff(2, 2) == 0);

    BiSeries one = BiSeries::one(4, 10);
    CHECK(prod.mul(one) == prod);
    CHECK(prod.add(BiSeries::zero(4, 10)) == prod);
}

TEST_CASE("biseries inversion") {
    // invert(1 - (xq)^3) to (6, 8) = 1 + x^3 q^3 + x^6 q^6
    BiSeries s = BiSeries::one_minus(x_pow(3, 3), 6, 8);
    BiSeries inv = s.invert_unit();
    CHECK(inv.coeff(0, 0) == 1);
    CHECK(inv.coeff(3, 3) == 1);
    CHECK(inv.coeff(6, 6) == 1);
    CHECK(inv.coeff(1, 1) == 0);
    CHECK(inv.coeff(3, 4) == 0);

    BiSeries two = BiSeries::one(3, 5).add(BiSeries::one_minus(q_pow(1), 3, 5));  // 2 - q
    CHECK_THROWS_AS(two.invert_unit(), NotAUnit);
}

TEST_CASE("biseries ring and inverse properties") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        BiSeries a = random_biseries(rng, 4, 8), b = random_biseries(rng, 4, 8);
        BiSeries ab = a.mul(b), ba = b.mul(a);
        CHECK(!first_mismatch(ab, ba, std::min(ab.x_trunc(), ba.x_trunc()),
                              std::min(ab.q_trunc(), ba.q_trunc())));
    }
    for (int trial = 0; trial < 20; ++trial) {
        // unit with +-1 lowest coefficient at x-degree 0
        BiSeries u = BiSeries::one(4, 10)
                         .add(random_biseries(rng, 4, 10).mul_monomial(x_pow(1, 1)))
                         .truncated(4, 10);
        BiSeries inv = u.invert_unit();
        BiSeries prod = u.mul(inv);
        long mo = std::min(prod.x_trunc(), 4L), no = std::min(prod.q_trunc(), 10L);
        CHECK(!first_mismatch(prod, BiSeries::one(mo, no), mo, no));
    }
}

TEST_CASE("evaluate_x") {
    // 1 + xq + x^2 q^3 at x = 1; the result is exact to min(N, M) only,
    // so evaluation uses an x window as wide as the q window.
    BiSeries s = BiSeries::one(6, 6)
                     .add(BiSeries::from_monomial(x_pow(1, 1), 6, 6))
                     .add(BiSeries::from_monomial(x_pow(2, 3), 6, 6));
    LaurentSeries at1 = s.evaluate_x(0);
    CHECK(at1.trunc_order() == 6);
    CHECK(at1.coeff(0) == 1);
    CHECK(at1.coeff(1) == 1);
    CHECK(at1.coeff(3) == 1);

    // valuation certificate violation: x * q^0
    BiSeries bad = BiSeries::from_monomial(x_pow(1, 0), 2, 6);
    CHECK_THROWS_AS(bad.evaluate_x(0), UnsafeEvaluation);
}

TEST_CASE("pochhammer products") {
    // (q; q)_3 = 1 - q - q^2 + q^4 + q^5 - q^6
    LaurentSeries p3 = pochhammer_q(q_pow(1), 1, 3, 10);
    LaurentSeries want = from_coeffs({1, -1, -1, 0, 1, 1, -1}, 0, 10);
    CHECK(!first_mismatch(p3, want, 10));

    // empty product
    CHECK(pochhammer(q_pow(7), 1, 0, 3, 9) == BiSeries::one(3, 9));

    // infinite product: pentagonal numbers
    LaurentSeries euler = pochhammer_q(q_pow(1), 1, kInfinite, 12);
    LaurentSeries penta = from_coeffs({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}, 0, 12);
    CHECK(!first_mismatch(euler, penta, 12));

    CHECK_THROWS_AS(pochhammer(q_pow(1), 0, kInfinite, 2, 10), DivergentProduct);
    CHECK_THROWS_AS(pochhammer(q_pow(1), -2, kInfinite, 2, 10), DivergentProduct);
}

TEST_CASE("pentagonal support up to 100") {
    long N = 100;
    LaurentSeries euler = pochhammer_q(q_pow(1), 1, kInfinite, N);
    std::vector<long> expect(N + 1, 0);
    for (long j = 1;; ++j) {  // generalized pentagonal numbers j(3j±1)/2
        long g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
        if (g1 > N && g2 > N) break;
        long sign = (j % 2 == 0) ? 1 : -1;
        if (g1 <= N) expect[g1] = sign;
        if (g2 <= N) expect[g2] = sign;
    }
    expect[0] = 1;
    for (long e = 0; e <= N; ++e) CHECK(euler.coeff(e) == expect[e]);
}

TEST_CASE("theta sums and the triple product") {
    // n = 0 term only at N = 0
    LaurentSeries t = theta_sum(1, 3, 0);
    CHECK(t.coeff(0) == 1);

    // (q^2, q^3, q^5; q^5): the Rogers-Ramanujan product numerator
    LaurentSeries rr = theta_sum(2, 5, 20);
    CHECK(rr.coeff(0) == 1);
    CHECK(rr.coeff(2) == -1);
    CHECK(rr.coeff(3) == -1);
    CHECK(rr.coeff(9) == 1);
    CHECK(rr.coeff(11) == 1);
    CHECK(!first_mismatch(rr, triple_product(2, 5, 20, ProductRoute::Pochhammer), 20));

    // (q^3, q^4, q^7; q^7) to order 40
    CHECK(!first_mismatch(theta_sum(3, 7, 40),
                          triple_product(3, 7, 40, ProductRoute::Pochhammer), 40));

    CHECK_THROWS_AS(theta_sum(0, 5, 10), NonTruncating);
    CHECK_THROWS_AS(theta_sum(5, 5, 10), NonTruncating);
    CHECK(triple_product(0, 5, 10).is_zero());
}
