#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgordon/gordon_series.hpp"
#include "qgordon/identity_checks.hpp"
#include "qgordon/partition_count.hpp"

using namespace qgordon;

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(GordonParams{2, 3, 1, 2, 2}.validate());
    CHECK_NOTHROW(GordonParams{2, 3, 2, 2, 2}.validate());
    CHECK_THROWS_AS(GordonParams{3, 2, 3, 1, 1}.validate(), ParamDomain);  // d > k
    CHECK_THROWS_AS(GordonParams{2, 3, 1, 4, 1}.validate(), ParamDomain);  // a > k
    CHECK_THROWS_AS(GordonParams{2, 3, 1, 2, 3}.validate(), ParamDomain);  // f > d
    CHECK_THROWS_AS(GordonParams{3, 3, 2, 1, 1}.validate(), ParamDomain);  // e not d, d/2
    CHECK_NOTHROW(GordonParams{3, 3, 2, 1, 1}.validate_relaxed());
}

TEST_CASE("attached t-alpha term at x = 0") {
    GordonParams p{2, 3, 1, 2, 1};
    // value 1 at n = 0, 0 for n > 0
    BiSeries t0 = build_term(TermKind::TAlpha, p, 0, std::nullopt, XSub::zero(), 0, 10);
    CHECK(t0 == BiSeries::one(0, 10));
    for (long n = 1; n <= 3; ++n) {
        BiSeries tn = build_term(TermKind::TAlpha, p, n, std::nullopt, XSub::zero(), 0, 10);
        CHECK(tn.is_zero());
    }
    // the beta term vanishes identically at x = 0 when the exponent is positive
    BiSeries b0 = build_term(TermKind::TBeta, p, 0, std::nullopt, XSub::zero(), 0, 10);
    CHECK(b0.is_zero());
}

TEST_CASE("attached alpha+beta terms cancel at exponent zero") {
    for (const GordonParams& p :
         {GordonParams{1, 2, 1, 1, 1}, GordonParams{2, 2, 1, 1, 1}, GordonParams{2, 3, 2, 2, 2},
          GordonParams{4, 4, 2, 1, 3}}) {
        for (long n = 0; n <= 3; ++n) {
            BiSeries sum = build_term(TermKind::TAlpha, p, n, 0, XSub::keep(), 10, 12)
                               .add(build_term(TermKind::TBeta, p, n, 0, XSub::keep(), 10, 12));
            CHECK(sum.is_zero());
            GordonParams p0 = p;
            p0.f = 0;  // boundary family d
            sum = build_term(TermKind::CAlpha, p0, n, 0, XSub::keep(), 10, 12)
                      .add(build_term(TermKind::CBeta, p0, n, 0, XSub::keep(), 10, 12));
            CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("d=1 c-alpha term matches the Andrews alpha term") {
    // c_alpha at (d=1, k, e=f=1) is the alpha_n of Q_{k+1, a+1}: the same
    // attached term once the pair-bound exponents are identified.
    const long M = 10, N = 20;
    GordonParams p{1, 2, 1, 2, 1};  // attached exponent a+1 = 3 of Q_{3,3}
    for (long n = 0; n <= 2; ++n) {
        BiSeries lhs = build_term(TermKind::CAlpha, p, n, std::nullopt, XSub::keep(), M, N);
        // alpha_n(x;q) (q^{-n})^3 of Q_{3,3} assembled from scratch
        long k = 3, a = 3;
        long qdeg = (2 * k + 1) * n * (n + 1) / 2 - n * a;
        BiSeries alpha = BiSeries::from_monomial(
            Monomial{n % 2 == 0 ? +1 : -1, k * n, qdeg}, M, N + n * a + std::max(qdeg, 0L));
        alpha = alpha.mul(pochhammer(q_pow(1), 1, n, M, N + n * a).invert_unit());
        alpha =
            alpha.mul(pochhammer(x_pow(1, n + 1), 1, kInfinite, M, N + n * a).invert_unit());
        CHECK(!first_mismatch(lhs, alpha.truncated(M, N), M, N));
    }
}

TEST_CASE("series at x = 0 are 1; exponent-zero instances vanish") {
    for (const GordonParams& p :
         {GordonParams{1, 1, 1, 1, 1}, GordonParams{2, 3, 1, 2, 2}, GordonParams{3, 4, 3, 1, 2},
          GordonParams{4, 4, 2, 3, 4}}) {
        CHECK(series_C(p, XSub::zero(), 0, 25) == BiSeries::one(0, 25));
        CHECK(series_T(p, XSub::zero(), 0, 25) == BiSeries::one(0, 25));

        GordonParams pz = p;
        pz.a = 0;
        pz.f = 0;
        CHECK(series_C(pz, XSub::keep(), 12, 14).is_zero());
        pz.f = p.f;  // T ignores f; exponent da = 0
        CHECK(series_T(pz, XSub::keep(), 12, 14).is_zero());
    }
}

TEST_CASE("x = 0 initial condition holds for relaxed e as well") {
    GordonParams p{3, 3, 2, 1, 1};  // invalid e on purpose
    CHECK(series_C(p, XSub::zero(), 0, 20) == BiSeries::one(0, 20));
    CHECK(series_T(p, XSub::zero(), 0, 20) == BiSeries::one(0, 20));
}

TEST_CASE("series_C matches the partition counts (Gordon instance)") {
    // (d=1, k=2, e=f=1, a=2): pair bound 3, initial bound 3
    GordonParams p{1, 2, 1, 2, 1};
    BiSeries counted = dp_genfun(ConstraintSet{3, 3, 1, ParityClass::None}, 20, 20);
    BiSeries series = series_C(p, XSub::keep(), 20, 20);
    CHECK(!first_mismatch(counted, series, 20, 20));
}

TEST_CASE("series_T matches the overline counts") {
    // (d=2, k=2, e=1, a=1): pair bound 5, initial bound 2, odd parts d-often
    GordonParams p{2, 2, 1, 1, 1};
    BiSeries counted = dp_genfun(ConstraintSet{5, 2, 2, ParityClass::OddParts}, 20, 20);
    BiSeries series = series_T(p, XSub::keep(), 20, 20);
    CHECK(!first_mismatch(counted, series, 20, 20));
}

TEST_CASE("collapse substitution x -> 1 agrees with the summed counts") {
    GordonParams p{2, 2, 2, 1, 2};
    LaurentSeries via_series = series_C(p, XSub::collapse(0), 0, 18).entry(0);
    LaurentSeries via_counts = dp_genfun(even_constraints(p), 18, 18).evaluate_x(0);
    CHECK(!first_mismatch(via_series, via_counts, 18));
}

TEST_CASE("series display bracket candidate fails where the iterated one passes") {
    GordonParams p{2, 2, 2, 1, 1};  // f < e, so the candidates differ
    BiSeries counted = dp_genfun(even_constraints(p), 16, 16);
    CHECK(!first_mismatch(counted,
                          series_C(p, XSub::keep(), 16, 16, CBetaBracket::IteratedForm), 16,
                          16));
    CHECK(first_mismatch(counted,
                         series_C(p, XSub::keep(), 16, 16, CBetaBracket::SeriesDisplay), 16,
                         16));
}

TEST_CASE("product_rhs basics") {
    // q^0 coefficient 1 for valid parameters
    for (const GordonParams& p :
         {GordonParams{1, 1, 1, 1, 1}, GordonParams{2, 4, 1, 3, 2}, GordonParams{4, 4, 4, 2, 3}}) {
        CHECK(product_rhs(p, ProductVariant::Even, 30).coeff(0) == 1);
        CHECK(product_rhs(p, ProductVariant::OddOverline, 30).coeff(0) == 1);
    }

    // d=1 collapse to the Gordon product (q^{a+1}, q^{2k-a+2}, q^{2k+3}; ...)/(q; q)
    GordonParams p{1, 2, 1, 2, 1};
    LaurentSeries lhs = product_rhs(p, ProductVariant::Even, 40);
    LaurentSeries rhs = pochhammer_q(q_pow(1), 1, kInfinite, 40)
                            .invert_unit()
                            .mul(triple_product(3, 7, 40))
                            .truncated(40);
    CHECK(!first_mismatch(lhs, rhs, 40));

    // theta and Pochhammer routes agree
    for (const GordonParams& q :
         {GordonParams{2, 3, 2, 3, 2}, GordonParams{3, 4, 3, 2, 1}, GordonParams{4, 4, 2, 1, 1}}) {
        CHECK(!first_mismatch(product_rhs(q, ProductVariant::Even, 50, ProductRoute::Theta),
                              product_rhs(q, ProductVariant::Even, 50, ProductRoute::Pochhammer),
                              50));
        CHECK(!first_mismatch(
            product_rhs(q, ProductVariant::OddOverline, 50, ProductRoute::Theta),
            product_rhs(q, ProductVariant::OddOverline, 50, ProductRoute::Pochhammer), 50));
    }
}

TEST_CASE("legacy right-hand sides") {
    // Gordon k=2, a=2 is the first Rogers-Ramanujan identity: q^6 coefficient 3
    LaurentSeries rr = legacy_rhs(LegacyTheorem::T2_1, 2, 2, 20);
    CHECK(rr.coeff(6) == 3);

    // domain violations
    CHECK_THROWS_AS(legacy_rhs(LegacyTheorem::T2_2, 3, 2, 10), ParamDomain);
    CHECK_THROWS_AS(legacy_rhs(LegacyTheorem::T2_2_Overline, 2, 2, 10), ParamDomain);
    CHECK_THROWS_AS(legacy_rhs(LegacyTheorem::T2_3, 3, 3, 10), ParamDomain);
    CHECK_THROWS_AS(legacy_rhs(LegacyTheorem::T2_1, 3, 4, 10), ParamDomain);
}

TEST_CASE("Q series") {
    // Q_{k,a}(0; q) = 1
    CHECK(q_series(3, 2, XSub::zero(), 0, 20) == BiSeries::one(0, 20));
    // Q_{k,0} = 0
    CHECK(q_series(3, 0, XSub::keep(), 10, 15).is_zero());
    // agreement with the d = 1 series at shifted parameters, bivariate
    BiSeries lhs = q_series(3, 3, XSub::keep(), 16, 16);
    BiSeries rhs = series_C(GordonParams{1, 2, 1, 2, 1}, XSub::keep(), 16, 16);
    CHECK(!first_mismatch(lhs, rhs, 16, 16));
}

TEST_CASE("term valuation bound is respected at high order") {
    // series construction asserts the bound internally for every summed index
    GordonParams p{2, 4, 1, 4, 2};
    CHECK_NOTHROW(series_C(p, XSub::keep(), 10, 60));
    CHECK_NOTHROW(series_T(p, XSub::keep(), 10, 60));
}
