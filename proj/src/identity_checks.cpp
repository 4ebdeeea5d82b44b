#include "qgordon/identity_checks.hpp"

#include <chrono>

namespace qgordon {

namespace {

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

GordonParams with_af(GordonParams p, long a, long f) {
    p.a = a;
    p.f = f;
    return p;
}

} // namespace

ConstraintSet even_constraints(const GordonParams& p) {
    return ConstraintSet{p.pair_bound(), p.even_initial_bound(), p.d, ParityClass::EvenParts};
}

ConstraintSet odd_constraints(const GordonParams& p) {
    return ConstraintSet{p.pair_bound(), p.odd_initial_bound(), p.d, ParityClass::OddParts};
}

CheckReport check_counts_vs_series(const GordonParams& p, ProductVariant variant, long x_order,
                                   long q_order, CBetaBracket bracket) {
    Stopwatch sw;
    BiSeries counted = dp_genfun(
        variant == ProductVariant::Even ? even_constraints(p) : odd_constraints(p), x_order,
        q_order);
    BiSeries constructed = variant == ProductVariant::Even
                               ? series_C(p, XSub::keep(), x_order, q_order, bracket)
                               : series_T(p, XSub::keep(), x_order, q_order);
    CheckReport r = make_report("counts_vs_series", p,
                                variant == ProductVariant::Even ? "even" : "odd", x_order,
                                q_order, compare(counted, constructed, x_order, q_order));
    r.elapsed_ms = sw.ms();
    return r;
}

CheckReport check_theorem(const GordonParams& p, ProductVariant variant, long q_order) {
    Stopwatch sw;
    BiSeries counted = dp_genfun(
        variant == ProductVariant::Even ? even_constraints(p) : odd_constraints(p), q_order,
        q_order);
    LaurentSeries lhs = counted.evaluate_x(0);
    LaurentSeries rhs = product_rhs(p, variant, q_order);
    CheckReport r =
        make_report("theorem", p, variant == ProductVariant::Even ? "even" : "odd", 0, q_order,
                    compare(lhs, rhs, q_order));
    r.elapsed_ms = sw.ms();
    return r;
}

CheckReport check_count_recurrences(const GordonParams& p, long n_max) {
    Stopwatch sw;
    CheckReport r = make_report("count_recurrences", p, "", n_max, n_max, std::nullopt);

    const long K = p.pair_bound();
    auto even = [&](long A) {
        return brute_table(ConstraintSet{K, A, p.d, ParityClass::EvenParts}, n_max);
    };
    auto odd = [&](long A) {
        return brute_table(ConstraintSet{K, A, p.d, ParityClass::OddParts}, n_max);
    };
    auto at = [n_max](const std::vector<std::vector<long>>& t, long n, long m) {
        if (n < 0 || m < 0 || n > n_max || m > n_max) return 0L;
        return t[static_cast<size_t>(n)][static_cast<size_t>(m)];
    };
    auto mismatch_at = [](long m, long n, long lhs, long rhs) {
        return BiMismatch{m, n, lhs, rhs};
    };

    const long A_even = p.even_initial_bound();
    const long A_odd = p.odd_initial_bound();
    const long bound1 = p.f <= p.e ? p.d * p.k - p.d * p.a + p.d : p.d * p.k - p.d * p.a;
    auto b_hi = even(A_even), b_lo = even(A_even - 1), bb_rhs = odd(bound1);
    auto bb_hi = odd(A_odd + p.d), bb_lo = odd(A_odd);
    auto b_rhs = even(p.d * p.k - p.d * p.a + p.e);
    auto b_zero = even(0), bb_zero = odd(0);

    for (long n = 0; n <= n_max && r.pass; ++n) {
        for (long m = 0; m <= n_max && r.pass; ++m) {
            // Erasing the 1's: b_{da+f} - b_{da+f-1} counts partitions with
            // f_1 = da+f-1 exactly, mapped to the overline family.
            long lhs1 = at(b_hi, n, m) - at(b_lo, n, m);
            long rhs1 = at(bb_rhs, n - m, m - (A_even - 1));
            if (lhs1 != rhs1) fold(r, mismatch_at(m, n, lhs1, rhs1));

            long lhs2 = at(bb_hi, n, m) - at(bb_lo, n, m);
            long rhs2 = at(b_rhs, n - m, m - A_odd);
            if (lhs2 != rhs2) fold(r, mismatch_at(m, n, lhs2, rhs2));

            // Boundary conditions on the counts themselves.
            if (at(b_zero, n, m) != 0 || at(bb_zero, n, m) != 0)
                fold(r, mismatch_at(m, n, 1, 0));
            if (m == 0 && n == 0 && (at(b_hi, 0, 0) != 1 || at(bb_hi, 0, 0) != 1))
                fold(r, mismatch_at(0, 0, at(b_hi, 0, 0), 1));
            if (((m == 0 && n > 0) || (m > 0 && n == 0)) &&
                (at(b_hi, n, m) != 0 || at(bb_hi, n, m) != 0))
                fold(r, mismatch_at(m, n, 1, 0));
        }
    }

    r.elapsed_ms = sw.ms();
    return r;
}

CheckReport check_functional_eqs(const GordonParams& p, long x_order, long q_order, long n_max,
                                 CBetaBracket bracket) {
    Stopwatch sw;
    CheckReport r = make_report("functional_eqs", p, "", x_order, q_order, std::nullopt);
    const long d = p.d, k = p.k, e = p.e, a = p.a, f = p.f;
    const XSub at_x = XSub::keep(0);
    const XSub at_xq = XSub::keep(1);

    // Series level: C_{da+f} - C_{da+f-1} = (xq)^{da+f-1} T_{...}(xq; q).
    {
        BiSeries lhs = series_C(p, at_x, x_order, q_order, bracket)
                           .sub(series_C(with_af(p, a, f - 1), at_x, x_order, q_order, bracket));
        long a_rhs = f <= e ? k - a + 1 : k - a;
        BiSeries rhs = series_T(with_af(p, a_rhs, f), at_xq, x_order, q_order)
                           .mul_monomial(x_pow(d * a + f - 1, d * a + f - 1));
        fold(r, compare(lhs, rhs, x_order, q_order));
    }
    // Series level: T_{da+d} - T_{da} = (xq)^{da} C_{dk-da+e}(xq; q).  The
    // count recurrence shifts (m, n) to (m - da, n - m), which is the x -> xq
    // substitution on the generating function, exactly as in the first
    // equation; the term identities confirm the shifted argument.
    {
        BiSeries lhs = series_T(with_af(p, a + 1, f), at_x, x_order, q_order)
                           .sub(series_T(p, at_x, x_order, q_order));
        BiSeries rhs = series_C(with_af(p, k - a, e), at_xq, x_order, q_order, bracket)
                           .mul_monomial(x_pow(d * a, d * a));
        fold(r, compare(lhs, rhs, x_order, q_order));
    }

    // Term level, for each n <= n_max.
    const long E = d * a + f;
    for (long n = 0; n <= n_max && r.pass; ++n) {
        auto bt = [&](TermKind kind, const GordonParams& q, long nn, long exp, XSub xs) {
            return build_term(kind, q, nn, exp, xs, x_order, q_order, bracket);
        };
        BiSeries zero = BiSeries::zero(x_order, q_order);
        long drop = f <= e ? d * k - d * a + d : d * k - d * a;

        // c-alpha delta against t-beta_{n-1}(xq).
        BiSeries lhs = bt(TermKind::CAlpha, p, n, E, at_x)
                           .sub(bt(TermKind::CAlpha, with_af(p, a, f - 1), n, E - 1, at_x));
        BiSeries rhs = n == 0 ? zero
                              : bt(TermKind::TBeta, p, n - 1, drop, at_xq)
                                    .mul_monomial(x_pow(E - 1, E - 1));
        fold(r, compare(lhs, rhs, x_order, q_order));

        // c-beta delta against t-alpha_n(xq).
        lhs = bt(TermKind::CBeta, p, n, E, at_x)
                  .sub(bt(TermKind::CBeta, with_af(p, a, f - 1), n, E - 1, at_x));
        rhs = bt(TermKind::TAlpha, p, n, drop, at_xq).mul_monomial(x_pow(E - 1, E - 1));
        fold(r, compare(lhs, rhs, x_order, q_order));

        // t-alpha delta against c-beta[e]_{n-1}(xq).
        lhs = bt(TermKind::TAlpha, p, n, d * a + d, at_x)
                  .sub(bt(TermKind::TAlpha, p, n, d * a, at_x));
        rhs = n == 0 ? zero
                     : bt(TermKind::CBeta, with_af(p, a, e), n - 1, d * k - d * a + e, at_xq)
                           .mul_monomial(x_pow(d * a, d * a));
        fold(r, compare(lhs, rhs, x_order, q_order));

        // t-beta delta against c-alpha[e]_n(xq).
        lhs = bt(TermKind::TBeta, p, n, d * a + d, at_x)
                  .sub(bt(TermKind::TBeta, p, n, d * a, at_x));
        rhs = bt(TermKind::CAlpha, with_af(p, a, e), n, d * k - d * a + e, at_xq)
                  .mul_monomial(x_pow(d * a, d * a));
        fold(r, compare(lhs, rhs, x_order, q_order));

        // Termwise cancellation of the index-zero boundary.
        GordonParams p0 = with_af(p, a, 0);
        BiSeries cancel = bt(TermKind::CAlpha, p0, n, 0, at_x)
                              .add(bt(TermKind::CBeta, p0, n, 0, at_x));
        fold(r, compare(cancel, zero, x_order, q_order));
        cancel = bt(TermKind::TAlpha, p0, n, 0, at_x).add(bt(TermKind::TBeta, p0, n, 0, at_x));
        fold(r, compare(cancel, zero, x_order, q_order));
    }

    r.elapsed_ms = sw.ms();
    return r;
}

CheckReport check_legacy(LegacyTheorem theorem, long k, long a, long q_order) {
    Stopwatch sw;
    GordonParams tag;  // effective parameters recorded in the report
    std::string variant;
    ConstraintSet counted;
    std::optional<GordonParams> reduction;
    ProductVariant reduction_variant = ProductVariant::Even;

    switch (theorem) {
        case LegacyTheorem::T2_1: {
            variant = "t2_1";
            counted = ConstraintSet{k, a, 1, ParityClass::None};
            tag = GordonParams{1, k, 1, a, 1};
            if (k >= 2 && a >= 2) reduction = GordonParams{1, k - 1, 1, a - 1, 1};
            break;
        }
        case LegacyTheorem::T2_2: {
            if ((a - k) % 2 != 0) throw ParamDomain("parity theorem needs a == k (mod 2)");
            variant = "t2_2";
            counted = ConstraintSet{k, a, 2, ParityClass::EvenParts};
            long e = (k % 2 == 0) ? 2 : 1;
            long f = (a % 2 == 0) ? 2 : 1;
            tag = GordonParams{2, k, e, a, f};
            reduction = GordonParams{2, (k - e) / 2, e, (a - f) / 2, f};
            break;
        }
        case LegacyTheorem::T2_2_Overline: {
            if (k % 2 != 1 || a % 2 != 0)
                throw ParamDomain("overline parity theorem needs k odd, a even");
            variant = "t2_2_overline";
            counted = ConstraintSet{k, a, 2, ParityClass::OddParts};
            tag = GordonParams{2, k, 1, a, 1};
            reduction = GordonParams{2, (k - 1) / 2, 1, a / 2, 1};
            reduction_variant = ProductVariant::OddOverline;
            break;
        }
        case LegacyTheorem::T2_3: {
            if ((a - k) % 2 == 0) throw ParamDomain("missing-case theorem needs a != k (mod 2)");
            variant = "t2_3";
            counted = ConstraintSet{k, a, 2, ParityClass::EvenParts};
            long e = (k % 2 == 0) ? 2 : 1;
            long f = (a % 2 == 0) ? 2 : 1;
            tag = GordonParams{2, k, e, a, f};
            reduction = GordonParams{2, (k - e) / 2, e, (a - f) / 2, f};
            break;
        }
    }

    LaurentSeries rhs = legacy_rhs(theorem, k, a, q_order);
    LaurentSeries lhs = dp_genfun(counted, q_order, q_order).evaluate_x(0);
    CheckReport r = make_report("legacy", tag, variant, 0, q_order, compare(lhs, rhs, q_order));
    if (reduction) fold(r, compare(product_rhs(*reduction, reduction_variant, q_order), rhs,
                                   q_order));
    r.elapsed_ms = sw.ms();
    return r;
}

CheckReport check_jtp(long exponent_a, long modulus, long q_order) {
    Stopwatch sw;
    LaurentSeries theta = theta_sum(exponent_a, modulus, q_order);
    LaurentSeries poch = triple_product(exponent_a, modulus, q_order, ProductRoute::Pochhammer);
    GordonParams tag{0, modulus, 0, exponent_a, 0};
    CheckReport r =
        make_report("jtp", tag, "", 0, q_order, compare(theta, poch, q_order));
    r.elapsed_ms = sw.ms();
    return r;
}

CheckReport negative_control(const GordonParams& p, long q_order) {
    p.validate_relaxed();
    if (p.valid_e())
        throw ParamDomain("negative control needs e outside {d, d/2}");
    CheckReport r = check_theorem(p, ProductVariant::Even, q_order);
    r.check_id = "negative_control";
    r.expected_pass = false;
    return r;
}

std::optional<CBetaBracket> arbitrate_bracket(const GordonParams& p, long x_order, long q_order,
                                              long n_max) {
    if (p.e < 2) return std::nullopt;  // no f < e case to distinguish
    GordonParams probe = with_af(p, p.a, 1);  // f = 1 < e
    auto passes = [&](CBetaBracket cand) {
        return check_counts_vs_series(probe, ProductVariant::Even, x_order, q_order, cand)
                   .pass &&
               check_functional_eqs(probe, x_order, q_order, n_max, cand).pass;
    };
    bool disp = passes(CBetaBracket::SeriesDisplay);
    bool iter = passes(CBetaBracket::IteratedForm);
    if (disp == iter) return std::nullopt;
    return disp ? CBetaBracket::SeriesDisplay : CBetaBracket::IteratedForm;
}

} // namespace qgordon
