#include "qgordon/construction_checks.hpp"

#include <chrono>

#include "qgordon/q_products.hpp"

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

BiSeries bare(TermKind kind, const GordonParams& p, long n, XSub xs, long x_order,
              long q_order, CBetaBracket bracket = CBetaBracket::IteratedForm) {
    return build_term(kind, p, n, 0, xs, x_order, q_order, bracket);
}

long binom2(long n) { return n * (n + 1) / 2; }

} // namespace

MonomialMatrix MonomialMatrix::zero(long size, long x_trunc, long q_trunc) {
    MonomialMatrix m;
    m.size = size;
    m.entries.assign(static_cast<size_t>(size),
                     std::vector<BiSeries>(static_cast<size_t>(size),
                                           BiSeries::zero(x_trunc, q_trunc)));
    return m;
}

MonomialMatrix MonomialMatrix::mul(const MonomialMatrix& other) const {
    MonomialMatrix out;
    out.size = size;
    out.entries.resize(static_cast<size_t>(size));
    for (long i = 0; i < size; ++i)
        for (long j = 0; j < size; ++j) {
            BiSeries acc = entries[i][0].mul(other.entries[0][j]);
            for (long l = 1; l < size; ++l)
                acc = acc.add(entries[i][l].mul(other.entries[l][j]));
            out.entries[static_cast<size_t>(i)].push_back(std::move(acc));
        }
    return out;
}

CheckReport check_matrix_adjugate(long d, long e, long n, MatrixFamily which, long x_order,
                                  long q_order) {
    Stopwatch sw;
    if (d < 1 || e < 1 || e > d || n < 0)
        throw ParamDomain("matrix check needs d >= 1, 1 <= e <= d, n >= 0");
    GordonParams tag{d, d, e, 1, 1};
    std::string variant = which == MatrixFamily::Alpha ? "alpha" : "beta";
    CheckReport r = make_report("matrix_adjugate", tag, variant + ",n=" + std::to_string(n),
                                x_order, q_order, std::nullopt);

    // Matrix entries are exact monomials; an inflated window absorbs the q^{-n}
    // diagonal so the product is still exact to the compared order.
    const long M = x_order, N = q_order, Nw = q_order + n;
    Monomial y = which == MatrixFamily::Alpha ? q_pow(-n) : x_pow(1, n + 1);

    // Diagonal y, subdiagonal -1, and -1 in the corner closing the residue
    // cycle; for d = 1 the corner coincides with the diagonal and the matrix
    // degenerates to [y - 1].
    MonomialMatrix A = MonomialMatrix::zero(d, M, Nw);
    for (long i = 0; i < d; ++i) {
        long j = (i - 1 + d) % d;
        A.entries[i][i] = A.entries[i][i].add(BiSeries::from_monomial(y, M, Nw));
        A.entries[i][j] =
            A.entries[i][j].add(BiSeries::from_monomial(Monomial{-1, 0, 0}, M, Nw));
    }

    MonomialMatrix B = MonomialMatrix::zero(d, M, Nw);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j) {
            if (which == MatrixFamily::Alpha) {
                long s = ((i - j) % d + d) % d + 1;  // q^{sn}, s = 1..d
                B.entries[i][j] = BiSeries::from_monomial(q_pow(s * n), M, Nw);
            } else {
                long s = ((j - i - 1) % d + d) % d;  // y^s, s = 0..d-1
                B.entries[i][j] = BiSeries::from_monomial(y.pow(s), M, Nw);
            }
        }

    BiSeries scalar = which == MatrixFamily::Alpha
                          ? BiSeries::one_minus(q_pow(d * n), M, N)        // 1 - q^{dn}
                          : BiSeries::one_minus(y.pow(d), M, N).negate();  // y^d - 1
    MonomialMatrix P = A.mul(B);
    for (long i = 0; i < d && r.pass; ++i)
        for (long j = 0; j < d && r.pass; ++j)
            fold(r, compare(P.entries[i][j],
                            (i == j) ? scalar : BiSeries::zero(M, N), M, N));
    r.elapsed_ms = sw.ms();
    return r;
}

CheckReport check_simplified_recurrences(const GordonParams& p, long n_max, long x_order,
                                         long q_order) {
    Stopwatch sw;
    CheckReport r =
        make_report("simplified_recurrences", p, "", x_order, q_order, std::nullopt);
    const long d = p.d, k = p.k, e = p.e, f = p.f;
    const long M = x_order, N = q_order;
    const XSub at_x = XSub::keep(0);
    const XSub at_xq = XSub::keep(1);
    auto with_f = [&](long ff) {
        GordonParams q = p;
        q.f = ff;
        return q;
    };

    for (long n = 1; n <= n_max && r.pass; ++n) {
        const long g = f <= e ? d * k + d + f - 1 : d * k + f - 1;

        // q^{-n} c_alpha[f]_n - c_alpha[f-1]_n = (xq^{n+1})^g t_beta_{n-1}(xq).
        BiSeries lhs = bare(TermKind::CAlpha, p, n, at_x, M, N + n)
                           .mul_monomial(q_pow(-n))
                           .sub(bare(TermKind::CAlpha, with_f(f - 1), n, at_x, M, N));
        BiSeries rhs = bare(TermKind::TBeta, p, n - 1, at_xq, M, N)
                           .mul_monomial(x_pow(g, (n + 1) * g));
        fold(r, compare(lhs, rhs, M, N));

        // (xq^{n+1}) c_beta[f]_n - c_beta[f-1]_n = (q^{-n})^g t_alpha_n(xq).
        lhs = bare(TermKind::CBeta, p, n, at_x, M, N)
                  .mul_monomial(x_pow(1, n + 1))
                  .sub(bare(TermKind::CBeta, with_f(f - 1), n, at_x, M, N));
        rhs = bare(TermKind::TAlpha, p, n, at_xq, M, N + n * g).mul_monomial(q_pow(-n * g));
        fold(r, compare(lhs, rhs, M, N));

        // (q^{-dn} - 1) t_alpha_n = (xq^{n+1})^{dk+e} c_beta[e]_{n-1}(xq).
        BiSeries ta = bare(TermKind::TAlpha, p, n, at_x, M, N + d * n);
        lhs = ta.mul_monomial(q_pow(-d * n)).sub(ta);
        rhs = bare(TermKind::CBeta, with_f(e), n - 1, at_xq, M, N)
                  .mul_monomial(x_pow(d * k + e, (n + 1) * (d * k + e)));
        fold(r, compare(lhs, rhs, M, N));

        // ((xq^{n+1})^d - 1) t_beta_n = (q^{-n})^{dk+e} c_alpha[e]_n(xq).
        BiSeries tb = bare(TermKind::TBeta, p, n, at_x, M, N);
        lhs = tb.mul_monomial(x_pow(d, (n + 1) * d)).sub(tb);
        rhs = bare(TermKind::CAlpha, with_f(e), n, at_xq, M, N + n * (d * k + e))
                  .mul_monomial(q_pow(-n * (d * k + e)));
        fold(r, compare(lhs, rhs, M, N));
    }
    r.elapsed_ms = sw.ms();
    return r;
}

namespace {

// Pochhammer-count block of an iterated closed form.
struct IterBlock {
    Monomial poch_base;  // finite numerator Pochhammer base
    long poch_step = 1;
    long poch_count = 0;
    long den2_count = 0;   // ((xq^{n+1})^d; q^d)_count in the denominator
    long den3_count = 0;   // (xq^c; q^2)_count in the denominator
    Monomial den3_base;
};

// Common prefactor of the iterated closed forms:
//   (-1)^n x^{(dk+e)n} q^{(n^2+n)(dk+e) + d binom(n+1,2)} * blocks.
BiSeries iter_prefactor(const GordonParams& p, long n, const IterBlock& blk, long M, long N) {
    const long d = p.d, k = p.k, e = p.e;
    long qmain = (n * n + n) * (d * k + e) + d * binom2(n);
    BiSeries acc = BiSeries::from_monomial(
        Monomial{n % 2 == 0 ? +1 : -1, (d * k + e) * n, qmain}, M, N + qmain);
    acc = acc.mul(pochhammer(blk.poch_base, blk.poch_step, blk.poch_count, M, N));
    acc = acc.mul(pochhammer(q_pow(d), d, n, M, N).invert_unit());
    acc = acc.mul(pochhammer(x_pow(d, (n + 1) * d), d, blk.den2_count, M, N).invert_unit());
    acc = acc.mul(pochhammer(blk.den3_base, 2, blk.den3_count, M, N).invert_unit());
    return acc;
}

// Two-part bracket with denominator (1 - (xq)^d); parts are
// (prefix monomial) * (1 - (xq)^power) * q^{qshift}.  Exact to (M, N) given
// that every qshift is >= -pad.
struct IterBracketPart {
    Monomial prefix;
    long power = 0;
    long qshift = 0;
};

BiSeries iter_bracket(const std::vector<IterBracketPart>& parts, long d, long M, long N,
                      long pad) {
    BiSeries acc = BiSeries::zero(M, N);
    for (const auto& part : parts) {
        // power 0 gives the zero numerator (1 - (xq)^0), which the matching
        // identity relies on when d = e.
        BiSeries t = BiSeries::one_minus(x_pow(d, d), M, N + pad).invert_unit();
        t = t.mul(BiSeries::one_minus(x_pow(part.power, part.power), M, N + pad));
        t = t.mul_monomial(part.prefix.mul(q_pow(part.qshift)));
        acc = acc.add(t.truncated(M, N));
    }
    return acc;
}

} // namespace

CheckReport check_iterated_forms(const GordonParams& p, long n_max, long x_order, long q_order,
                                 CBetaBracket bracket) {
    Stopwatch sw;
    CheckReport r = make_report("iterated_forms", p, "", x_order, q_order, std::nullopt);
    const long d = p.d, e = p.e, f = p.f;
    const long M = x_order, N = q_order;
    const XSub at_x = XSub::keep(0);

    for (long n = 0; n <= n_max && r.pass; ++n) {
        const long pad = 2 * d * n;  // covers every q^{-...} shift below

        // t-alpha_n and t-beta_n through the base terms at x q^{2n}.
        IterBlock tblk{x_pow(d, 2 * d), 2 * d, n, n, n, x_pow(1, 2)};
        BiSeries pref = iter_prefactor(p, n, tblk, M, N);
        BiSeries rhs = pref.mul(bare(TermKind::TAlpha, p, 0, XSub::keep(2 * n), M, N));
        fold(r, compare(bare(TermKind::TAlpha, p, n, at_x, M, N), rhs.truncated(M, N), M, N));
        rhs = pref.mul(bare(TermKind::TBeta, p, 0, XSub::keep(2 * n), M, N));
        fold(r, compare(bare(TermKind::TBeta, p, n, at_x, M, N), rhs.truncated(M, N), M, N));

        if (n == 0) continue;  // the c-forms reference (...)_{n-1} blocks

        // c-alpha[f]_n = -pref * t-beta_0(x q^{2n-1}) * bracket.
        IterBlock cablk{x_pow(d, d), 2 * d, n, n - 1, n, x_pow(1, 1)};
        std::vector<IterBracketPart> parts;
        if (f < e)
            parts = {{Monomial{}, d + f - e, n * (f - e)},
                     {x_pow(d + f - e, d + f - e), e - f, n * (d + f - e)}};
        else if (f > e)
            parts = {{x_pow(f - e, f - e), d - f + e, n * (f - e)},
                     {Monomial{}, f - e, n * (f - d - e)}};
        BiSeries br = parts.empty() ? BiSeries::one(M, N + pad)
                                    : iter_bracket(parts, d, M, N + pad, pad);
        BiSeries capref = iter_prefactor(p, n, cablk, M, N + pad);
        BiSeries lhs = bare(TermKind::CAlpha, p, n, at_x, M, N, bracket);
        rhs = capref.mul(bare(TermKind::TBeta, p, 0, XSub::keep(2 * n - 1), M, N + pad))
                  .mul(br)
                  .negate();
        fold(r, compare(lhs, rhs.truncated(M, N), M, N));

        // c-beta[f]_n = -pref * t-alpha_0(x q^{2n+1}) * bracket.
        IterBlock cbblk{x_pow(d, d), 2 * d, n + 1, n + 1, n + 1, x_pow(1, 1)};
        if (f < e)
            parts = {{x_pow(e - f, e - f), d - e + f, n * (e - f)},
                     {Monomial{}, e - f, n * (e - d - f)}};
        else if (f > e)
            parts = {{Monomial{}, d - f + e, n * (e - f)},
                     {x_pow(d - f + e, d - f + e), f - e, n * (e - f + d)}};
        else
            parts.clear();
        br = parts.empty() ? BiSeries::one(M, N + pad)
                           : iter_bracket(parts, d, M, N + pad, pad);
        BiSeries cbpref = iter_prefactor(p, n, cbblk, M, N + pad);
        lhs = bare(TermKind::CBeta, p, n, at_x, M, N, bracket);
        rhs = cbpref.mul(bare(TermKind::TAlpha, p, 0, XSub::keep(2 * n + 1), M, N + pad))
                  .mul(br)
                  .negate();
        fold(r, compare(lhs, rhs.truncated(M, N), M, N));
    }
    r.elapsed_ms = sw.ms();
    return r;
}

CheckReport check_initial_conditions(const GordonParams& p, long n_max, long x_order,
                                     long q_order) {
    Stopwatch sw;
    CheckReport r = make_report("initial_conditions", p, "", x_order, q_order, std::nullopt);
    if (!p.valid_e()) r.expected_pass = false;  // the matching identity must fail
    const long d = p.d, e = p.e;
    const long M = x_order, N = q_order;

    // (i) t-alpha_0 equals its displayed product and is 1 at x = 0.
    BiSeries ta0 = bare(TermKind::TAlpha, p, 0, XSub::keep(0), M, N);
    BiSeries product = pochhammer(x_pow(d, 2 * d), 2 * d, kInfinite, M, N)
                           .mul(pochhammer(x_pow(d, d), d, kInfinite, M, N).invert_unit())
                           .mul(pochhammer(x_pow(1, 2), 2, kInfinite, M, N).invert_unit());
    fold(r, compare(ta0, product, M, N));
    BiSeries ta0_at0 = bare(TermKind::TAlpha, p, 0, XSub::zero(), 0, N);
    fold(r, compare(ta0_at0, BiSeries::one(0, N), 0, N));

    // (ii) t-beta_0 = -t-alpha_0.
    fold(r, compare(bare(TermKind::TBeta, p, 0, XSub::keep(0), M, N), ta0.negate(), M, N));

    // (iii) the matching identity between t-beta_0(xq^{2n-1}) and
    // t-alpha_0(xq^{2n+1}), which holds exactly when e = d or 2e = d.
    for (long n = 1; n <= n_max; ++n) {
        const long pad = n * d;
        std::vector<IterBracketPart> left = {{Monomial{}, d - e, -n * e},
                                             {x_pow(d - e, d - e), e, n * (d - e)}};
        std::vector<IterBracketPart> right = {{x_pow(e, e), d - e, n * e},
                                              {Monomial{}, e, n * (e - d)}};
        BiSeries lhs = bare(TermKind::TBeta, p, 0, XSub::keep(2 * n - 1), M, N + pad)
                           .mul(iter_bracket(left, d, M, N + pad, pad))
                           .truncated(M, N);
        BiSeries den = BiSeries::one_minus(x_pow(d, 2 * n * d), M, N + pad)
                           .mul(BiSeries::one_minus(x_pow(d, (2 * n + 1) * d), M, N + pad))
                           .mul(BiSeries::one_minus(x_pow(1, 2 * n + 1), M, N + pad));
        BiSeries rhs = bare(TermKind::TAlpha, p, 0, XSub::keep(2 * n + 1), M, N + pad)
                           .mul(BiSeries::one_minus(x_pow(d, (2 * n + 1) * d), M, N + pad))
                           .mul(den.invert_unit())
                           .mul(iter_bracket(right, d, M, N + pad, pad))
                           .negate();
        fold(r, compare(lhs, rhs.truncated(M, N), M, N));
        if (!r.pass) break;
    }
    r.elapsed_ms = sw.ms();
    return r;
}

CheckReport check_q_relations(long k, long a, long x_order, long q_order) {
    Stopwatch sw;
    GordonParams tag{1, k, 1, a, 1};
    CheckReport r = make_report("q_relations", tag, "", x_order, q_order, std::nullopt);
    const long M = x_order, N = q_order;
    const XSub at_x = XSub::keep(0);

    // Q_{k,a} - Q_{k,a-1} = (xq)^{a-1} Q_{k,k-a+1}(xq; q).
    BiSeries lhs = q_series(k, a, at_x, M, N).sub(q_series(k, a - 1, at_x, M, N));
    BiSeries rhs =
        q_series(k, k - a + 1, XSub::keep(1), M, N).mul_monomial(x_pow(a - 1, a - 1));
    fold(r, compare(lhs, rhs, M, N));

    // Q_{k,a}(0; q) = 1 and Q_{k,0} = 0.
    fold(r, compare(q_series(k, a, XSub::zero(), 0, N), BiSeries::one(0, N), 0, N));
    fold(r, compare(q_series(k, 0, at_x, M, N), BiSeries::zero(M, N), M, N));

    // Agreement with the d = 1 instance of the constructed series.
    if (k >= 2) {
        GordonParams p1{1, k - 1, 1, a - 1, 1};
        fold(r, compare(q_series(k, a, at_x, M, N), series_C(p1, at_x, M, N), M, N));
    }
    r.elapsed_ms = sw.ms();
    return r;
}

} // namespace qgordon
