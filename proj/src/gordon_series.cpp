#include "qgordon/gordon_series.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace qgordon {

void GordonParams::validate() const {
    validate_relaxed();
    if (!valid_e())
        throw ParamDomain("e must equal d or d/2, got e=" + std::to_string(e) +
                          " d=" + std::to_string(d));
}

void GordonParams::validate_relaxed() const {
    if (d < 1 || k < 1 || d > k)
        throw ParamDomain("need 1 <= d <= k, got d=" + std::to_string(d) +
                          " k=" + std::to_string(k));
    if (a < 1 || a > k)
        throw ParamDomain("need 1 <= a <= k, got a=" + std::to_string(a));
    if (f < 1 || f > d)
        throw ParamDomain("need 1 <= f <= d, got f=" + std::to_string(f));
    if (e < 1 || e > d)
        throw ParamDomain("need 1 <= e <= d, got e=" + std::to_string(e));
}

namespace {

struct Factor {
    Monomial base;  // factor chain (1 - base q^{step*i}), i = 0..count-1
    long step = 1;
    std::optional<long> count = 1;
    bool inverted = false;
};

// One summand of a term: sign * prefactor * product of factors.  Prefactors
// absorb the attached monomial and any q^{+-nd} bracket shift, so the factor
// product always has x- and q-valuation zero and can be expanded in a window
// shrunk by the prefactor degrees.
struct TermSpec {
    int sign = +1;
    Monomial pref{+1, 0, 0};
    std::vector<Factor> factors;
    bool vanished = false;  // x -> 0 killed the summand

    void mul_pref(const Monomial& m) {
        if (vanished) return;
        pref = pref.mul(m);
    }
    void push(Factor fa) {
        if (vanished) return;
        factors.push_back(std::move(fa));
    }
};

Monomial subst(const Monomial& m, const XSub& xs) {
    switch (xs.mode) {
        case XSub::Mode::Keep:
            return Monomial{m.sign, m.xdeg, m.qdeg + xs.shift * m.xdeg};
        case XSub::Mode::Collapse:
            return Monomial{m.sign, 0, m.qdeg + xs.shift * m.xdeg};
        case XSub::Mode::Zero:
            return m;  // handled by the callers below
    }
    return m;
}

// Apply the substitution to a prefactor monomial; x -> 0 with positive x-degree
// kills the summand.
void apply_pref(TermSpec& ts, const Monomial& m, const XSub& xs) {
    if (xs.mode == XSub::Mode::Zero && m.xdeg > 0) {
        ts.vanished = true;
        return;
    }
    ts.mul_pref(subst(m, xs));
}

// Apply the substitution to a factor; x -> 0 turns x-carrying factors into 1.
void apply_factor(TermSpec& ts, Factor fa, const XSub& xs) {
    if (xs.mode == XSub::Mode::Zero && fa.base.xdeg > 0) return;
    fa.base = subst(fa.base, xs);
    ts.push(std::move(fa));
}

BiSeries expand(const TermSpec& ts, long x_trunc, long q_trunc) {
    BiSeries zero = BiSeries::zero(x_trunc, q_trunc);
    if (ts.vanished) return zero;
    long mx = x_trunc - ts.pref.xdeg;
    long nq = q_trunc - ts.pref.qdeg;
    if (mx < 0 || nq < 0) return zero;  // factor product has valuation >= 0
    BiSeries num = BiSeries::one(mx, nq);
    BiSeries den = BiSeries::one(mx, nq);
    for (const auto& fa : ts.factors) {
        assert(fa.base.qdeg >= 0 && fa.base.xdeg >= 0);
        BiSeries p = pochhammer(fa.base, fa.step, fa.count, mx, nq);
        (fa.inverted ? den : num) = (fa.inverted ? den : num).mul(p);
    }
    BiSeries res = num.mul(den.invert_unit());
    Monomial shift{ts.sign * ts.pref.sign, ts.pref.xdeg, ts.pref.qdeg};
    res = res.mul_monomial(shift);
    if (res.x_trunc() != x_trunc || res.q_trunc() != q_trunc)
        throw std::logic_error("term expansion lost its window");
    return res;
}

long binom2(long n) { return n * (n + 1) / 2; }

// Shared infinite-product block of the c-alpha / c-beta families.
void c_common_factors(TermSpec& ts, const GordonParams& p, long n, const XSub& xs) {
    apply_factor(ts, Factor{x_pow(p.d, p.d), 2 * p.d, kInfinite, false}, xs);      // ((xq)^d; q^2d)
    apply_factor(ts, Factor{q_pow(p.d), p.d, n, true}, xs);                        // (q^d; q^d)_n
    apply_factor(ts, Factor{x_pow(p.d, (n + 1) * p.d), p.d, kInfinite, true}, xs); // ((xq^{n+1})^d; q^d)
    apply_factor(ts, Factor{x_pow(1, 1), 2, kInfinite, true}, xs);                 // (xq; q^2)
}

// Shared infinite-product block of the t-alpha / t-beta families.
void t_common_factors(TermSpec& ts, const GordonParams& p, long n, const XSub& xs) {
    apply_factor(ts, Factor{x_pow(p.d, 2 * p.d), 2 * p.d, kInfinite, false}, xs);  // ((xq^2)^d; q^2d)
    apply_factor(ts, Factor{q_pow(p.d), p.d, n, true}, xs);                        // (q^d; q^d)_n
    apply_factor(ts, Factor{x_pow(p.d, (n + 1) * p.d), p.d, kInfinite, true}, xs); // ((xq^{n+1})^d; q^d)
    apply_factor(ts, Factor{x_pow(1, 2), 2, kInfinite, true}, xs);                 // (xq^2; q^2)
}

// Bracket summand: optional monomial numerator prefix, numerator binomial
// (1 - (xq)^g), shift q^{sigma n d}, all over (1 - (xq)^d).
struct BracketPart {
    Monomial num_prefix{+1, 0, 0};
    long num_power = 0;  // g in (1 - (xq)^g); 0 means no binomial
    long qshift = 0;
};

std::vector<BracketPart> bracket_parts(TermKind kind, const GordonParams& p, long family,
                                       long n, CBetaBracket bracket) {
    const long d = p.d, e = p.e, f = family;
    std::vector<BracketPart> out;
    if (kind == TermKind::TAlpha || kind == TermKind::TBeta || f == e) return out;
    auto y = [](long g) { return x_pow(g, g); };  // (xq)^g
    if (kind == TermKind::CAlpha) {
        if (f < e) {
            out.push_back({Monomial{}, d + f - e, 0});
            out.push_back({y(d + f - e), e - f, n * d});
        } else {
            out.push_back({y(f - e), d - f + e, 0});
            out.push_back({Monomial{}, f - e, -n * d});
        }
    } else {  // CBeta
        if (f < e) {
            if (bracket == CBetaBracket::SeriesDisplay)
                out.push_back({Monomial{}, e - f, 0});
            else
                out.push_back({y(e - f), d - e + f, 0});
            out.push_back({Monomial{}, e - f, -n * d});
        } else {
            out.push_back({Monomial{}, d - f + e, 0});
            out.push_back({y(d - f + e), f - e, n * d});
        }
    }
    return out;
}

} // namespace

BiSeries build_term(TermKind kind, const GordonParams& p, long n,
                    std::optional<long> attached_exp, XSub xs, long x_trunc, long q_trunc,
                    CBetaBracket bracket) {
    assert(n >= 0);
    long family = p.f % p.d;  // f is a residue class mod d
    if (family == 0) family = p.d;
    assert(family >= 1 && family <= p.d);
    const bool is_c = (kind == TermKind::CAlpha || kind == TermKind::CBeta);
    const long E =
        attached_exp.value_or(is_c ? p.d * p.a + p.f : p.d * p.a);

    TermSpec base;
    base.sign = (n % 2 == 0) ? +1 : -1;
    if (kind == TermKind::CBeta || kind == TermKind::TBeta) base.sign = -base.sign;

    // Main monomial prefactor x^{(dk+e)n} q^{(2dk+2e+d) binom(n+1,2) + ...}.
    long qmain = p.product_modulus() * binom2(n);
    if (kind == TermKind::CAlpha) qmain += n * (family - p.e);
    if (kind == TermKind::CBeta) qmain += n * (p.e - family);
    apply_pref(base, x_pow((p.d * p.k + p.e) * n, qmain), xs);

    // Attached factor (q^{-n})^E or (x q^{n+1})^E.
    if (kind == TermKind::CAlpha || kind == TermKind::TAlpha)
        apply_pref(base, q_pow(-n * E), xs);
    else
        apply_pref(base, x_pow(E, (n + 1) * E), xs);

    if (is_c)
        c_common_factors(base, p, n, xs);
    else
        t_common_factors(base, p, n, xs);

    auto parts = bracket_parts(kind, p, family, n, bracket);
    if (parts.empty()) return expand(base, x_trunc, q_trunc);

    BiSeries acc = BiSeries::zero(x_trunc, q_trunc);
    for (const auto& part : parts) {
        TermSpec ts = base;
        apply_pref(ts, part.num_prefix.mul(q_pow(part.qshift)), xs);
        if (part.num_power > 0)
            apply_factor(ts, Factor{x_pow(part.num_power, part.num_power), 1, 1, false}, xs);
        apply_factor(ts, Factor{x_pow(p.d, p.d), 1, 1, true}, xs);  // 1/(1 - (xq)^d)
        acc = acc.add(expand(ts, x_trunc, q_trunc));
    }
    return acc;
}

long term_valuation_bound(const GordonParams& p, long n) {
    long spread = std::max(p.d, std::abs(p.e - p.f));
    return p.product_modulus() * binom2(n) - n * (p.d * p.k + p.e) - n * spread;
}

namespace {

BiSeries sum_terms(TermKind alpha, TermKind beta, const GordonParams& p, long E, XSub xs,
                   long x_trunc, long q_trunc, CBetaBracket bracket) {
    BiSeries acc = BiSeries::zero(x_trunc, q_trunc);
    for (long n = 0; term_valuation_bound(p, n) <= q_trunc; ++n) {
        BiSeries ta = build_term(alpha, p, n, E, xs, x_trunc, q_trunc, bracket);
        BiSeries tb = build_term(beta, p, n, E, xs, x_trunc, q_trunc, bracket);
        for (const BiSeries* t : {&ta, &tb}) {
            auto v = t->q_valuation();
            if (v && *v < term_valuation_bound(p, n))
                throw std::logic_error("attached term dips below its valuation bound");
        }
        acc = acc.add(ta).add(tb);
    }
    return acc;
}

} // namespace

BiSeries series_C(const GordonParams& p, XSub xs, long x_trunc, long q_trunc,
                  CBetaBracket bracket) {
    assert(p.f >= 0 && p.f <= p.d);
    long E = p.d * p.a + p.f;
    return sum_terms(TermKind::CAlpha, TermKind::CBeta, p, E, xs, x_trunc, q_trunc, bracket);
}

BiSeries series_T(const GordonParams& p, XSub xs, long x_trunc, long q_trunc) {
    long E = p.d * p.a;
    return sum_terms(TermKind::TAlpha, TermKind::TBeta, p, E, xs, x_trunc, q_trunc,
                     CBetaBracket::IteratedForm);
}

LaurentSeries product_rhs(const GordonParams& p, ProductVariant variant, long q_trunc,
                          ProductRoute route) {
    const long N = q_trunc;
    const long mod = p.product_modulus();
    auto tp = [&](long exp) { return triple_product(exp, mod, N, route); };

    if (variant == ProductVariant::OddOverline) {
        LaurentSeries pre = pochhammer_q(q_pow(p.d), 2 * p.d, kInfinite, N)
                                .mul(pochhammer_q(q_pow(2), 2, kInfinite, N))
                                .invert_unit();
        return pre.mul(tp(p.d * p.a)).truncated(N);
    }

    LaurentSeries pre = pochhammer_q(q_pow(2 * p.d), 2 * p.d, kInfinite, N)
                            .mul(pochhammer_q(q_pow(1), 2, kInfinite, N))
                            .invert_unit();
    if (p.f == p.e) return pre.mul(tp(p.d * p.a + p.e)).truncated(N);

    LaurentSeries invd = pochhammer_q(q_pow(p.d), 1, 1, N).invert_unit();  // 1/(1-q^d)
    LaurentSeries combo(N);
    if (p.f < p.e) {
        // (1 - q^{d-e+f}) TP(da+e) + q^{d-e+f} (1 - q^{e-f}) TP(d(a-1)+e)
        combo = pochhammer_q(q_pow(p.d - p.e + p.f), 1, 1, N).mul(tp(p.d * p.a + p.e));
        combo = combo.add(pochhammer_q(q_pow(p.e - p.f), 1, 1, N)
                              .mul_monomial(1, p.d - p.e + p.f)
                              .mul(tp(p.d * (p.a - 1) + p.e)));
    } else {
        // q^{f-e} (1 - q^{d-f+e}) TP(da+e) + (1 - q^{f-e}) TP(d(a+1)+e)
        combo = pochhammer_q(q_pow(p.d - p.f + p.e), 1, 1, N)
                    .mul_monomial(1, p.f - p.e)
                    .mul(tp(p.d * p.a + p.e));
        combo = combo.add(pochhammer_q(q_pow(p.f - p.e), 1, 1, N).mul(tp(p.d * (p.a + 1) + p.e)));
    }
    return pre.mul(invd).mul(combo).truncated(N);
}

LaurentSeries legacy_rhs(LegacyTheorem theorem, long k, long a, long q_trunc) {
    const long N = q_trunc;
    if (k < 1 || a < 1 || a > k)
        throw ParamDomain("need 1 <= a <= k, got k=" + std::to_string(k) +
                          " a=" + std::to_string(a));
    const Monomial minus_q{-1, 0, 1};  // (-q; q^2) factors
    switch (theorem) {
        case LegacyTheorem::T2_1: {
            LaurentSeries inv = pochhammer_q(q_pow(1), 1, kInfinite, N).invert_unit();
            return inv.mul(triple_product(a, 2 * k + 1, N)).truncated(N);
        }
        case LegacyTheorem::T2_2: {
            if ((a - k) % 2 != 0)
                throw ParamDomain("parity theorem needs a == k (mod 2)");
            LaurentSeries pre = pochhammer_q(minus_q, 2, kInfinite, N)
                                    .mul(pochhammer_q(q_pow(2), 2, kInfinite, N).invert_unit());
            return pre.mul(triple_product(a, 2 * k + 2, N)).truncated(N);
        }
        case LegacyTheorem::T2_2_Overline: {
            if (k % 2 != 1 || a % 2 != 0)
                throw ParamDomain("overline parity theorem needs k odd, a even");
            LaurentSeries pre = pochhammer_q(minus_q, 2, kInfinite, N)
                                    .mul(pochhammer_q(q_pow(1), 1, kInfinite, N))
                                    .invert_unit();
            return pre.mul(triple_product(a, 2 * k + 2, N)).truncated(N);
        }
        case LegacyTheorem::T2_3: {
            if ((a - k) % 2 == 0)
                throw ParamDomain("missing-case theorem needs a != k (mod 2)");
            LaurentSeries pre = pochhammer_q(minus_q, 2, kInfinite, N)
                                    .mul(pochhammer_q(q_pow(2), 2, kInfinite, N).invert_unit())
                                    .mul(pochhammer_q(minus_q, 1, 1, N).invert_unit());
            LaurentSeries combo = triple_product(a + 1, 2 * k + 2, N)
                                      .add(triple_product(a - 1, 2 * k + 2, N).mul_monomial(1, 1));
            return pre.mul(combo).truncated(N);
        }
    }
    throw std::logic_error("unreachable");
}

BiSeries q_series(long k, long a, XSub xs, long x_trunc, long q_trunc) {
    if (k < 1 || a < 0 || a > k)
        throw ParamDomain("Q series needs 1 <= k and 0 <= a <= k");
    BiSeries acc = BiSeries::zero(x_trunc, q_trunc);
    for (long n = 0; (2 * k + 1) * binom2(n) - n * a <= q_trunc; ++n) {
        for (int beta = 0; beta < 2; ++beta) {
            TermSpec ts;
            ts.sign = ((n % 2 == 0) ? +1 : -1) * (beta ? -1 : +1);
            apply_pref(ts, x_pow(k * n, (2 * k + 1) * binom2(n)), xs);
            if (beta)
                apply_pref(ts, x_pow(a, (n + 1) * a), xs);  // (x q^{n+1})^a
            else
                apply_pref(ts, q_pow(-n * a), xs);  // (q^{-n})^a
            apply_factor(ts, Factor{q_pow(1), 1, n, true}, xs);            // (q; q)_n
            apply_factor(ts, Factor{x_pow(1, n + 1), 1, kInfinite, true},  // (xq^{n+1}; q)
                         xs);
            acc = acc.add(expand(ts, x_trunc, q_trunc));
        }
    }
    return acc;
}

} // namespace qgordon
