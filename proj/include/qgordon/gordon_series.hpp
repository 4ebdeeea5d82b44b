#pragma once

#include <optional>

#include "qgordon/biseries.hpp"
#include "qgordon/q_products.hpp"

namespace qgordon {

/// Parameter tuple (d, k, e, a, f) of the all-moduli identities.  The strict
/// domain is 1 <= a, d <= k, 1 <= f <= d and e = d or 2e = d; the relaxed
/// domain admits any 1 <= e <= d and is used only by the negative controls.
struct GordonParams {
    long d = 1;
    long k = 1;
    long e = 1;
    long a = 1;
    long f = 1;

    void validate() const;          // throws ParamDomain outside the strict domain
    void validate_relaxed() const;  // throws ParamDomain outside the relaxed domain
    bool valid_e() const { return e == d || 2 * e == d; }

    long pair_bound() const { return d * k + e; }       // K in f_i + f_{i+1} < K
    long even_initial_bound() const { return d * a + f; }
    long odd_initial_bound() const { return d * a; }
    long product_modulus() const { return 2 * d * k + 2 * e + d; }
};

/// The four term families attached to the series (the two alphas carry a
/// (q^-n)^E factor, the two betas an (x q^{n+1})^E factor).
enum class TermKind { CAlpha, CBeta, TAlpha, TBeta };

/// Substitution applied to x at the monomial level, before any expansion.
struct XSub {
    enum class Mode { Keep, Collapse, Zero };
    Mode mode = Mode::Keep;
    long shift = 0;

    static XSub keep(long c = 0) { return {Mode::Keep, c}; }      // x -> x q^c
    static XSub collapse(long c) { return {Mode::Collapse, c}; }  // x -> q^c
    static XSub zero() { return {Mode::Zero, 0}; }                // x -> 0
};

/// The two candidate readings of the c_beta[f<e] bracket: the one printed with
/// the series definitions (two equal numerators) and the one obtained from the
/// iterated construction (first numerator (xq)^{e-f} - (xq)^d).  The verifier
/// arbitrates between them; IteratedForm is the arbitrated default.
enum class CBetaBracket { SeriesDisplay, IteratedForm };

/// Full attached n-th term of the series families.  `family_f` is the bracket
/// residue class (0 is an alias for d); `attached_exp` is the exponent E of the
/// attached factor and defaults to d*a + family (C kinds) or d*a (T kinds).
/// The substitution is applied to every monomial before expansion, so the
/// result is exact to the (x_trunc, q_trunc) window.
BiSeries build_term(TermKind kind, const GordonParams& p, long n,
                    std::optional<long> attached_exp, XSub xs, long x_trunc, long q_trunc,
                    CBetaBracket bracket = CBetaBracket::IteratedForm);

/// Valuation lower bound of the attached terms at summation index n; the
/// series sums terms while this bound stays within the q window.
long term_valuation_bound(const GordonParams& p, long n);

/// The series C_{dk+e, da+f}(x; q) (sum of attached c-alpha and c-beta terms).
/// f = 0 (with the exponent d*a) is accepted as the boundary instance.
BiSeries series_C(const GordonParams& p, XSub xs, long x_trunc, long q_trunc,
                  CBetaBracket bracket = CBetaBracket::IteratedForm);

/// The series T_{dk+e, da}(x; q) (sum of attached t-alpha and t-beta terms).
BiSeries series_T(const GordonParams& p, XSub xs, long x_trunc, long q_trunc);

enum class ProductVariant { Even, OddOverline };

/// The product side of the main theorem: the f-case combination of triple
/// products over (q^{2d}; q^{2d}) (q; q^2) for the even-divisibility family, or
/// the single triple product over (q^d; q^{2d}) (q^2; q^2) for the overline
/// family.  Triple products are built by either route (cross-checked by the
/// verifier).
LaurentSeries product_rhs(const GordonParams& p, ProductVariant variant, long q_trunc,
                          ProductRoute route = ProductRoute::Theta);

enum class LegacyTheorem { T2_1, T2_2, T2_2_Overline, T2_3 };

/// Right-hand sides of the classical theorems (Gordon; Andrews' parity pair;
/// Kim-Yee).  Enforces the theorem-specific parameter congruences.
LaurentSeries legacy_rhs(LegacyTheorem theorem, long k, long a, long q_trunc);

/// Andrews' Q_{k,a}(x; q), built from its own alpha/beta terms.
BiSeries q_series(long k, long a, XSub xs, long x_trunc, long q_trunc);

} // namespace qgordon
