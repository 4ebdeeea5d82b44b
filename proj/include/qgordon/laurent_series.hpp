#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "qgordon/errors.hpp"

namespace qgordon {

/// Truncated formal Laurent series in q with exact integer coefficients.
///
/// A value represents a series known exactly for all exponents <= trunc_order();
/// nothing is claimed beyond that bound.  Exponents may be negative.  Storage is
/// dense with an offset (the exponent of the first stored coefficient) and is
/// kept normalized: the first and last stored coefficients are nonzero, and no
/// stored exponent exceeds the truncation order.  The zero series stores nothing
/// and has no valuation.
///
/// Truncation bookkeeping follows one rule everywhere: an operation declares
/// exactly the order to which its result is forced by the declared orders of its
/// operands.  In particular mul() declares min(Na + val(b), Nb + val(a)), which
/// keeps products of truncated series exact to their declared order even when
/// valuations are negative.
class LaurentSeries {
  public:
    /// The zero series, known to hold no terms up to `trunc`.
    explicit LaurentSeries(long trunc) : trunc_(trunc) {}

    /// c * q^exp, truncated at `trunc` (terms beyond the bound are dropped).
    LaurentSeries(mpz_class c, long exp, long trunc);

    /// Build from a dense coefficient window starting at exponent `offset`.
    LaurentSeries(std::vector<mpz_class> coeffs, long offset, long trunc);

    static LaurentSeries one(long trunc) { return LaurentSeries(1, 0, trunc); }

    long trunc_order() const { return trunc_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Smallest exponent with a nonzero coefficient; empty for the zero series.
    std::optional<long> valuation() const;

    /// Coefficient of q^exp.  Exponents above the truncation order are unknown;
    /// asking for them is a caller bug and asserts in debug builds.
    const mpz_class& coeff(long exp) const;

    LaurentSeries add(const LaurentSeries& other) const;
    LaurentSeries sub(const LaurentSeries& other) const;
    LaurentSeries negate() const;
    LaurentSeries mul(const LaurentSeries& other) const;

    /// Multiply by the exact monomial c * q^exp; the truncation order shifts
    /// with the exponent since monomial multiplication loses no information.
    LaurentSeries mul_monomial(const mpz_class& c, long exp) const;

    /// Multiplicative inverse.  Requires the lowest coefficient to be +-1
    /// (throws NotAUnit otherwise).  With valuation v and truncation N the
    /// inverse is exact to N - 2v, so that mul(s, invert_unit(s)) == 1 holds
    /// to the guard-adjusted order N - v.
    LaurentSeries invert_unit() const;

    /// Re-declare a lower truncation order, dropping terms beyond it.
    LaurentSeries truncated(long trunc) const;

    /// Structural equality: same truncation order and same terms.
    bool operator==(const LaurentSeries& other) const;

    /// Human-readable polynomial form, e.g. "1 - q - q^2 + q^5".
    std::string str() const;

    LaurentSeries operator+(const LaurentSeries& o) const { return add(o); }
    LaurentSeries operator-(const LaurentSeries& o) const { return sub(o); }
    LaurentSeries operator-() const { return negate(); }
    LaurentSeries operator*(const LaurentSeries& o) const { return mul(o); }

  private:
    void normalize();

    long trunc_;
    long offset_ = 0;                 // exponent of coeffs_[0]
    std::vector<mpz_class> coeffs_;   // normalized dense window
};

/// First coefficient disagreement between two series, scanning exponents in
/// increasing order up to `order` (inclusive).  Both operands must be declared
/// exact at least to `order`; anything else is a windowing bug and throws
/// std::logic_error.
struct CoeffMismatch {
    long q_exp;
    mpz_class lhs;
    mpz_class rhs;
};
std::optional<CoeffMismatch> first_mismatch(const LaurentSeries& a, const LaurentSeries& b,
                                            long order);

} // namespace qgordon
