#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgordon/laurent_series.hpp"

namespace qgordon {

/// Signed monomial sign * x^xdeg * q^qdeg.  The building block for Pochhammer
/// factors, attached-term prefactors and substitution specifications; x-degree
/// is never negative, q-degree may be (powers of q^-n occur throughout).
struct Monomial {
    int sign = +1;  // +1 or -1
    long xdeg = 0;
    long qdeg = 0;

    Monomial mul(const Monomial& o) const {
        return Monomial{sign * o.sign, xdeg + o.xdeg, qdeg + o.qdeg};
    }
    Monomial pow(long n) const {
        return Monomial{(n % 2 == 0) ? +1 : sign, xdeg * n, qdeg * n};
    }
    bool operator==(const Monomial& o) const = default;
};

inline Monomial x_pow(long p, long j = 0) { return Monomial{+1, p, j}; }
inline Monomial q_pow(long j) { return Monomial{+1, 0, j}; }

/// Truncated series in x whose coefficients are truncated Laurent series in q.
/// Entry m holds the coefficient of x^m for m = 0..x_trunc(); every entry is
/// declared exact to the shared q truncation order.  Entries at x-degrees
/// beyond x_trunc() are unknown, not zero.
class BiSeries {
  public:
    BiSeries(long x_trunc, long q_trunc);

    static BiSeries zero(long x_trunc, long q_trunc) { return BiSeries(x_trunc, q_trunc); }
    static BiSeries one(long x_trunc, long q_trunc);
    static BiSeries from_monomial(const Monomial& m, long x_trunc, long q_trunc);
    /// 1 - m, the canonical Pochhammer factor shape.
    static BiSeries one_minus(const Monomial& m, long x_trunc, long q_trunc);
    static BiSeries from_laurent(const LaurentSeries& s, long x_trunc);
    /// Adopt per-x-degree entries; the q truncation becomes the minimum of the
    /// entries' truncation orders.
    static BiSeries from_entries(std::vector<LaurentSeries> entries);

    long x_trunc() const { return x_trunc_; }
    long q_trunc() const { return q_trunc_; }
    bool is_zero() const;

    /// Smallest x-degree with a nonzero entry.
    std::optional<long> x_valuation() const;
    /// Smallest q-exponent over all entries.
    std::optional<long> q_valuation() const;

    const LaurentSeries& entry(long m) const;
    const mpz_class& coeff(long m, long e) const { return entry(m).coeff(e); }

    BiSeries add(const BiSeries& other) const;
    BiSeries sub(const BiSeries& other) const;
    BiSeries negate() const;

    /// Cauchy product.  q truncation follows the same guard rule as the
    /// univariate mul; x truncation is min(Ma + xval(b), Mb + xval(a)) capped
    /// at the larger working window.
    BiSeries mul(const BiSeries& other) const;

    /// Exact multiplication by a monomial: shifts both truncations.
    BiSeries mul_monomial(const Monomial& m) const;
    BiSeries mul_scalar(const mpz_class& c) const;

    /// Inverse of a series whose lowest term in the (x-degree, q-valuation)
    /// grading is a unit; throws NotAUnit otherwise.
    BiSeries invert_unit() const;

    BiSeries truncated(long x_trunc, long q_trunc) const;

    /// Substitute x -> q^c and sum.  Declared exact to
    /// min(q_trunc, (c+1)*(x_trunc+1) - 1) under the partition-series
    /// certificate that the entry at x-degree m has q-valuation >= m; the
    /// certificate is checked on stored entries and assumed for the unknown
    /// tail.  c = 0 with a failing certificate throws UnsafeEvaluation.
    LaurentSeries evaluate_x(long c) const;

    bool operator==(const BiSeries& other) const;
    std::string str() const;

    BiSeries operator+(const BiSeries& o) const { return add(o); }
    BiSeries operator-(const BiSeries& o) const { return sub(o); }
    BiSeries operator-() const { return negate(); }
    BiSeries operator*(const BiSeries& o) const { return mul(o); }

  private:
    void set_entry(long m, LaurentSeries s);
    void unify_truncs();

    long x_trunc_;
    long q_trunc_;
    std::vector<LaurentSeries> entries_;
};

/// First coefficient disagreement in (x-degree, q-exponent) lexicographic
/// order, scanning x-degrees 0..x_order and q-exponents up to q_order.
struct BiMismatch {
    long x_deg;
    long q_exp;
    mpz_class lhs;
    mpz_class rhs;
};
std::optional<BiMismatch> first_mismatch(const BiSeries& a, const BiSeries& b, long x_order,
                                         long q_order);

} // namespace qgordon
