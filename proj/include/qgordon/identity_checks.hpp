#pragma once

#include "qgordon/check_report.hpp"
#include "qgordon/partition_count.hpp"

namespace qgordon {

/// Constraint set of the even-divisibility family: f_i + f_{i+1} < dk+e,
/// f_1 < da+f, d | f_{2i}.
ConstraintSet even_constraints(const GordonParams& p);
/// Constraint set of the overline family: f_1 < da, d | f_{2i+1}.
ConstraintSet odd_constraints(const GordonParams& p);

/// Bivariate comparison of the partition-count generating function against the
/// constructed series (C for the even variant, T for the overline one).
CheckReport check_counts_vs_series(const GordonParams& p, ProductVariant variant, long x_order,
                                   long q_order,
                                   CBetaBracket bracket = CBetaBracket::IteratedForm);

/// Univariate comparison of the counted side (DP summed over the number of
/// parts) against the theorem's product side.
CheckReport check_theorem(const GordonParams& p, ProductVariant variant, long q_order);

/// The two count recurrences and four boundary conditions, verified on
/// brute-force counts for all m, n <= n_max.
CheckReport check_count_recurrences(const GordonParams& p, long n_max);

/// Series-level functional equations, the four term-level delta identities for
/// n <= n_max, and the termwise cancellation at index zero.
CheckReport check_functional_eqs(const GordonParams& p, long x_order, long q_order, long n_max,
                                 CBetaBracket bracket = CBetaBracket::IteratedForm);

/// Gordon / parity / missing-case theorems: counted side vs legacy_rhs, plus
/// the d=2 (d=1 for Gordon) reduction of product_rhs against legacy_rhs.
CheckReport check_legacy(LegacyTheorem theorem, long k, long a, long q_order);

/// theta_sum against the triple product expanded as Pochhammer products.
CheckReport check_jtp(long exponent_a, long modulus, long q_order);

/// Negative control: the theorem comparison at a relaxed e, which the source
/// asserts must fail.  The report's expected_pass is false.
CheckReport negative_control(const GordonParams& p, long q_order);

/// Decide which c_beta[f<e] bracket candidate satisfies the checks at the
/// given parameters (which must have a nonempty f<e case).  Returns the
/// candidate for which both the term identities and the count comparison pass,
/// or nullopt if neither or both pass.
std::optional<CBetaBracket> arbitrate_bracket(const GordonParams& p, long x_order,
                                              long q_order, long n_max);

} // namespace qgordon
