#pragma once

#include <vector>

#include "qgordon/check_report.hpp"

namespace qgordon {

/// Square matrix of monomial (or zero) series entries, as in the displayed
/// d x d systems of the construction.
struct MonomialMatrix {
    long size = 0;
    std::vector<std::vector<BiSeries>> entries;

    static MonomialMatrix zero(long size, long x_trunc, long q_trunc);
    MonomialMatrix mul(const MonomialMatrix& other) const;
};

enum class MatrixFamily { Alpha, Beta };

/// Multiply the displayed d x d system matrix by its claimed inverse stripped
/// of the scalar prefactor, and compare against (1 - q^{dn}) I (alpha family)
/// or ((x q^{n+1})^d - 1) I (beta family).  Division-free.
CheckReport check_matrix_adjugate(long d, long e, long n, MatrixFamily which, long x_order,
                                  long q_order);

/// The four one-step relations obtained after simplification, as exact series
/// identities for 1 <= n <= n_max.
CheckReport check_simplified_recurrences(const GordonParams& p, long n_max, long x_order,
                                         long q_order);

/// The iterated closed forms, expressing the n-th terms through the base terms
/// at shifted arguments, against the series definitions for n <= n_max.
CheckReport check_iterated_forms(const GordonParams& p, long n_max, long x_order, long q_order,
                                 CBetaBracket bracket = CBetaBracket::IteratedForm);

/// Base-term product shape, the sign relation between the two base terms, and
/// the curly-brace matching identity for n <= n_max.  For a relaxed e outside
/// {d, d/2} the matching identity is expected to fail and the report says so.
CheckReport check_initial_conditions(const GordonParams& p, long n_max, long x_order,
                                     long q_order);

/// d = 1 reduction: the Q-series recurrence Q_{k,a} - Q_{k,a-1} =
/// (xq)^{a-1} Q_{k,k-a+1}(xq; q), its boundary values, and agreement of
/// Q_{k,a} with the d = 1 instance of the constructed series.
CheckReport check_q_relations(long k, long a, long x_order, long q_order);

} // namespace qgordon
