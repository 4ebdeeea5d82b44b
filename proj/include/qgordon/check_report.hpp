#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgordon/biseries.hpp"
#include "qgordon/gordon_series.hpp"

namespace qgordon {

/// Structured result of one exact-comparison check.  A FAIL always carries the
/// first mismatch in (x-degree, q-exponent) lexicographic order; a PASS never
/// does.  `expected_pass` is false for negative controls, whose observed FAIL
/// is the desired outcome.
struct CheckReport {
    std::string check_id;
    GordonParams params{};
    std::string variant;  // "even", "odd", a legacy theorem tag, or ""
    long order_m = 0;
    long order_n = 0;
    bool pass = true;
    std::optional<BiMismatch> mismatch;
    bool expected_pass = true;
    long elapsed_ms = 0;

    bool as_expected() const { return pass == expected_pass; }
};

/// Build a report from a comparison outcome.
CheckReport make_report(std::string check_id, const GordonParams& p, std::string variant,
                        long order_m, long order_n, std::optional<BiMismatch> mismatch);

/// Compare two bivariate series over the full requested window.
std::optional<BiMismatch> compare(const BiSeries& lhs, const BiSeries& rhs, long x_order,
                                  long q_order);
/// Compare two univariate series (mismatches report x-degree 0).
std::optional<BiMismatch> compare(const LaurentSeries& lhs, const LaurentSeries& rhs,
                                  long q_order);

/// Merge a partial comparison result into an accumulating report, keeping the
/// lexicographically first mismatch encountered.
void fold(CheckReport& report, const std::optional<BiMismatch>& mismatch);

} // namespace qgordon
