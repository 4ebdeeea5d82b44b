#pragma once

#include "qgordon/report.hpp"

namespace qgordon {

/// Admissible e values for a given d (the theorem's validity domain).
std::vector<long> valid_e_values(long d);

/// Every valid (d, k, e, a, f) with d <= max_d, d <= k <= max_k, ordered by
/// (d, k, e, a, f).
std::vector<GordonParams> sweep_grid(long max_d, long max_k);

/// The smallest `count` tuples (in grid order) for a fixed d.
std::vector<GordonParams> smallest_tuples(long d, long max_k, size_t count);

/// Run the configured checks over the grid.  Results come back in a canonical
/// order independent of the worker count.
std::vector<CheckReport> run_sweep(const SuiteConfig& config);

} // namespace qgordon
