#pragma once

#include <set>
#include <string>
#include <vector>

#include "qgordon/check_report.hpp"

namespace qgordon {

/// Sweep configuration and output options.
struct SuiteConfig {
    long max_d = 4;
    long max_k = 4;
    long order_n = 50;       // q order for univariate theorem comparisons
    long order_m = 30;       // (M, N) order for bivariate comparisons
    long n_max_terms = 6;    // depth of the term-level identity checks
    std::set<std::string> checks;  // empty selects every check
    enum class Output { Text, Json } output = Output::Text;
    int parallel = 1;
    bool no_timing = false;  // zero every elapsed field (golden-file mode)

    void validate() const;  // throws ParamDomain
};

/// Serialize reports to the stable JSON schema.  Byte-identical for identical
/// inputs; elapsed fields are zeroed when no_timing is set.
std::string render_json(const std::vector<CheckReport>& reports, const SuiteConfig& config);

/// Aligned one-row-per-check table with a summary trailer.
std::string render_text(const std::vector<CheckReport>& reports, const SuiteConfig& config);

/// Accounting: pass counts checks whose status matches the expectation, fail
/// counts raw failures, unexpected counts mismatches against expectation.
struct Summary {
    long pass = 0;
    long fail = 0;
    long unexpected = 0;
};
Summary summarize(const std::vector<CheckReport>& reports);

/// 0 when every check behaved as expected, 1 otherwise.
int exit_code(const std::vector<CheckReport>& reports);

} // namespace qgordon
