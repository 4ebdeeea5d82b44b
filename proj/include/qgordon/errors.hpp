#pragma once

#include <stdexcept>
#include <string>

namespace qgordon {

/// Inversion was requested for a series whose lowest coefficient is not +-1.
struct NotAUnit : std::domain_error {
    explicit NotAUnit(const std::string& what) : std::domain_error(what) {}
};

/// An infinite product whose factors never leave the truncation window.
struct DivergentProduct : std::domain_error {
    explicit DivergentProduct(const std::string& what) : std::domain_error(what) {}
};

/// A bilateral theta sum whose tails do not both truncate.
struct NonTruncating : std::domain_error {
    explicit NonTruncating(const std::string& what) : std::domain_error(what) {}
};

/// x -> 1 substitution on a series without the q-valuation certificate.
struct UnsafeEvaluation : std::domain_error {
    explicit UnsafeEvaluation(const std::string& what) : std::domain_error(what) {}
};

/// Parameters outside the domain of the requested identity or theorem.
struct ParamDomain : std::invalid_argument {
    explicit ParamDomain(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qgordon
