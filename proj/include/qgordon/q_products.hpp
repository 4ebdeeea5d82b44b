#pragma once

#include <optional>

#include "qgordon/biseries.hpp"
#include "qgordon/laurent_series.hpp"

namespace qgordon {

/// Marker for infinite Pochhammer products.
inline constexpr std::optional<long> kInfinite = std::nullopt;

/// (a; q^step)_count = prod_{i=0}^{count-1} (1 - a * q^{step*i}), exact to the
/// (M, N) window.  For an infinite count the product stops once a factor's
/// monomial leaves the window; step <= 0 with an infinite count throws
/// DivergentProduct.
BiSeries pochhammer(const Monomial& a, long step, std::optional<long> count, long x_trunc,
                    long q_trunc);

/// Univariate variant: a must have xdeg == 0.
LaurentSeries pochhammer_q(const Monomial& a, long step, std::optional<long> count,
                           long q_trunc);

/// Bilateral theta sum  sum_{n in Z} (-1)^n q^{modulus*binom(n,2) + a*n},
/// truncated at N.  Requires 0 < a < modulus so both tails truncate
/// (NonTruncating otherwise).  By the Jacobi triple product this equals
/// (q^a, q^{modulus-a}, q^modulus; q^modulus)_infinity.
LaurentSeries theta_sum(long exponent_a, long modulus, long q_trunc);

enum class ProductRoute { Theta, Pochhammer };

/// (q^a, q^{modulus-a}, q^modulus; q^modulus)_infinity via either route.
/// a == 0 or a == modulus yields the zero series (the (1 - q^0) factor);
/// a outside [0, modulus] throws NonTruncating.
LaurentSeries triple_product(long exponent_a, long modulus, long q_trunc,
                             ProductRoute route = ProductRoute::Theta);

} // namespace qgordon
