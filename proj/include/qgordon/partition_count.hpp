#pragma once

#include <map>
#include <optional>
#include <set>

#include "qgordon/biseries.hpp"

namespace qgordon {

/// A partition in frequency notation: part size -> multiplicity (>= 1).
struct FrequencyProfile {
    std::map<long, long> freqs;
    long weight = 0;  // sum of size * multiplicity
    long parts = 0;   // sum of multiplicities
};

enum class ParityClass { EvenParts, OddParts, None };

/// Gordon-style frequency constraints:
///   f_i + f_{i+1} < pair_bound   for all i >= 1,
///   f_1 < initial_bound,
///   divisor | f_{2i}   (EvenParts)  or  divisor | f_{2i+1}  (OddParts).
/// OddParts constrains f_1 by both the initial bound and the divisor.
struct ConstraintSet {
    long pair_bound = 0;     // K
    long initial_bound = 0;  // A; A == 0 admits nothing, not even the empty partition
    long divisor = 1;        // d
    ParityClass parity = ParityClass::None;

    bool admits(const FrequencyProfile& p) const;
};

inline constexpr std::optional<long> kAnyParts = std::nullopt;

/// Number of partitions of n (with exactly m parts unless kAnyParts) meeting
/// the constraints.  Exhaustive: enumerates every partition of n and filters.
/// Negative n or m count zero, matching the boundary conventions.
long brute_count(long n, std::optional<long> m, const ConstraintSet& c);

/// table[n][m] = brute_count(n, m, c) for 0 <= n, m <= n_max, from a single
/// enumeration pass per weight.
std::vector<std::vector<long>> brute_table(const ConstraintSet& c, long n_max);

/// Generating function sum b(m, n) x^m q^n for the same counts, computed by
/// dynamic programming over part sizes with the previous multiplicity as
/// state.  Exact to (x_trunc, q_trunc); shares no code with brute_count.
BiSeries dp_genfun(const ConstraintSet& c, long x_trunc, long q_trunc);

/// Product generating function for partitions into parts lying in the given
/// residue classes (residues taken in [1, modulus], with `modulus` standing
/// for residue 0).
LaurentSeries residue_genfun(const std::set<long>& allowed, long modulus, long q_trunc);

} // namespace qgordon
