#include "qgordon/partition_count.hpp"

#include <cassert>
#include <functional>
#include <vector>

namespace qgordon {

bool ConstraintSet::admits(const FrequencyProfile& p) const {
    if (initial_bound <= 0) return false;  // f_1 < 0 (or < 0 after shift) is impossible
    auto freq = [&p](long i) {
        auto it = p.freqs.find(i);
        return it == p.freqs.end() ? 0L : it->second;
    };
    long top = p.freqs.empty() ? 0 : p.freqs.rbegin()->first;
    if (freq(1) >= initial_bound) return false;
    for (long i = 1; i <= top; ++i) {
        long f = freq(i);
        if (f + freq(i + 1) >= pair_bound) return false;
        if (parity == ParityClass::EvenParts && i % 2 == 0 && f % divisor != 0) return false;
        if (parity == ParityClass::OddParts && i % 2 == 1 && f % divisor != 0) return false;
    }
    return true;
}

long brute_count(long n, std::optional<long> m, const ConstraintSet& c) {
    if (n < 0) return 0;
    if (m && *m < 0) return 0;
    long count = 0;
    FrequencyProfile current;
    // Enumerate every partition of n in increasing part-size order (lexicographic
    // in the multiplicity vector), pruning only on weight; constraints are
    // checked on complete partitions so the oracle stays a plain filter.
    std::function<void(long, long)> recurse = [&](long size, long remaining) {
        if (remaining == 0) {
            if ((!m || current.parts == *m) && c.admits(current)) ++count;
            return;
        }
        if (size > remaining) return;
        recurse(size + 1, remaining);
        current.freqs[size] = 0;
        for (long f = 1; f * size <= remaining; ++f) {
            current.freqs[size] = f;
            current.weight += size;
            current.parts += 1;
            recurse(size + 1, remaining - f * size);
        }
        current.weight -= size * current.freqs[size];
        current.parts -= current.freqs[size];
        current.freqs.erase(size);
    };
    recurse(1, n);
    return count;
}

std::vector<std::vector<long>> brute_table(const ConstraintSet& c, long n_max) {
    std::vector<std::vector<long>> table(static_cast<size_t>(n_max) + 1,
                                         std::vector<long>(static_cast<size_t>(n_max) + 1));
    FrequencyProfile current;
    for (long n = 0; n <= n_max; ++n) {
        std::function<void(long, long)> recurse = [&](long size, long remaining) {
            if (remaining == 0) {
                if (current.parts <= n_max && c.admits(current))
                    ++table[static_cast<size_t>(n)][static_cast<size_t>(current.parts)];
                return;
            }
            if (size > remaining) return;
            recurse(size + 1, remaining);
            current.freqs[size] = 0;
            for (long f = 1; f * size <= remaining; ++f) {
                current.freqs[size] = f;
                current.weight += size;
                current.parts += 1;
                recurse(size + 1, remaining - f * size);
            }
            current.weight -= size * current.freqs[size];
            current.parts -= current.freqs[size];
            current.freqs.erase(size);
        };
        recurse(1, n);
    }
    return table;
}

BiSeries dp_genfun(const ConstraintSet& c, long x_trunc, long q_trunc) {
    const long K = c.pair_bound;
    BiSeries zero = BiSeries::zero(x_trunc, q_trunc);
    if (c.initial_bound <= 0 || K <= 0) return zero;

    // state[prev][m] = dense q-coefficient row (exponents 0..q_trunc) of the
    // generating function over partitions with largest considered part size i,
    // where prev is the multiplicity chosen for size i.
    const size_t rows = static_cast<size_t>(K);  // prev in 0..K-1
    const size_t xs = static_cast<size_t>(x_trunc) + 1;
    const size_t qs = static_cast<size_t>(q_trunc) + 1;
    using Table = std::vector<std::vector<mpz_class>>;  // [prev*xs + m][q]
    auto make = [&] { return Table(rows * xs, std::vector<mpz_class>(qs)); };
    Table cur = make();
    cur[0][0] = 1;  // empty choice so far

    auto divisor_ok = [&](long size, long f) {
        if (c.parity == ParityClass::EvenParts && size % 2 == 0) return f % c.divisor == 0;
        if (c.parity == ParityClass::OddParts && size % 2 == 1) return f % c.divisor == 0;
        return true;
    };

    for (long size = 1; size <= q_trunc; ++size) {
        Table next = make();
        for (long f = 0; f < K && f * size <= q_trunc; ++f) {
            if (!divisor_ok(size, f)) continue;
            if (size == 1 && f >= c.initial_bound) continue;
            for (long prev = 0; prev + f < K; ++prev) {
                for (long m = 0; m + f <= x_trunc; ++m) {
                    const auto& src = cur[static_cast<size_t>(prev) * xs + m];
                    auto& dst = next[static_cast<size_t>(f) * xs + m + f];
                    long shift = f * size;
                    for (long e = 0; e + shift <= q_trunc; ++e) {
                        if (src[static_cast<size_t>(e)] == 0) continue;
                        dst[static_cast<size_t>(e + shift)] += src[static_cast<size_t>(e)];
                    }
                }
            }
        }
        cur = std::move(next);
    }

    // Sum over the final multiplicity state.
    std::vector<LaurentSeries> entries;
    entries.reserve(xs);
    for (long m = 0; m <= x_trunc; ++m) {
        std::vector<mpz_class> row(qs);
        for (size_t prev = 0; prev < rows; ++prev) {
            const auto& src = cur[prev * xs + m];
            for (size_t e = 0; e < qs; ++e) row[e] += src[e];
        }
        entries.emplace_back(std::move(row), 0, q_trunc);
    }
    return BiSeries::from_entries(std::move(entries));
}

LaurentSeries residue_genfun(const std::set<long>& allowed, long modulus, long q_trunc) {
    assert(modulus >= 1);
    std::vector<mpz_class> coeffs(static_cast<size_t>(q_trunc) + 1);
    coeffs[0] = 1;
    for (long part = 1; part <= q_trunc; ++part) {
        long r = part % modulus;
        if (r == 0) r = modulus;
        if (!allowed.count(r)) continue;
        // multiply by 1/(1 - q^part): prefix accumulation
        for (long e = part; e <= q_trunc; ++e)
            coeffs[static_cast<size_t>(e)] += coeffs[static_cast<size_t>(e - part)];
    }
    return LaurentSeries(std::move(coeffs), 0, q_trunc);
}

} // namespace qgordon
