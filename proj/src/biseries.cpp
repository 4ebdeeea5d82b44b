#include "qgordon/biseries.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace qgordon {

BiSeries::BiSeries(long x_trunc, long q_trunc) : x_trunc_(x_trunc), q_trunc_(q_trunc) {
    assert(x_trunc >= 0);
    entries_.assign(static_cast<size_t>(x_trunc) + 1, LaurentSeries(q_trunc));
}

BiSeries BiSeries::one(long x_trunc, long q_trunc) {
    BiSeries out(x_trunc, q_trunc);
    out.entries_[0] = LaurentSeries::one(q_trunc);
    return out;
}

BiSeries BiSeries::from_monomial(const Monomial& m, long x_trunc, long q_trunc) {
    BiSeries out(x_trunc, q_trunc);
    if (m.xdeg <= x_trunc)
        out.entries_[static_cast<size_t>(m.xdeg)] = LaurentSeries(m.sign, m.qdeg, q_trunc);
    return out;
}

BiSeries BiSeries::one_minus(const Monomial& m, long x_trunc, long q_trunc) {
    BiSeries out = one(x_trunc, q_trunc);
    if (m.xdeg <= x_trunc) {
        LaurentSeries neg(-m.sign, m.qdeg, q_trunc);
        out.entries_[static_cast<size_t>(m.xdeg)] =
            out.entries_[static_cast<size_t>(m.xdeg)].add(neg);
    }
    return out;
}

BiSeries BiSeries::from_laurent(const LaurentSeries& s, long x_trunc) {
    BiSeries out(x_trunc, s.trunc_order());
    out.entries_[0] = s;
    return out;
}

BiSeries BiSeries::from_entries(std::vector<LaurentSeries> entries) {
    assert(!entries.empty());
    BiSeries out(static_cast<long>(entries.size()) - 1, entries.front().trunc_order());
    out.entries_ = std::move(entries);
    out.unify_truncs();
    return out;
}

bool BiSeries::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

std::optional<long> BiSeries::x_valuation() const {
    for (long m = 0; m <= x_trunc_; ++m)
        if (!entries_[static_cast<size_t>(m)].is_zero()) return m;
    return std::nullopt;
}

std::optional<long> BiSeries::q_valuation() const {
    std::optional<long> v;
    for (const auto& e : entries_)
        if (auto ve = e.valuation())
            if (!v || *ve < *v) v = ve;
    return v;
}

const LaurentSeries& BiSeries::entry(long m) const {
    assert(m >= 0 && m <= x_trunc_ && "x-degree beyond the x truncation is unknown");
    return entries_[static_cast<size_t>(m)];
}

void BiSeries::set_entry(long m, LaurentSeries s) {
    entries_[static_cast<size_t>(m)] = std::move(s);
}

void BiSeries::unify_truncs() {
    long t = q_trunc_;
    for (const auto& e : entries_) t = std::min(t, e.trunc_order());
    q_trunc_ = t;
    for (auto& e : entries_) e = e.truncated(t);
}

BiSeries BiSeries::add(const BiSeries& other) const {
    long mx = std::min(x_trunc_, other.x_trunc_);
    long nq = std::min(q_trunc_, other.q_trunc_);
    BiSeries out(mx, nq);
    for (long m = 0; m <= mx; ++m)
        out.set_entry(m, entries_[static_cast<size_t>(m)]
                             .add(other.entries_[static_cast<size_t>(m)])
                             .truncated(nq));
    return out;
}

BiSeries BiSeries::sub(const BiSeries& other) const { return add(other.negate()); }

BiSeries BiSeries::negate() const {
    BiSeries out = *this;
    for (auto& e : out.entries_) e = e.negate();
    return out;
}

BiSeries BiSeries::mul(const BiSeries& other) const {
    auto qva = q_valuation();
    auto qvb = other.q_valuation();
    long nq;
    if (!qva && !qvb)
        nq = q_trunc_ + other.q_trunc_ + 1;
    else if (!qva)
        nq = q_trunc_ + *qvb;
    else if (!qvb)
        nq = other.q_trunc_ + *qva;
    else
        nq = std::min(q_trunc_ + *qvb, other.q_trunc_ + *qva);

    long cap = std::max(x_trunc_, other.x_trunc_);
    long xa = x_valuation().value_or(x_trunc_ + 1);
    long xb = other.x_valuation().value_or(other.x_trunc_ + 1);
    long mx = std::min({x_trunc_ + xb, other.x_trunc_ + xa, cap});
    if (mx < 0) mx = 0;

    BiSeries out(mx, nq);
    for (long i = 0; i <= x_trunc_; ++i) {
        const LaurentSeries& a = entries_[static_cast<size_t>(i)];
        if (a.is_zero()) continue;
        for (long j = 0; j <= other.x_trunc_ && i + j <= mx; ++j) {
            const LaurentSeries& b = other.entries_[static_cast<size_t>(j)];
            if (b.is_zero()) continue;
            out.set_entry(i + j,
                          out.entry(i + j).add(a.mul(b)).truncated(nq));
        }
    }
    return out;
}

BiSeries BiSeries::mul_monomial(const Monomial& m) const {
    BiSeries out(x_trunc_ + m.xdeg, q_trunc_ + m.qdeg);
    mpz_class c = m.sign;
    for (long i = 0; i <= x_trunc_; ++i)
        out.set_entry(i + m.xdeg, entries_[static_cast<size_t>(i)].mul_monomial(c, m.qdeg));
    return out;
}

BiSeries BiSeries::mul_scalar(const mpz_class& c) const {
    BiSeries out = *this;
    for (auto& e : out.entries_) e = e.mul_monomial(c, 0);
    return out;
}

BiSeries BiSeries::invert_unit() const {
    // The lowest term in the (x-degree, q-valuation) grading must sit at
    // x-degree 0; higher entries are handled by the x-adic recurrence
    //   u_0 = 1/s_0,   u_m = -u_0 * sum_{i=1..m} s_i u_{m-i}.
    const LaurentSeries& s0 = entries_[0];
    if (s0.is_zero()) throw NotAUnit("x-degree-0 part is zero within the window");
    LaurentSeries u0 = s0.invert_unit();
    std::vector<LaurentSeries> u;
    u.reserve(static_cast<size_t>(x_trunc_) + 1);
    u.push_back(u0);
    for (long m = 1; m <= x_trunc_; ++m) {
        LaurentSeries acc(q_trunc_ + u0.trunc_order() + 1);  // neutral high bound
        bool any = false;
        for (long i = 1; i <= m; ++i) {
            const LaurentSeries& si = entries_[static_cast<size_t>(i)];
            if (si.is_zero()) continue;
            LaurentSeries prod = si.mul(u[static_cast<size_t>(m - i)]);
            acc = any ? acc.add(prod) : prod;
            any = true;
        }
        if (!any)
            u.push_back(LaurentSeries(u0.trunc_order()));
        else
            u.push_back(acc.mul(u0).negate());
    }
    BiSeries out(x_trunc_, u0.trunc_order());
    for (long m = 0; m <= x_trunc_; ++m) out.set_entry(m, std::move(u[static_cast<size_t>(m)]));
    out.unify_truncs();
    return out;
}

BiSeries BiSeries::truncated(long x_trunc, long q_trunc) const {
    BiSeries out(std::min(x_trunc, x_trunc_), std::min(q_trunc, q_trunc_));
    for (long m = 0; m <= out.x_trunc_; ++m)
        out.set_entry(m, entries_[static_cast<size_t>(m)].truncated(out.q_trunc_));
    return out;
}

LaurentSeries BiSeries::evaluate_x(long c) const {
    assert(c >= 0);
    for (long m = 0; m <= x_trunc_; ++m) {
        const auto& e = entries_[static_cast<size_t>(m)];
        if (auto v = e.valuation(); v && *v < m) {
            if (c == 0)
                throw UnsafeEvaluation("entry at x-degree " + std::to_string(m) +
                                       " has q-valuation below its x-degree");
            throw UnsafeEvaluation("series lacks the q-valuation certificate");
        }
    }
    long trunc = std::min(q_trunc_, (c + 1) * (x_trunc_ + 1) - 1);
    LaurentSeries acc(trunc);
    for (long m = 0; m <= x_trunc_; ++m) {
        const auto& e = entries_[static_cast<size_t>(m)];
        if (e.is_zero()) continue;
        acc = acc.add(e.mul_monomial(1, c * m).truncated(trunc));
    }
    return acc;
}

bool BiSeries::operator==(const BiSeries& other) const {
    return x_trunc_ == other.x_trunc_ && q_trunc_ == other.q_trunc_ &&
           entries_ == other.entries_;
}

std::string BiSeries::str() const {
    std::ostringstream os;
    bool any = false;
    for (long m = 0; m <= x_trunc_; ++m) {
        const auto& e = entries_[static_cast<size_t>(m)];
        if (e.is_zero()) continue;
        if (any) os << "\n";
        os << "x^" << m << ": " << e.str();
        any = true;
    }
    return any ? os.str() : "0";
}

std::optional<BiMismatch> first_mismatch(const BiSeries& a, const BiSeries& b, long x_order,
                                         long q_order) {
    if (a.x_trunc() < x_order || b.x_trunc() < x_order || a.q_trunc() < q_order ||
        b.q_trunc() < q_order)
        throw std::logic_error("first_mismatch: operands are not exact to the compared order");
    for (long m = 0; m <= x_order; ++m) {
        if (auto mm = first_mismatch(a.entry(m), b.entry(m), q_order))
            return BiMismatch{m, mm->q_exp, mm->lhs, mm->rhs};
    }
    return std::nullopt;
}

} // namespace qgordon
