#include "qgordon/laurent_series.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace qgordon {

namespace {
const mpz_class kZero = 0;
}

LaurentSeries::LaurentSeries(mpz_class c, long exp, long trunc) : trunc_(trunc) {
    if (c != 0 && exp <= trunc) {
        offset_ = exp;
        coeffs_.push_back(std::move(c));
    }
}

LaurentSeries::LaurentSeries(std::vector<mpz_class> coeffs, long offset, long trunc)
    : trunc_(trunc), offset_(offset), coeffs_(std::move(coeffs)) {
    if (!coeffs_.empty()) {
        long top = offset_ + static_cast<long>(coeffs_.size()) - 1;
        if (top > trunc_) {
            long keep = trunc_ - offset_ + 1;
            coeffs_.resize(keep > 0 ? static_cast<size_t>(keep) : 0);
        }
    }
    normalize();
}

void LaurentSeries::normalize() {
    size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
    if (lo == coeffs_.size()) {
        coeffs_.clear();
        offset_ = 0;
        return;
    }
    size_t hi = coeffs_.size();
    while (hi > lo && coeffs_[hi - 1] == 0) --hi;
    if (lo > 0 || hi < coeffs_.size()) {
        std::vector<mpz_class> trimmed(coeffs_.begin() + lo, coeffs_.begin() + hi);
        coeffs_ = std::move(trimmed);
        offset_ += static_cast<long>(lo);
    }
}

std::optional<long> LaurentSeries::valuation() const {
    if (is_zero()) return std::nullopt;
    return offset_;
}

const mpz_class& LaurentSeries::coeff(long exp) const {
    assert(exp <= trunc_ && "coefficient beyond the truncation order is unknown");
    if (exp < offset_ || exp >= offset_ + static_cast<long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(exp - offset_)];
}

LaurentSeries LaurentSeries::add(const LaurentSeries& other) const {
    long trunc = std::min(trunc_, other.trunc_);
    if (is_zero()) return other.truncated(trunc);
    if (other.is_zero()) return truncated(trunc);
    long lo = std::min(offset_, other.offset_);
    long hi = std::min(std::max(offset_ + static_cast<long>(coeffs_.size()),
                                other.offset_ + static_cast<long>(other.coeffs_.size())) -
                           1,
                       trunc);
    if (hi < lo) return LaurentSeries(trunc);
    std::vector<mpz_class> out(static_cast<size_t>(hi - lo + 1));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        long e = offset_ + static_cast<long>(i);
        if (e > hi) break;
        out[static_cast<size_t>(e - lo)] = coeffs_[i];
    }
    for (size_t i = 0; i < other.coeffs_.size(); ++i) {
        long e = other.offset_ + static_cast<long>(i);
        if (e > hi) break;
        out[static_cast<size_t>(e - lo)] += other.coeffs_[i];
    }
    return LaurentSeries(std::move(out), lo, trunc);
}

LaurentSeries LaurentSeries::sub(const LaurentSeries& other) const {
    return add(other.negate());
}

LaurentSeries LaurentSeries::negate() const {
    LaurentSeries out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

LaurentSeries LaurentSeries::mul(const LaurentSeries& other) const {
    // Guard rule: both operands unknown beyond their truncation orders, so the
    // product is forced only up to min(Na + val(b), Nb + val(a)).  A zero
    // operand has no valuation; its first unknown exponent Na+1 gives the bound.
    if (is_zero() && other.is_zero())
        return LaurentSeries(trunc_ + other.trunc_ + 1);
    if (is_zero()) return LaurentSeries(trunc_ + *other.valuation());
    if (other.is_zero()) return LaurentSeries(other.trunc_ + offset_);

    long trunc = std::min(trunc_ + other.offset_, other.trunc_ + offset_);
    long lo = offset_ + other.offset_;
    if (trunc < lo) return LaurentSeries(trunc);
    std::vector<mpz_class> out(static_cast<size_t>(trunc - lo + 1));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        long ei = offset_ + static_cast<long>(i);
        long jmax = trunc - ei - other.offset_;
        if (jmax < 0) break;
        size_t jend = std::min(other.coeffs_.size(), static_cast<size_t>(jmax) + 1);
        const mpz_class& a = coeffs_[i];
        for (size_t j = 0; j < jend; ++j) {
            if (other.coeffs_[j] == 0) continue;
            mpz_addmul(out[static_cast<size_t>(ei + other.offset_ +
                                               static_cast<long>(j) - lo)]
                           .get_mpz_t(),
                       a.get_mpz_t(), other.coeffs_[j].get_mpz_t());
        }
    }
    return LaurentSeries(std::move(out), lo, trunc);
}

LaurentSeries LaurentSeries::mul_monomial(const mpz_class& c, long exp) const {
    if (c == 0) return LaurentSeries(trunc_ + exp);
    LaurentSeries out = *this;
    out.trunc_ += exp;
    out.offset_ += exp;
    if (c != 1)
        for (auto& v : out.coeffs_) v *= c;
    return out;
}

LaurentSeries LaurentSeries::invert_unit() const {
    if (is_zero()) throw NotAUnit("cannot invert the zero series");
    const mpz_class& lead = coeffs_.front();
    if (lead != 1 && lead != -1)
        throw NotAUnit("lowest coefficient is " + lead.get_str() + ", not +-1");
    long v = offset_;
    long rel = trunc_ - v;  // relative order of the shifted series; >= 0 here
    // Invert c*(1 + t) coefficient by coefficient, then shift back by -v.
    std::vector<mpz_class> u(static_cast<size_t>(rel) + 1);
    u[0] = lead;  // lead^-1 == lead for +-1
    for (long t = 1; t <= rel; ++t) {
        mpz_class acc = 0;
        long jend = std::min(t, static_cast<long>(coeffs_.size()) - 1);
        for (long j = 1; j <= jend; ++j) {
            if (coeffs_[static_cast<size_t>(j)] == 0) continue;
            mpz_addmul(acc.get_mpz_t(), coeffs_[static_cast<size_t>(j)].get_mpz_t(),
                       u[static_cast<size_t>(t - j)].get_mpz_t());
        }
        u[static_cast<size_t>(t)] = (lead == 1) ? mpz_class(-acc) : acc;
    }
    return LaurentSeries(std::move(u), -v, trunc_ - 2 * v);
}

LaurentSeries LaurentSeries::truncated(long trunc) const {
    LaurentSeries out = *this;
    if (trunc < out.trunc_) {
        out.trunc_ = trunc;
        long top = out.offset_ + static_cast<long>(out.coeffs_.size()) - 1;
        if (top > trunc) {
            long keep = trunc - out.offset_ + 1;
            out.coeffs_.resize(keep > 0 ? static_cast<size_t>(keep) : 0);
            out.normalize();
        }
    } else {
        out.trunc_ = trunc;  // raising the bound is the caller's claim to make
    }
    return out;
}

bool LaurentSeries::operator==(const LaurentSeries& other) const {
    return trunc_ == other.trunc_ && offset_ == other.offset_ && coeffs_ == other.coeffs_;
}

std::string LaurentSeries::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        long e = offset_ + static_cast<long>(i);
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag != 1 || e == 0) os << mag.get_str();
        if (e != 0) {
            if (mag != 1) os << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

std::optional<CoeffMismatch> first_mismatch(const LaurentSeries& a, const LaurentSeries& b,
                                            long order) {
    if (a.trunc_order() < order || b.trunc_order() < order)
        throw std::logic_error("first_mismatch: operands are not exact to the compared order");
    long lo = order;
    if (auto v = a.valuation()) lo = std::min(lo, *v);
    if (auto v = b.valuation()) lo = std::min(lo, *v);
    for (long e = lo; e <= order; ++e) {
        const mpz_class& ca = a.coeff(e);
        const mpz_class& cb = b.coeff(e);
        if (ca != cb) return CoeffMismatch{e, ca, cb};
    }
    return std::nullopt;
}

} // namespace qgordon
