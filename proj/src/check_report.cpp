#include "qgordon/check_report.hpp"

namespace qgordon {

CheckReport make_report(std::string check_id, const GordonParams& p, std::string variant,
                        long order_m, long order_n, std::optional<BiMismatch> mismatch) {
    CheckReport r;
    r.check_id = std::move(check_id);
    r.params = p;
    r.variant = std::move(variant);
    r.order_m = order_m;
    r.order_n = order_n;
    r.pass = !mismatch.has_value();
    r.mismatch = std::move(mismatch);
    return r;
}

std::optional<BiMismatch> compare(const BiSeries& lhs, const BiSeries& rhs, long x_order,
                                  long q_order) {
    return first_mismatch(lhs, rhs, x_order, q_order);
}

std::optional<BiMismatch> compare(const LaurentSeries& lhs, const LaurentSeries& rhs,
                                  long q_order) {
    if (auto mm = first_mismatch(lhs, rhs, q_order))
        return BiMismatch{0, mm->q_exp, mm->lhs, mm->rhs};
    return std::nullopt;
}

void fold(CheckReport& report, const std::optional<BiMismatch>& mismatch) {
    if (!mismatch) return;
    report.pass = false;
    if (!report.mismatch) report.mismatch = mismatch;  // keep the first one found
}

} // namespace qgordon
