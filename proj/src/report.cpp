#include "qgordon/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace qgordon {

void SuiteConfig::validate() const {
    if (max_d < 1 || max_k < 1 || max_d > max_k)
        throw ParamDomain("need 1 <= max_d <= max_k");
    if (order_n < 1 || order_m < 1 || n_max_terms < 0)
        throw ParamDomain("orders must be at least 1");
    if (parallel < 1) throw ParamDomain("worker count must be at least 1");
}

Summary summarize(const std::vector<CheckReport>& reports) {
    Summary s;
    for (const auto& r : reports) {
        if (r.as_expected()) ++s.pass;
        if (!r.pass) ++s.fail;
        if (!r.as_expected()) ++s.unexpected;
    }
    return s;
}

int exit_code(const std::vector<CheckReport>& reports) {
    return summarize(reports).unexpected == 0 ? 0 : 1;
}

std::string render_json(const std::vector<CheckReport>& reports, const SuiteConfig& config) {
    using json = nlohmann::ordered_json;
    json root;
    root["suite"] = "qgordon";
    json cfg;
    cfg["max_d"] = config.max_d;
    cfg["max_k"] = config.max_k;
    cfg["order_m"] = config.order_m;
    cfg["order_n"] = config.order_n;
    cfg["n_max_terms"] = config.n_max_terms;
    cfg["checks"] = json::array();
    for (const auto& c : config.checks) cfg["checks"].push_back(c);
    root["config"] = cfg;

    root["results"] = json::array();
    for (const auto& r : reports) {
        json e;
        e["check"] = r.check_id;
        json params;
        params["d"] = r.params.d;
        params["k"] = r.params.k;
        params["e"] = r.params.e;
        params["a"] = r.params.a;
        params["f"] = r.params.f;
        params["variant"] = r.variant;
        e["params"] = params;
        e["order"] = {{"m", r.order_m}, {"n", r.order_n}};
        e["status"] = r.pass ? "PASS" : "FAIL";
        e["expected_status"] = r.expected_pass ? "PASS" : "FAIL";
        if (r.mismatch) {
            json mm;
            mm["x_deg"] = r.mismatch->x_deg;
            mm["q_exp"] = r.mismatch->q_exp;
            mm["lhs"] = r.mismatch->lhs.get_str();  // decimal strings, never numbers
            mm["rhs"] = r.mismatch->rhs.get_str();
            e["first_mismatch"] = mm;
        } else {
            e["first_mismatch"] = nullptr;
        }
        e["elapsed_ms"] = config.no_timing ? 0 : r.elapsed_ms;
        root["results"].push_back(e);
    }

    Summary s = summarize(reports);
    root["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"unexpected", s.unexpected}};
    return root.dump(2) + "\n";
}

std::string render_text(const std::vector<CheckReport>& reports, const SuiteConfig& config) {
    std::ostringstream os;
    auto param_str = [](const CheckReport& r) {
        std::ostringstream ps;
        ps << "d=" << r.params.d << " k=" << r.params.k << " e=" << r.params.e
           << " a=" << r.params.a << " f=" << r.params.f;
        if (!r.variant.empty()) ps << " " << r.variant;
        return ps.str();
    };
    size_t wid_check = 5, wid_params = 6;
    for (const auto& r : reports) {
        wid_check = std::max(wid_check, r.check_id.size());
        wid_params = std::max(wid_params, param_str(r).size());
    }
    os << std::left << std::setw(static_cast<int>(wid_check) + 2) << "check"
       << std::setw(static_cast<int>(wid_params) + 2) << "params"
       << std::setw(12) << "order" << std::setw(10) << "status" << std::setw(10) << "expected"
       << std::setw(8) << "ms" << "mismatch\n";
    for (const auto& r : reports) {
        std::ostringstream ord;
        ord << "(" << r.order_m << "," << r.order_n << ")";
        os << std::left << std::setw(static_cast<int>(wid_check) + 2) << r.check_id
           << std::setw(static_cast<int>(wid_params) + 2) << param_str(r)
           << std::setw(12) << ord.str() << std::setw(10) << (r.pass ? "PASS" : "FAIL")
           << std::setw(10) << (r.expected_pass ? "PASS" : "FAIL") << std::setw(8)
           << (config.no_timing ? 0 : r.elapsed_ms);
        if (r.mismatch)
            os << "x^" << r.mismatch->x_deg << " q^" << r.mismatch->q_exp << ": "
               << r.mismatch->lhs.get_str() << " != " << r.mismatch->rhs.get_str();
        os << "\n";
    }
    Summary s = summarize(reports);
    os << "summary: pass=" << s.pass << " fail=" << s.fail << " unexpected=" << s.unexpected
       << "\n";
    return os.str();
}

} // namespace qgordon
