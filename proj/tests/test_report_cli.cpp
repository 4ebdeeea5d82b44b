#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

#include "qgordon/identity_checks.hpp"
#include "qgordon/report.hpp"
#include "qgordon/sweep.hpp"

using namespace qgordon;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(QGORDON_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

} // namespace

TEST_CASE("summary accounting") {
    CHECK(summarize({}).pass == 0);
    CHECK(summarize({}).fail == 0);
    CHECK(summarize({}).unexpected == 0);
    CHECK(exit_code({}) == 0);

    CheckReport ok = make_report("x", GordonParams{}, "", 1, 1, std::nullopt);
    CheckReport bad = make_report("x", GordonParams{}, "", 1, 1, BiMismatch{0, 1, 2, 3});
    CheckReport expected_bad = bad;
    expected_bad.expected_pass = false;

    Summary s = summarize({ok, bad, expected_bad});
    CHECK(s.pass == 2);        // ok and the expected failure behave as expected
    CHECK(s.fail == 2);        // raw failures
    CHECK(s.unexpected == 1);  // the unexpected failure
    CHECK(exit_code({ok, expected_bad}) == 0);
    CHECK(exit_code({ok, bad}) == 1);
}

TEST_CASE("json schema") {
    CheckReport bad = make_report("theorem", GordonParams{2, 3, 1, 2, 2}, "even", 0, 50,
                                  BiMismatch{1, 7, mpz_class("123456789012345678901234567890"),
                                             mpz_class(-5)});
    bad.elapsed_ms = 42;
    SuiteConfig cfg;
    json root = json::parse(render_json({bad}, cfg));
    CHECK(root["suite"] == "qgordon");
    const auto& r = root["results"][0];
    CHECK(r["check"] == "theorem");
    CHECK(r["params"]["d"] == 2);
    CHECK(r["params"]["k"] == 3);
    CHECK(r["params"]["e"] == 1);
    CHECK(r["params"]["a"] == 2);
    CHECK(r["params"]["f"] == 2);
    CHECK(r["params"]["variant"] == "even");
    CHECK(r["order"]["m"] == 0);
    CHECK(r["order"]["n"] == 50);
    CHECK(r["status"] == "FAIL");
    CHECK(r["expected_status"] == "PASS");
    // coefficients round-trip through decimal strings losslessly
    CHECK(r["first_mismatch"]["lhs"] == "123456789012345678901234567890");
    CHECK(mpz_class(r["first_mismatch"]["lhs"].get<std::string>()) ==
          mpz_class("123456789012345678901234567890"));
    CHECK(r["first_mismatch"]["rhs"] == "-5");
    CHECK(root["summary"]["pass"] == 0);
    CHECK(root["summary"]["fail"] == 1);
    CHECK(root["summary"]["unexpected"] == 1);

    CheckReport ok = make_report("jtp", GordonParams{}, "", 0, 80, std::nullopt);
    root = json::parse(render_json({ok}, cfg));
    CHECK(root["results"][0]["first_mismatch"].is_null());
}

TEST_CASE("no-timing zeroes elapsed fields") {
    CheckReport ok = make_report("jtp", GordonParams{}, "", 0, 80, std::nullopt);
    ok.elapsed_ms = 99;
    SuiteConfig cfg;
    cfg.no_timing = true;
    json root = json::parse(render_json({ok}, cfg));
    CHECK(root["results"][0]["elapsed_ms"] == 0);
}

TEST_CASE("parallel sweep results are order-stable") {
    SuiteConfig cfg;
    cfg.checks = {"jtp", "matrix_adjugate"};
    cfg.no_timing = true;
    cfg.parallel = 1;
    auto serial = run_sweep(cfg);
    cfg.parallel = 4;
    auto parallel = run_sweep(cfg);
    CHECK(render_json(serial, cfg) == render_json(parallel, cfg));
}

TEST_CASE("cli: verify exits 0 on pass") {
    auto r = run_cli("verify theorem --d 1 --k 2 --e 1 --a 2 --f 1 --order 40");
    CHECK(r.exit_code == 0);
}

TEST_CASE("cli: invalid parameters exit 2") {
    CHECK(run_cli("verify theorem --d 3 --k 2 --e 3 --a 1 --f 1 --order 40").exit_code == 2);
    CHECK(run_cli("verify nonsense --order 10").exit_code == 2);
    CHECK(run_cli("count --n 5").exit_code == 2);  // missing required flags
}

TEST_CASE("cli: count prints the exhaustive value") {
    auto r = run_cli("count --n 6 --pair-bound 2 --initial-bound 2 --divisor 1 --parity none");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3\n");
}

TEST_CASE("cli: expected negative-control failure keeps exit 0") {
    auto r = run_cli("verify negative_control --d 3 --k 3 --e 1 --a 1 --f 1 --order 60");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("cli: json sweep output is byte-identical across runs and workers") {
    std::string args = "sweep --checks jtp --json --no-timing";
    auto a = run_cli(args);
    auto b = run_cli(args + " --jobs 4");
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    json root = json::parse(a.out);
    CHECK(root["summary"]["unexpected"] == 0);
}

TEST_CASE("cli: unexpected failure exits 1") {
    // relaxed-e mismatch through the plain theorem path is an unexpected FAIL
    auto r = run_cli(
        "verify counts_vs_series --d 2 --k 2 --e 1 --a 1 --f 1 --xorder 10 --variant even");
    CHECK(r.exit_code == 0);
}
