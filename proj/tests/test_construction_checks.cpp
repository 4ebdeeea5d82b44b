#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgordon/construction_checks.hpp"

using namespace qgordon;

TEST_CASE("matrix adjugate identities") {
    // 1x1 case: (q^-n - 1) q^n = 1 - q^n up to sign bookkeeping in the scalar
    CHECK(check_matrix_adjugate(1, 1, 3, MatrixFamily::Alpha, 2, 30).pass);
    CHECK(check_matrix_adjugate(1, 1, 0, MatrixFamily::Alpha, 2, 30).pass);
    CHECK(check_matrix_adjugate(3, 1, 2, MatrixFamily::Alpha, 2, 40).pass);
    CHECK(check_matrix_adjugate(4, 2, 1, MatrixFamily::Beta, 10, 40).pass);
    for (long d = 1; d <= 5; ++d)
        for (long n = 0; n <= 5; ++n) {
            CHECK(check_matrix_adjugate(d, d, n, MatrixFamily::Alpha, 2, 40).pass);
            CHECK(check_matrix_adjugate(d, d, n, MatrixFamily::Beta, 2 * d + 2, 40).pass);
        }
    CHECK_THROWS_AS(check_matrix_adjugate(2, 3, 1, MatrixFamily::Alpha, 2, 20), ParamDomain);
}

TEST_CASE("simplified one-step recurrences") {
    CHECK(check_simplified_recurrences({2, 2, 1, 1, 1}, 3, 18, 25).pass);
    CHECK(check_simplified_recurrences({2, 2, 2, 1, 2}, 3, 18, 25).pass);
    CHECK(check_simplified_recurrences({3, 3, 3, 2, 2}, 3, 16, 22).pass);
    CHECK(check_simplified_recurrences({1, 2, 1, 1, 1}, 4, 18, 25).pass);
    CHECK(check_simplified_recurrences({4, 4, 2, 1, 3}, 2, 14, 20).pass);
}

TEST_CASE("iterated closed forms match the series definitions") {
    CHECK(check_iterated_forms({2, 2, 2, 1, 1}, 3, 16, 22).pass);
    CHECK(check_iterated_forms({2, 2, 1, 1, 2}, 3, 16, 22).pass);
    CHECK(check_iterated_forms({3, 4, 3, 1, 3}, 3, 16, 22).pass);
    CHECK(check_iterated_forms({1, 3, 1, 1, 1}, 3, 16, 22).pass);
    // the displayed bracket candidate disagrees with the iterated derivation
    // exactly in the f < e case
    CHECK(!check_iterated_forms({2, 2, 2, 1, 1}, 2, 14, 20, CBetaBracket::SeriesDisplay).pass);
    CHECK(check_iterated_forms({2, 2, 2, 1, 2}, 2, 14, 20, CBetaBracket::SeriesDisplay).pass);
}

TEST_CASE("initial conditions and the matching identity") {
    for (const GordonParams& p :
         {GordonParams{1, 2, 1, 1, 1}, GordonParams{2, 2, 1, 1, 1}, GordonParams{2, 3, 2, 1, 2},
          GordonParams{3, 3, 3, 1, 3}, GordonParams{4, 4, 2, 1, 1}}) {
        CheckReport r = check_initial_conditions(p, 3, 16, 24);
        CHECK(r.pass);
        CHECK(r.expected_pass);
    }
    // relaxed e: the matching identity fails, and the report expects that
    for (const GordonParams& p : {GordonParams{3, 3, 2, 1, 1}, GordonParams{3, 3, 1, 1, 1},
                                  GordonParams{4, 4, 3, 1, 1}}) {
        CheckReport r = check_initial_conditions(p, 3, 14, 22);
        CHECK(!r.pass);
        CHECK(!r.expected_pass);
        CHECK(r.as_expected());
        CHECK(r.mismatch.has_value());
    }
}

TEST_CASE("Q-series relations at d = 1") {
    for (long k = 1; k <= 4; ++k)
        for (long a = 1; a <= k; ++a) CHECK(check_q_relations(k, a, 20, 20).pass);
}
