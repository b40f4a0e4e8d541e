#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "oddcf/empirical.hpp"

using namespace oddcf;

TEST_CASE("empirical F0 on Y_4") {
    CHECK(empirical_F0(4, Rational(1, 2)) == Rational(6, 12));
    CHECK(empirical_F0(4, Rational(1, 3)) == Rational(4, 12));
    CHECK(empirical_F0(4, Rational(0)) == Rational(0));
    for (int n = 1; n <= 6; ++n) CHECK(empirical_F0(n, Rational(1)) == Rational(1));
    const auto y = y_set(4);
    CHECK(empirical_F0_strict(y, Rational(1, 3)) == Rational(3, 12));
    CHECK_THROWS_AS(empirical_F0(std::span<const Rational>{}, Rational(1, 2)), std::domain_error);
}

TEST_CASE("empirical F") {
    // Y_4 has 7 points >= 1/2, plus the point 1
    CHECK(empirical_F(5, Rational(1, 2)) == Rational(7, 13));
    CHECK(empirical_F(2, Rational(1)) == Rational(1));
    CHECK(empirical_F(2, Rational(0)) == Rational(0));
    // M_2 = {1/2, 1}
    CHECK(empirical_F(2, Rational(2, 3)) == Rational(1, 2));
    CHECK_THROWS_AS(empirical_F(1, Rational(1, 2)), std::domain_error);
}

TEST_CASE("convergence table shape") {
    const auto grid = y_set(4);
    const auto rows = convergence_table(6, grid);
    CHECK(rows.size() == grid.size() * 6);
    CHECK(rows.front().n == 1);
    CHECK(rows.back().n == 6);
    for (const auto& r : rows) {
        CHECK(r.exact.lo <= r.exact.hi);
        CHECK(r.abs_error_bound >= abs(r.empirical - r.exact.lo));
    }
    CHECK(max_error(rows, 6) < max_error(rows, 1));
}

TEST_CASE("mediant ratios at level 0") {
    const AuditReport r = mediant_ratio_audit(0);
    REQUIRE(r.rows.size() == 1);
    const AuditRow& row = r.rows[0];
    CHECK(row.mediant == Rational(1, 2));
    CHECK(row.ratio_class == RatioClass::inv_lambda_minus_one);
    CHECK(row.node_type == NodeType::first);
    CHECK(r.all_members);
    CHECK(r.all_correlated);
}

TEST_CASE("normalized ratios of a pair sum to one") {
    for (AuditTarget t : {AuditTarget::F, AuditTarget::F0}) {
        const AuditReport r = mediant_ratio_audit(5, t);
        CHECK(r.all_normalized);
        CHECK(r.rows.size() == 32);
        for (const auto& row : r.rows) {
            // left/(left+right) recovered from the ratio
            CHECK(row.normalized == row.ratio / (row.ratio + CubicNumber(1)));
        }
    }
}

TEST_CASE("derivative probe") {
    const auto steps = decimal_steps(1, 3);
    REQUIRE(steps.size() == 3);
    CHECK(steps[2] == Rational(1, 1000));
    const auto rows = derivative_probe(Rational(1, 2), steps);
    for (const auto& r : rows) CHECK(r.quotient.lo <= r.quotient.hi);
    CHECK(rows[2].quotient.hi < rows[1].quotient.lo);
    CHECK_THROWS_AS(derivative_probe(Rational(1, 20), steps), std::domain_error);
    CHECK_THROWS_AS(derivative_probe(Rational(0), steps), std::domain_error);
    const std::vector<Rational> bad{Rational(0)};
    CHECK_THROWS_AS(derivative_probe(Rational(1, 2), bad), std::domain_error);
}

TEST_CASE("csv headers") {
    std::ostringstream a, b, c;
    const auto grid = y_set(2);
    export_csv(a, convergence_table(2, grid), 6);
    export_csv(b, mediant_ratio_audit(1));
    export_csv(c, derivative_probe(Rational(1, 3), decimal_steps(1, 2)), 4);
    CHECK(a.str().rfind("n,x,empirical,exact_lo,exact_hi,abs_error_bound\n", 0) == 0);
    CHECK(b.str().rfind("level,x,y,mediant,ratio_class,node_type\n", 0) == 0);
    CHECK(c.str().rfind("x,h,quotient_lo,quotient_hi\n", 0) == 0);
    const std::string text = a.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 2 * 3);
}
