#include "doctest.h"
#include "oddcf/contfrac.hpp"
#include "oddcf/verify.hpp"

using namespace oddcf;

namespace {
OddCF zero(std::vector<SignedQuotient> t) { return OddCF{Form::zero, std::move(t)}; }
OddCF one(std::vector<SignedQuotient> t) { return OddCF{Form::one, std::move(t)}; }
}  // namespace

TEST_CASE("odd division") {
    CHECK(odd_div(7, 3) == OddDivision{3, -2});
    CHECK(odd_div(5, 5) == OddDivision{1, 0});
    CHECK(odd_div(4, 2) == OddDivision{1, 2});
    CHECK(odd_div(1, 7) == OddDivision{1, -6});
    CHECK_THROWS_AS(odd_div(3, 0), std::domain_error);
    CHECK_THROWS_AS(odd_div(-3, 2), std::domain_error);
}

TEST_CASE("ordinary expansion and evaluation") {
    CHECK(expand_ordinary(Rational(2, 5)) == OrdinaryCF{0, {2, 2}});
    CHECK(expand_ordinary(Rational(7)) == OrdinaryCF{7, {}});
    CHECK(expand_ordinary(Rational(5, 8)) == OrdinaryCF{0, {1, 1, 1, 2}});
    CHECK(eval_ordinary(OrdinaryCF{0, {2, 2}}) == Rational(2, 5));
    CHECK(eval_ordinary(OrdinaryCF{3, {}}) == Rational(3));
    CHECK(eval_ordinary(OrdinaryCF{0, {1, 1, 1, 2}}) == Rational(5, 8));
    CHECK(canonicalize(OrdinaryCF{0, {2, 1}}) == OrdinaryCF{0, {3}});
}

TEST_CASE("reflection of ordinary fractions") {
    CHECK(reflect(OrdinaryCF{0, {3}}) == OrdinaryCF{0, {1, 2}});
    CHECK(reflect(OrdinaryCF{0, {1, 2}}) == OrdinaryCF{0, {3}});
    for (const auto& x : farey_fractions(30))
        CHECK(eval_ordinary(reflect(expand_ordinary(x))) == Rational(1) - x);
}

TEST_CASE("odd expansion, form zero") {
    CHECK(expand_odd_zero(Rational(1, 2)) == zero({{1, 1}, {1, 1}}));
    CHECK(expand_odd_zero(Rational(2, 5)) == zero({{1, 3}, {-1, 1}, {1, 1}}));
    CHECK(expand_odd_zero(Rational(3, 5)) == zero({{1, 1}, {1, 1}, {1, 1}, {1, 1}}));
    CHECK(expand_odd_zero(Rational(1, 3)) == zero({{1, 3}}));
    CHECK(expand_odd_zero(Rational(0)) == zero({}));
    CHECK(expand_odd_zero(Rational(1)) == zero({{1, 1}}));
    CHECK_THROWS_AS(expand_odd_zero(Rational(3, 2)), std::domain_error);
}

TEST_CASE("odd expansion, form one") {
    CHECK(expand_odd_one(Rational(1, 2)) == one({{-1, 1}, {1, 1}}));
    CHECK(expand_odd_one(Rational(0)) == one({{-1, 1}}));
    CHECK(expand_odd_one(Rational(1)) == one({}));
    CHECK(eval_odd(one({{-1, 1}})) == Rational(0));
}

TEST_CASE("odd evaluation") {
    CHECK(eval_odd(zero({{1, 3}, {-1, 1}, {1, 1}})) == Rational(2, 5));
    CHECK(eval_odd(zero({{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}})) == Rational(5, 8));
}

TEST_CASE("conversion from ordinary fractions") {
    CHECK(convert_ordinary_to_odd(OrdinaryCF{0, {2, 2}}) == zero({{1, 3}, {-1, 1}, {1, 1}}));
    CHECK(convert_ordinary_to_odd(OrdinaryCF{0, {2}}) == zero({{1, 1}, {1, 1}}));
    CHECK(convert_ordinary_to_odd(OrdinaryCF{0, {3}}) == zero({{1, 3}}));
    // b_{i+1} = 1 takes the second identity
    CHECK(convert_ordinary_to_odd(OrdinaryCF{0, {2, 1, 2}}) == zero({{1, 3}, {-1, 3}}));
    CHECK(convert_ordinary_to_odd(OrdinaryCF{1, {}}) == zero({{1, 1}}));
    CHECK_THROWS_AS(convert_ordinary_to_odd(OrdinaryCF{2, {3}}), std::domain_error);
}

TEST_CASE("sums of partial quotients") {
    CHECK(sum_S0(expand_odd_zero(Rational(2, 5))) == 5);
    CHECK(sum_S0(expand_odd_zero(Rational(1, 2))) == 2);
    CHECK(sum_S(expand_odd_one(Rational(1, 2))) == 3);
    for (const auto& x : random_rationals(100, 500, 7))
        CHECK(sum_S(expand_odd_one(x)) - sum_S0(expand_odd_zero(Rational(1) - x)) == 1);
}

TEST_CASE("validation") {
    auto v = validate(zero({{1, 1}, {-1, 1}, {1, 1}}));
    REQUIRE(v);
    CHECK(v->clause == "a_1 + e_2 = 0 < 2");
    v = validate(zero({{1, 2}, {1, 1}}));
    REQUIRE(v);
    CHECK(v->clause == "a_1 = 2 is even");
    CHECK_FALSE(validate(zero({{1, 3}, {-1, 1}, {1, 1}})));
    // trailing -1/1 is only acceptable in a prefix
    CHECK(validate(zero({{1, 3}, {-1, 1}})));
    CHECK_FALSE(validate(zero({{1, 3}, {-1, 1}}), true));
}

TEST_CASE("trailing normalization") {
    CHECK(normalize_trailing(zero({{1, 3}, {-1, 1}})) == zero({{1, 1}, {1, 1}}));
    CHECK(normalize_trailing(zero({{1, 3}})) == zero({{1, 3}}));
    CHECK_THROWS_AS(normalize_trailing(zero({{1, 1}, {-1, 1}})), std::domain_error);
}

TEST_CASE("parsing") {
    const auto odd = parse_cf("[0; 1/3, -1/1, 1/1]");
    REQUIRE(std::holds_alternative<OddCF>(odd));
    CHECK(std::get<OddCF>(odd) == zero({{1, 3}, {-1, 1}, {1, 1}}));
    const auto ord = parse_cf("[0; 2, 2]");
    REQUIRE(std::holds_alternative<OrdinaryCF>(ord));
    CHECK(std::get<OrdinaryCF>(ord) == OrdinaryCF{0, {2, 2}});
    CHECK(std::holds_alternative<OrdinaryCF>(parse_cf("[7;]")));
    try {
        parse_cf("[0; 1/4]");
        FAIL("no exception");
    } catch (const ParseError& e) {
        CHECK(e.position() == 6);
        CHECK(std::string(e.what()).find("even partial quotient 4") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_cf("[0; 2, 2"), ParseError);
    CHECK_THROWS_AS(parse_cf("[0; 1/3] x"), ParseError);
    CHECK_THROWS_AS(parse_odd_cf("[2; 1/3]"), ParseError);
    CHECK_THROWS_AS(parse_cf("[0; 0]"), ParseError);
    CHECK(parse_odd_cf("[0; 1/3, -1/1]", true) == zero({{1, 3}, {-1, 1}}));
    CHECK_THROWS_AS(parse_odd_cf("[0; 1/3, -1/1]"), ParseError);
}

TEST_CASE("formatting round trips") {
    CHECK(format_cf(zero({{1, 3}, {-1, 1}, {1, 1}})) == "[0; 1/3, -1/1, 1/1]");
    CHECK(format_cf(OrdinaryCF{0, {2, 2}}) == "[0; 2, 2]");
    CHECK(format_cf(OrdinaryCF{7, {}}) == "[7;]");
    for (const auto& x : farey_fractions(25)) {
        CHECK(eval(parse_cf(format_cf(expand_odd_zero(x)))) == x);
        CHECK(eval(parse_cf(format_cf(expand_odd_one(x)))) == x);
        CHECK(eval(parse_cf(format_cf(expand_ordinary(x)))) == x);
    }
}
