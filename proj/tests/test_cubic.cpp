#include "doctest.h"
#include "oddcf/cubic.hpp"
#include "oracle.hpp"

using namespace oddcf;

namespace {
const CubicNumber L = CubicNumber::lambda();
}

TEST_CASE("reduction by the minimal polynomial") {
    CHECK(L * L * L == CubicNumber(1, 1, 1));
    CHECK((L * L) * (L * L) == CubicNumber(1, 2, 2));
    CHECK(L.pow(3) == CubicNumber(1, 1, 1));
    CHECK(L.pow(0) == CubicNumber(1));
    const CubicNumber a(Rational(1, 2), Rational(-3), Rational(2, 7));
    CHECK(a * CubicNumber(1) == a);
}

TEST_CASE("inverses") {
    CHECK(L.inverse() == CubicNumber(-1, -1, 1));
    CHECK(CubicNumber(1).inverse() == CubicNumber(1));
    CHECK((L * L).inverse() == L.inverse() * L.inverse());
    CHECK(L.pow(-2) * L.pow(2) == CubicNumber(1));
    const CubicNumber a(Rational(3), Rational(-1, 2), Rational(5, 3));
    CHECK(a * a.inverse() == CubicNumber(1));
    CHECK_THROWS_AS(CubicNumber().inverse(), std::domain_error);
    CHECK_THROWS_AS(CubicNumber().pow(-1), std::domain_error);
}

TEST_CASE("lambda enclosure") {
    const Enclosure e2 = lambda_enclosure(2);
    CHECK(e2.width() <= Rational(1, 4));
    const Enclosure e40 = lambda_enclosure(40);
    CHECK(e40.contains(oracle::decimal("1.839286755214161")));
    CHECK(e40.width() == Rational(Integer(1), Integer(1) << 40));
    // wide precision goes through the refined path and must still be the
    // dyadic bracket
    const Enclosure e200 = lambda_enclosure(200);
    CHECK(e200.width() == Rational(Integer(1), Integer(1) << 200));
    CHECK(lambda_polynomial(e200.lo).sign() < 0);
    CHECK(lambda_polynomial(e200.hi).sign() > 0);
    CHECK(abs(e200.lo - oracle::decimal(oracle::kLambda)) < Rational(Integer(1), Integer("1" + std::string(38, '0'))));
}

TEST_CASE("enclosures of field elements") {
    CHECK(enclose(CubicNumber(1), 10) == Enclosure{Rational(1), Rational(1)});
    const Enclosure inv = enclose(L.inverse(), 40);
    CHECK(inv.contains(oracle::decimal("0.5436890126920763")));
    CHECK(inv.width() <= Rational(Integer(1), Integer(1) << 40));
    const Enclosure q = enclose((L - CubicNumber(1)) / L, 40);
    CHECK(q.contains(oracle::decimal("0.4563109873079236")));
    CHECK(oracle::close_to(L, oracle::kLambda, 38));
}

TEST_CASE("relative enclosures of tiny values") {
    const CubicNumber tiny = L.pow(-4000);
    const Enclosure e = enclose_relative(tiny, 32);
    CHECK(e.lo.sign() > 0);
    CHECK(e.width() <= e.lo / Rational(Integer(1) << 31));
    CHECK_THROWS_AS(enclose_relative(CubicNumber(), 8), std::domain_error);
}

TEST_CASE("sign and comparison") {
    CHECK(sign(CubicNumber()) == Sign::zero);
    CHECK(sign(L - CubicNumber(1)) == Sign::positive);
    CHECK(sign(CubicNumber(1) - L) == Sign::negative);
    // 1/lambda - 0.5436890126920764 is about -4e-17
    const CubicNumber close = L.inverse() - CubicNumber(oracle::decimal("0.5436890126920764"));
    CHECK(sign(close) == Sign::negative);
    CHECK(compare(L, CubicNumber(Rational(9, 5))) == std::strong_ordering::greater);
}

TEST_CASE("decimal rendering") {
    CHECK(to_decimal(L, 15) == "1.839286755214161");
    CHECK(to_decimal(L.inverse(), 10) == "0.5436890127");
    CHECK(to_decimal(CubicNumber(Rational(1, 8)), 3) == "0.125");
    CHECK(L.inverse().str() == "-1 + -1*L + 1*L^2");
}

TEST_CASE("interval arithmetic") {
    const Enclosure a{Rational(1), Rational(2)};
    const Enclosure b{Rational(-1), Rational(3)};
    CHECK(a + b == Enclosure{Rational(0), Rational(5)});
    CHECK(a - b == Enclosure{Rational(-2), Rational(3)});
    CHECK(a * b == Enclosure{Rational(-2), Rational(6)});
    CHECK(b / a == Enclosure{Rational(-1), Rational(3)});
    CHECK_THROWS_AS(a / b, std::domain_error);
}
