#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "oddcf/rational.hpp"

namespace oddcf {

/// Element c0 + c1*L + c2*L^2 of Q(L), where L is the real root of
/// t^3 - t^2 - t - 1 (the tribonacci constant, ~1.8392867552).
///
/// The minimal polynomial has no rational root, so {1, L, L^2} is a basis and
/// equality is coefficient-wise.
class CubicNumber {
public:
    CubicNumber() = default;
    CubicNumber(Rational c0, Rational c1 = Rational(), Rational c2 = Rational())
        : c_{std::move(c0), std::move(c1), std::move(c2)} {}
    CubicNumber(int c0) : CubicNumber(Rational(c0)) {}

    static CubicNumber lambda() { return CubicNumber(0, 1, 0); }

    const Rational& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero(); }
    bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero(); }

    CubicNumber operator-() const { return {-c_[0], -c_[1], -c_[2]}; }
    CubicNumber& operator+=(const CubicNumber& o);
    CubicNumber& operator-=(const CubicNumber& o);
    CubicNumber& operator*=(const CubicNumber& o);
    CubicNumber& operator/=(const CubicNumber& o);

    friend CubicNumber operator+(CubicNumber a, const CubicNumber& b) { return a += b; }
    friend CubicNumber operator-(CubicNumber a, const CubicNumber& b) { return a -= b; }
    friend CubicNumber operator*(CubicNumber a, const CubicNumber& b) { return a *= b; }
    friend CubicNumber operator/(CubicNumber a, const CubicNumber& b) { return a /= b; }

    friend bool operator==(const CubicNumber&, const CubicNumber&) = default;

    /// Throws std::domain_error("division by zero in Q(λ)") for zero.
    CubicNumber inverse() const;

    /// Exact power by repeated squaring; negative k needs a nonzero base.
    CubicNumber pow(std::int64_t k) const;

    /// `c0 + c1*L + c2*L^2` with coefficients in p/q form.
    std::string str() const;

private:
    std::array<Rational, 3> c_;
};

/// Rational interval [lo, hi] certified to contain a real value.
struct Enclosure {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / Rational(2); }
    bool contains(const Rational& r) const { return lo <= r && r <= hi; }
    bool contains(const Enclosure& e) const { return lo <= e.lo && e.hi <= hi; }
    bool excludes_zero() const { return lo.sign() > 0 || hi.sign() < 0; }

    friend bool operator==(const Enclosure&, const Enclosure&) = default;
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
/// Throws std::domain_error when b contains zero.
Enclosure operator/(const Enclosure& a, const Enclosure& b);

/// Dyadic bracket [k/2^b, (k+1)/2^b] around L with p(lo) < 0 < p(hi), the
/// interval reached by `b` bisection steps from [1, 2].
Enclosure lambda_enclosure(unsigned precision_bits);

/// One bisection step on a bracket of L.
Enclosure bisect_lambda(const Enclosure& bracket);

/// Value of t^3 - t^2 - t - 1.
Rational lambda_polynomial(const Rational& t);

/// Certified enclosure of `a` with width <= 2^-precision_bits.
Enclosure enclose(const CubicNumber& a, unsigned precision_bits);

/// Enclosure of a nonzero `a` whose width is at most 2^-relative_bits * |a|.
Enclosure enclose_relative(const CubicNumber& a, unsigned relative_bits);

enum class Sign { negative, zero, positive };

Sign sign(const CubicNumber& a);

/// Ordering of the real values.
std::strong_ordering compare(const CubicNumber& a, const CubicNumber& b);

/// Correctly rounded fixed-point decimal of the real value.
std::string to_decimal(const CubicNumber& a, int digits);

}  // namespace oddcf
