#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace oddcf {

using Integer = mpz_class;

/// Raised when input text does not follow a grammar. `position` is the
/// zero-based offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Raised when an enumeration or expansion would exceed its resource budget.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact fraction num/den, always stored in lowest terms with den > 0.
class Rational {
public:
    Rational() = default;
    Rational(long n) : q_(n) {}
    Rational(int n) : q_(n) {}
    explicit Rational(const Integer& n) : q_(n) {}

    /// Throws std::domain_error when den == 0.
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Accepts `p/q` or `n` in base 10 with an optional leading '-'.
    static Rational parse(std::string_view text);

    const Integer& num() const { return q_.get_num(); }
    const Integer& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    std::string str() const { return q_.get_str(); }
    const mpq_class& raw() const { return q_; }

    Rational operator-() const { return from_raw(-q_); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.q_, b.q_) <=> 0;
    }

    static Rational from_raw(mpq_class q);

private:
    mpq_class q_;
};

/// (a.num + b.num) / (a.den + b.den), canonicalized.
Rational mediant(const Rational& a, const Rational& b);

inline std::strong_ordering compare(const Rational& a, const Rational& b) { return a <=> b; }

Rational abs(const Rational& r);

/// floor(r) as an integer.
Integer floor(const Rational& r);
Integer ceil(const Rational& r);

enum class Rounding { nearest, down, up };

/// Fixed-point decimal with `digits` places after the point.
std::string to_decimal(const Rational& r, int digits, Rounding mode = Rounding::nearest);

/// Scientific notation `d.ddd...e±E` with `digits` significant digits.
std::string to_scientific(const Rational& r, int digits, Rounding mode = Rounding::nearest);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Narrowing with a range check; throws ResourceError on overflow.
std::int64_t to_int64(const Integer& z);

}  // namespace oddcf
