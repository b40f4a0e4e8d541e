#include "oddcf/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

namespace oddcf {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::from_raw(mpq_class q) {
    Rational r;
    r.q_ = std::move(q);
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

// Reads an optionally signed run of decimal digits starting at `pos`.
Integer read_integer(std::string_view text, std::size_t& pos, bool allow_sign) {
    const std::size_t start = pos;
    std::string digits;
    if (allow_sign && pos < text.size() && text[pos] == '-') {
        digits.push_back('-');
        ++pos;
    }
    const std::size_t first_digit = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        digits.push_back(text[pos]);
        ++pos;
    }
    if (pos == first_digit) throw ParseError(start, "expected an integer");
    return Integer(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    Integer num = read_integer(text, pos, true);
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        const std::size_t den_pos = pos;
        den = read_integer(text, pos, false);
        if (den == 0) throw ParseError(den_pos, "zero denominator");
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw ParseError(pos, "unexpected character in rational");
    return Rational(num, den);
}

Rational mediant(const Rational& a, const Rational& b) {
    return Rational(a.num() + b.num(), a.den() + b.den());
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Integer floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q;
}

Integer ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    return q;
}

namespace {

Integer pow10(unsigned long e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
    return p;
}

Integer round_to_integer(const Rational& r, Rounding mode) {
    switch (mode) {
    case Rounding::down: return floor(r);
    case Rounding::up: return ceil(r);
    case Rounding::nearest: break;
    }
    // half away from zero
    if (r.sign() >= 0) return floor(r + Rational(1, 2));
    return -floor(-r + Rational(1, 2));
}

Rational pow10_rational(long e) {
    if (e >= 0) return Rational(pow10(static_cast<unsigned long>(e)));
    return Rational(Integer(1), pow10(static_cast<unsigned long>(-e)));
}

}  // namespace

std::string to_decimal(const Rational& r, int digits, Rounding mode) {
    if (digits < 0) digits = 0;
    Integer scaled = round_to_integer(r * Rational(pow10(static_cast<unsigned long>(digits))), mode);
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string body = scaled.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits))
            body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
    }
    return (negative ? "-" : "") + body;
}

std::string to_scientific(const Rational& r, int digits, Rounding mode) {
    if (digits < 1) digits = 1;
    if (r.is_zero()) return "0";
    const bool negative = r.sign() < 0;
    const Rational a = abs(r);
    // Directed modes refer to the signed value; flip them for the magnitude.
    Rounding mag_mode = mode;
    if (negative && mode == Rounding::down) mag_mode = Rounding::up;
    else if (negative && mode == Rounding::up) mag_mode = Rounding::down;

    const long bits = static_cast<long>(mpz_sizeinbase(a.num().get_mpz_t(), 2)) -
                      static_cast<long>(mpz_sizeinbase(a.den().get_mpz_t(), 2));
    long e = static_cast<long>(std::floor(static_cast<double>(bits) * std::log10(2.0)));
    while (pow10_rational(e) > a) --e;
    while (pow10_rational(e + 1) <= a) ++e;

    Integer mant = round_to_integer(a * pow10_rational(digits - 1 - e), mag_mode);
    if (mant == pow10(static_cast<unsigned long>(digits))) {
        mant /= 10;
        ++e;
    }
    std::string m = mant.get_str();
    std::string out = negative ? "-" : "";
    out += m.substr(0, 1);
    if (m.size() > 1) out += "." + m.substr(1);
    out += (e < 0 ? "e-" : "e+");
    const std::string es = std::to_string(e < 0 ? -e : e);
    out += (es.size() < 2 ? "0" : "") + es;
    return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::int64_t to_int64(const Integer& z) {
    static const Integer limit = Integer(1) << 62;
    if (z >= limit || z <= -limit) throw ResourceError("integer exceeds the 62-bit quotient range");
    return z.get_si();
}

}  // namespace oddcf
