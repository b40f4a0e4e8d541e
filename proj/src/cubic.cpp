#include "oddcf/cubic.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace oddcf {

CubicNumber& CubicNumber::operator+=(const CubicNumber& o) {
    for (std::size_t i = 0; i < 3; ++i) c_[i] += o.c_[i];
    return *this;
}

CubicNumber& CubicNumber::operator-=(const CubicNumber& o) {
    for (std::size_t i = 0; i < 3; ++i) c_[i] -= o.c_[i];
    return *this;
}

// L^3 = 1 + L + L^2 and L^4 = 1 + 2L + 2L^2.
CubicNumber& CubicNumber::operator*=(const CubicNumber& o) {
    const auto& a = c_;
    const auto& b = o.c_;
    const Rational p0 = a[0] * b[0];
    const Rational p1 = a[0] * b[1] + a[1] * b[0];
    const Rational p2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
    const Rational p3 = a[1] * b[2] + a[2] * b[1];
    const Rational p4 = a[2] * b[2];
    const Rational p4x2 = p4 + p4;
    c_[0] = p0 + p3 + p4;
    c_[1] = p1 + p3 + p4x2;
    c_[2] = p2 + p3 + p4x2;
    return *this;
}

CubicNumber& CubicNumber::operator/=(const CubicNumber& o) { return *this *= o.inverse(); }

CubicNumber CubicNumber::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in Q(λ)");
    if (is_rational()) return CubicNumber(Rational(1) / c_[0]);
    // Columns of the multiplication-by-this matrix are this*1, this*L, this*L^2.
    const CubicNumber col0 = *this;
    const CubicNumber col1 = *this * lambda();
    const CubicNumber col2 = col1 * lambda();
    auto m = [&](int r, int c) -> const Rational& {
        const CubicNumber& col = c == 0 ? col0 : (c == 1 ? col1 : col2);
        return col.coeff(r);
    };
    // Solve M x = e0 by Cramer's rule.
    const Rational minor00 = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    const Rational minor01 = m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0);
    const Rational minor02 = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    const Rational det = m(0, 0) * minor00 - m(0, 1) * minor01 + m(0, 2) * minor02;
    return CubicNumber(minor00 / det, -minor01 / det, minor02 / det);
}

CubicNumber CubicNumber::pow(std::int64_t k) const {
    if (k < 0) {
        if (is_zero()) throw std::domain_error("division by zero in Q(λ)");
        return inverse().pow(-k);
    }
    CubicNumber result(1);
    CubicNumber base = *this;
    auto e = static_cast<std::uint64_t>(k);
    while (e != 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e != 0) base *= base;
    }
    return result;
}

std::string CubicNumber::str() const {
    return c_[0].str() + " + " + c_[1].str() + "*L + " + c_[2].str() + "*L^2";
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Enclosure operator-(const Enclosure& a, const Enclosure& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
    if (!b.excludes_zero()) throw std::domain_error("interval division by an interval containing zero");
    return a * Enclosure{Rational(1) / b.hi, Rational(1) / b.lo};
}

Rational lambda_polynomial(const Rational& t) { return ((t - 1) * t - 1) * t - 1; }

namespace {

// Sign of p(k / 2^b) computed on integers: k^3 - k^2 2^b - k 2^2b - 2^3b.
int poly_sign_dyadic(const Integer& k, unsigned long b) {
    const Integer s = Integer(1) << b;
    const Integer v = ((k - s) * k - s * s) * k - s * s * s;
    return sgn(v);
}

struct LambdaCache {
    std::mutex mutex;
    unsigned long bits = 0;
    Integer k = 1;  // bracket [k/2^bits, (k+1)/2^bits]
};

LambdaCache& lambda_cache() {
    static LambdaCache cache;
    return cache;
}

constexpr unsigned long kBisectionBits = 64;

// Integer k with k/2^b < L < (k+1)/2^b, refined by Newton steps from a coarser bracket.
Integer newton_refine(const Integer& k0, unsigned long b0, unsigned long target) {
    Rational t(k0, Integer(1) << b0);
    unsigned long prec = b0;
    while (prec < target) {
        prec = std::min(target, prec * 2);
        const Rational f = lambda_polynomial(t);
        const Rational df = (Rational(3) * t - 2) * t - 1;
        const Rational next = t - f / df;
        Integer scaled = floor(next * Rational(Integer(1) << prec));
        t = Rational(scaled, Integer(1) << prec);
    }
    Integer k = floor(t * Rational(Integer(1) << target));
    while (poly_sign_dyadic(k + 1, target) <= 0) ++k;
    while (poly_sign_dyadic(k, target) >= 0) --k;
    return k;
}

}  // namespace

Enclosure bisect_lambda(const Enclosure& bracket) {
    const Rational mid = bracket.midpoint();
    if (lambda_polynomial(mid).sign() < 0) return {mid, bracket.hi};
    return {bracket.lo, mid};
}

Enclosure lambda_enclosure(unsigned precision_bits) {
    const unsigned long b = precision_bits;
    LambdaCache& cache = lambda_cache();
    std::lock_guard<std::mutex> lock(cache.mutex);
    if (cache.bits == 0) {
        Enclosure e{Rational(1), Rational(2)};
        for (unsigned long i = 0; i < kBisectionBits; ++i) e = bisect_lambda(e);
        cache.bits = kBisectionBits;
        cache.k = e.lo.num() * ((Integer(1) << kBisectionBits) / e.lo.den());
    }
    if (b > cache.bits) {
        // Nested dyadic brackets: the Newton result is the bisection bracket at b bits.
        cache.k = newton_refine(cache.k, cache.bits, b + 64);
        cache.bits = b + 64;
    }
    const Integer k = cache.k >> (cache.bits - b);
    const Integer den = Integer(1) << b;
    return {Rational(k, den), Rational(k + 1, den)};
}

namespace {

long log2_upper(const Rational& r) {
    if (r.is_zero()) return 0;
    const Rational a = abs(r);
    return static_cast<long>(mpz_sizeinbase(a.num().get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(a.den().get_mpz_t(), 2)) + 1;
}

Enclosure scale(const Rational& c, const Enclosure& e) {
    if (c.sign() >= 0) return {c * e.lo, c * e.hi};
    return {c * e.hi, c * e.lo};
}

}  // namespace

Enclosure enclose(const CubicNumber& a, unsigned precision_bits) {
    if (a.is_rational()) return {a.coeff(0), a.coeff(0)};
    // width <= (|c1| + 4|c2|) * width(L-bracket) since L < 2.
    const Rational growth = abs(a.coeff(1)) + Rational(4) * abs(a.coeff(2));
    const long extra = std::max(0L, log2_upper(growth)) + 1;
    unsigned bits = precision_bits + static_cast<unsigned>(extra);
    const Rational target(Integer(1), Integer(1) << precision_bits);
    for (;;) {
        const Enclosure t = lambda_enclosure(bits);
        const Enclosure t2{t.lo * t.lo, t.hi * t.hi};
        Enclosure r{a.coeff(0), a.coeff(0)};
        r = r + scale(a.coeff(1), t) + scale(a.coeff(2), t2);
        if (r.width() <= target) return r;
        bits += 8;
    }
}

Sign sign(const CubicNumber& a) {
    if (a.is_zero()) return Sign::zero;
    for (unsigned bits = 32;; bits *= 2) {
        const Enclosure e = enclose(a, bits);
        if (e.lo.sign() > 0) return Sign::positive;
        if (e.hi.sign() < 0) return Sign::negative;
    }
}

Enclosure enclose_relative(const CubicNumber& a, unsigned relative_bits) {
    if (a.is_zero()) throw std::domain_error("relative enclosure of zero");
    unsigned bits = 32;
    Enclosure e = enclose(a, bits);
    while (!e.excludes_zero()) {
        bits *= 2;
        e = enclose(a, bits);
    }
    for (;;) {
        const Rational magnitude = e.lo.sign() > 0 ? e.lo : -e.hi;
        if (e.width() * Rational(Integer(1) << relative_bits) <= magnitude) return e;
        const long need = relative_bits - log2_upper(magnitude) + 2;
        bits = static_cast<unsigned>(std::max<long>(need, static_cast<long>(bits) + 1));
        e = enclose(a, bits);
    }
}

std::strong_ordering compare(const CubicNumber& a, const CubicNumber& b) {
    switch (sign(a - b)) {
    case Sign::negative: return std::strong_ordering::less;
    case Sign::zero: return std::strong_ordering::equal;
    case Sign::positive: break;
    }
    return std::strong_ordering::greater;
}

std::string to_decimal(const CubicNumber& a, int digits) {
    if (a.is_rational()) return to_decimal(a.coeff(0), digits);
    // 10^-digits < 2^-(3.33 digits); a few guard bits separate the rounding.
    unsigned bits = static_cast<unsigned>(digits * 10 / 3 + 16);
    for (int attempt = 0; attempt < 16; ++attempt) {
        const Enclosure e = enclose(a, bits);
        const std::string lo = to_decimal(e.lo, digits);
        if (lo == to_decimal(e.hi, digits)) return lo;
        bits += 32;
    }
    return to_decimal(enclose(a, bits).midpoint(), digits);
}

}  // namespace oddcf
