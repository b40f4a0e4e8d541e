#include "oddcf/distribution.hpp"

#include <stdexcept>

namespace oddcf {

namespace {

const CubicNumber& inverse_lambda() {
    static const CubicNumber inv(-1, -1, 1);  // L^2 - L - 1
    return inv;
}

void require_unit_interval(const Rational& x) {
    if (x.sign() < 0 || x > Rational(1))
        throw std::domain_error("argument " + x.str() + " outside [0, 1]");
}

void require_positive_index(int n) {
    if (n < 1) throw std::domain_error("functional equations need n >= 1");
}

}  // namespace

std::vector<SeriesTerm> series_terms(const OddCF& cf) {
    std::vector<SeriesTerm> out;
    out.reserve(cf.terms.size());
    int e = 1;
    std::int64_t s = 0;
    for (const auto& t : cf.terms) {
        e *= -t.sign;
        s += t.a;
        out.push_back({e, s - 1});
    }
    return out;
}

CubicNumber series_sum(const std::vector<SeriesTerm>& terms) {
    CubicNumber sum;
    CubicNumber power(1);
    std::int64_t current = 0;
    for (const auto& t : terms) {
        power *= inverse_lambda().pow(t.power - current);
        current = t.power;
        if (t.sign > 0) sum += power;
        else sum -= power;
    }
    return sum;
}

CubicNumber F0_exact(const Rational& x) {
    require_unit_interval(x);
    return -series_sum(series_terms(expand_odd_zero(x)));
}

CubicNumber F_exact(const Rational& x) {
    require_unit_interval(x);
    return CubicNumber(1) - series_sum(series_terms(expand_odd_one(x)));
}

CubicNumber ordinary_series(const OrdinaryCF& input) {
    OrdinaryCF cf = canonicalize(input);
    if (cf.b0 == 1 && cf.terms.empty()) cf = OrdinaryCF{0, {1}};
    if (cf.b0 != 0) throw std::domain_error("ordinary series needs a value in [0, 1]");
    const CubicNumber even_weight = CubicNumber(1) + inverse_lambda();
    CubicNumber sum;
    CubicNumber power(1);
    std::int64_t exponent = 0;  // S_i - 1
    std::int64_t s = 0;
    for (std::size_t i = 0; i < cf.terms.size(); ++i) {
        const Quotient b = cf.terms[i];
        const bool even = b % 2 == 0;
        s += b + (even ? 1 : 0);
        power *= inverse_lambda().pow(s - 1 - exponent);
        exponent = s - 1;
        const CubicNumber term = even ? even_weight * power : power;
        if (i % 2 == 0) sum += term;  // (-1)^(i+1) with 1-based i
        else sum -= term;
    }
    return CubicNumber(1) - sum;
}

CubicNumber F_from_ordinary(const OrdinaryCF& cf) {
    require_unit_interval(eval_ordinary(cf));
    return ordinary_series(reflect(cf));
}

Enclosure F0_numeric(const OddCF& prefix, unsigned precision_bits, PrefixKind kind) {
    if (prefix.form != Form::zero) throw std::domain_error("F0 needs a form-zero prefix");
    if (auto v = validate(prefix, kind == PrefixKind::partial))
        throw std::domain_error("invalid prefix: " + v->clause);
    const auto terms = series_terms(prefix);
    const CubicNumber partial = -series_sum(terms);
    Enclosure e;
    if (kind == PrefixKind::complete) {
        e = enclose(partial, precision_bits);
    } else {
        // |tail| <= sum_{j > A_k} L^-j = L^-A_k / (L - 1)
        const std::int64_t last = terms.empty() ? -1 : terms.back().power;
        const CubicNumber tail =
            inverse_lambda().pow(last) * (CubicNumber::lambda() - CubicNumber(1)).inverse();
        e = {enclose(partial - tail, precision_bits).lo, enclose(partial + tail, precision_bits).hi};
    }
    if (e.lo.sign() < 0) e.lo = Rational(0);
    if (e.hi > Rational(1)) e.hi = Rational(1);
    return e;
}

EquationCheck check_functional_eq_F0(const Rational& x, int n) {
    require_unit_interval(x);
    require_positive_index(n);
    const CubicNumber fx = F0_exact(x);
    const CubicNumber& inv = inverse_lambda();
    EquationCheck out;
    {
        const CubicNumber lhs = fx * inv.pow(2 * n - 1);
        const CubicNumber rhs = inv.pow(2 * n - 2) - F0_exact(Rational(1) / (Rational(2 * n - 1) + x));
        out.first = lhs == rhs;
    }
    {
        const CubicNumber lhs = fx * inv.pow(2 * n);
        const Rational arg = x.is_zero() ? Rational(0) : Rational(1) / (Rational(2 * n) + Rational(1) / x);
        out.second = lhs == F0_exact(arg);
    }
    return out;
}

EquationCheck check_functional_eq_F(const Rational& x, int n) {
    require_unit_interval(x);
    require_positive_index(n);
    const CubicNumber one(1);
    const CubicNumber reflected = one - F_exact(one.coeff(0) - x);
    const CubicNumber& inv = inverse_lambda();
    EquationCheck out;
    {
        const CubicNumber lhs = reflected * inv.pow(2 * n - 1);
        const CubicNumber rhs =
            inv.pow(2 * n - 2) - one + F_exact(Rational(1) - Rational(1) / (Rational(2 * n - 1) + x));
        out.first = lhs == rhs;
    }
    {
        const CubicNumber lhs = reflected * inv.pow(2 * n);
        const Rational inner = x.is_zero() ? Rational(0) : Rational(1) / (Rational(2 * n) + Rational(1) / x);
        out.second = lhs == one - F_exact(Rational(1) - inner);
    }
    return out;
}

bool reflection_holds(const Rational& x) {
    require_unit_interval(x);
    return F_exact(x) == CubicNumber(1) - F0_exact(Rational(1) - x);
}

}  // namespace oddcf
