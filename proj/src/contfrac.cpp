#include "oddcf/contfrac.hpp"

#include <cassert>
#include <cctype>
#include <stdexcept>

namespace oddcf {

OddDivision odd_div(Quotient a, Quotient b) {
    if (b == 0) throw std::domain_error("odd division by zero");
    if (a < 1 || b < 1) throw std::domain_error("odd division needs positive operands");
    const Quotient twice = 2 * b;
    const Quotient k = a / twice + (a % twice != 0 ? 1 : 0);
    const Quotient q = 2 * k - 1;
    return {q, a - b * q};
}

namespace {

void require_unit_interval(const Rational& x) {
    if (x.sign() < 0 || x > Rational(1))
        throw std::domain_error("argument " + x.str() + " outside [0, 1]");
}

}  // namespace

OrdinaryCF expand_ordinary(const Rational& x) {
    OrdinaryCF cf;
    Integer p = x.num();
    Integer q = x.den();
    Integer b;
    mpz_fdiv_qr(b.get_mpz_t(), p.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    cf.b0 = to_int64(b);
    while (p != 0) {
        // continue with q/p
        Integer r;
        mpz_fdiv_qr(b.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
        cf.terms.push_back(to_int64(b));
        q = p;
        p = r;
    }
    return canonicalize(std::move(cf));
}

Rational eval_ordinary(const OrdinaryCF& cf) {
    if (cf.terms.empty()) return Rational(cf.b0);
    Rational v(cf.terms.back());
    for (auto it = cf.terms.rbegin() + 1; it != cf.terms.rend(); ++it) v = Rational(*it) + Rational(1) / v;
    return Rational(cf.b0) + Rational(1) / v;
}

OrdinaryCF canonicalize(OrdinaryCF cf) {
    for (Quotient b : cf.terms)
        if (b < 1) throw std::domain_error("ordinary partial quotients must be positive");
    if (!cf.terms.empty() && cf.terms.back() == 1) {
        cf.terms.pop_back();
        if (cf.terms.empty()) ++cf.b0;
        else ++cf.terms.back();
    }
    return cf;
}

OrdinaryCF reflect(const OrdinaryCF& input) {
    const OrdinaryCF cf = canonicalize(input);
    if (cf.terms.empty()) {
        if (cf.b0 == 0) return OrdinaryCF{1, {}};
        if (cf.b0 == 1) return OrdinaryCF{0, {}};
    }
    if (cf.b0 != 0) throw std::domain_error("reflection needs a value in [0, 1]");
    OrdinaryCF out{0, {}};
    if (cf.terms.front() >= 2) {
        out.terms.push_back(1);
        out.terms.push_back(cf.terms.front() - 1);
        out.terms.insert(out.terms.end(), cf.terms.begin() + 1, cf.terms.end());
    } else {
        // 1 - 1/(1 + t) = 1/(1 + 1/t)
        out.terms.push_back(1 + cf.terms[1]);
        out.terms.insert(out.terms.end(), cf.terms.begin() + 2, cf.terms.end());
    }
    return canonicalize(std::move(out));
}

OddCF expand_odd_zero(const Rational& x) {
    require_unit_interval(x);
    OddCF cf{Form::zero, {}};
    // x = num/den = sign/(den/num); den = num*a + r
    Integer num = x.num();
    Integer den = x.den();
    int sign = 1;
    while (num != 0) {
        Integer k;
        mpz_cdiv_q(k.get_mpz_t(), den.get_mpz_t(), Integer(2 * num).get_mpz_t());
        const Integer q = 2 * k - 1;
        const Integer r = den - num * q;
        cf.terms.push_back({sign, to_int64(q)});
        sign = sgn(r) < 0 ? -1 : 1;
        den = num;
        num = sign < 0 ? Integer(-r) : r;
    }
    return cf;
}

OddCF expand_odd_one(const Rational& x) {
    require_unit_interval(x);
    OddCF cf = expand_odd_zero(Rational(1) - x);
    cf.form = Form::one;
    if (!cf.terms.empty()) cf.terms.front().sign = -cf.terms.front().sign;
    return cf;
}

Rational eval_odd(const OddCF& cf) {
    Rational tail;
    for (auto it = cf.terms.rbegin(); it != cf.terms.rend(); ++it) {
        const Rational denom = Rational(it->a) + tail;
        assert(!denom.is_zero());
        if (denom.is_zero()) throw std::domain_error("degenerate odd continued fraction");
        tail = Rational(it->sign) / denom;
    }
    return cf.form == Form::one ? Rational(1) + tail : tail;
}

OddCF convert_ordinary_to_odd(const OrdinaryCF& input) {
    const OrdinaryCF cf = canonicalize(input);
    OddCF out{Form::zero, {}};
    if (cf.b0 == 1 && cf.terms.empty()) {
        out.terms.push_back({1, 1});
        return out;
    }
    if (cf.b0 != 0) throw std::domain_error("conversion needs b0 = 0 and a value in [0, 1]");
    auto& t = out.terms;
    for (Quotient b : cf.terms) t.push_back({1, b});

    for (std::size_t i = 0;;) {
        while (i < t.size() && t[i].a % 2 != 0) ++i;
        if (i == t.size()) break;
        if (i + 1 == t.size()) {
            // b + 0 = (b - 1) + 1/1
            --t[i].a;
            t.push_back({1, 1});
            break;
        }
        assert(t[i + 1].sign == 1);
        const Quotient next = t[i + 1].a;
        ++t[i].a;
        if (next > 1) {
            // b + 1/(c + α) = (b + 1) - 1/(1 + 1/(c - 1 + α))
            t[i + 1] = {-1, 1};
            t.insert(t.begin() + static_cast<std::ptrdiff_t>(i) + 2, SignedQuotient{1, next - 1});
            i += 2;
        } else if (i + 2 < t.size()) {
            // b + 1/(1 + 1/(c + α)) = (b + 1) - 1/(c + 1 + α)
            const Quotient c = t[i + 2].a;
            t[i + 1] = {-1, c + 1};
            t.erase(t.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            i += 1;
        } else {
            // b + 1/1 = b + 1
            t.pop_back();
        }
    }
    return out;
}

Quotient sum_S0(const OddCF& cf) {
    Quotient s = 0;
    for (const auto& term : cf.terms) s += term.a;
    return s;
}

Quotient sum_S(const OddCF& cf) { return 1 + sum_S0(cf); }

std::optional<Violation> validate(const OddCF& cf, bool prefix) {
    const auto& t = cf.terms;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::string idx = std::to_string(i + 1);
        if (t[i].sign != 1 && t[i].sign != -1)
            return Violation{i, "e_" + idx + " is not +1 or -1"};
        if (t[i].a < 1) return Violation{i, "a_" + idx + " = " + std::to_string(t[i].a) + " is not positive"};
        if (t[i].a % 2 == 0) return Violation{i, "a_" + idx + " = " + std::to_string(t[i].a) + " is even"};
    }
    if (!t.empty()) {
        const int want = cf.form == Form::zero ? 1 : -1;
        if (t.front().sign != want)
            return Violation{0, std::string("e_1 must be ") + (want > 0 ? "+1" : "-1") +
                                    (cf.form == Form::zero ? " in form zero" : " in form one")};
    }
    for (std::size_t j = 0; j + 1 < t.size(); ++j) {
        const Quotient s = t[j].a + t[j + 1].sign;
        if (s < 2)
            return Violation{j + 1, "a_" + std::to_string(j + 1) + " + e_" + std::to_string(j + 2) + " = " +
                                        std::to_string(s) + " < 2"};
    }
    if (!prefix && !t.empty()) {
        const bool leading_forced = cf.form == Form::one && t.size() == 1;
        if (t.back().a == 1 && t.back().sign != 1 && !leading_forced)
            return Violation{t.size() - 1, "last quotient is 1 but e_" + std::to_string(t.size()) + " = -1"};
    }
    return std::nullopt;
}

OddCF normalize_trailing(OddCF cf) {
    auto& t = cf.terms;
    if (t.empty() || !(t.back().a == 1 && t.back().sign == -1)) return cf;
    if (t.size() == 1) {
        if (cf.form == Form::one) return cf;
        throw std::domain_error("cannot normalize a lone -1/1");
    }
    SignedQuotient& prev = t[t.size() - 2];
    if (prev.a < 3) throw std::domain_error("cannot normalize trailing -1/1 after a quotient of 1");
    prev.a -= 2;
    t.back().sign = 1;
    return cf;
}

namespace {

class CfParser {
public:
    explicit CfParser(std::string_view text, bool prefix = false) : s_(text), prefix_(prefix) {}

    ContinuedFraction parse(int want) {  // 0 = either, 1 = ordinary, 2 = odd
        skip();
        expect('[');
        skip();
        const std::size_t b0_pos = pos_;
        const Integer b0 = integer(true);
        skip();
        expect(';');
        skip();
        if (peek() == ']') {
            ++pos_;
            finish();
            if (want == 2) {
                if (b0 != 0 && b0 != 1) throw ParseError(b0_pos, "leading term of an odd fraction must be 0 or 1");
                return OddCF{b0 == 0 ? Form::zero : Form::one, {}};
            }
            return OrdinaryCF{narrow(b0, b0_pos), {}};
        }
        const bool odd = want == 2 || (want == 0 && first_term_is_odd());
        if (odd) {
            if (b0 != 0 && b0 != 1) throw ParseError(b0_pos, "leading term of an odd fraction must be 0 or 1");
            return odd_terms(b0 == 0 ? Form::zero : Form::one);
        }
        return ordinary_terms(narrow(b0, b0_pos));
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void expect(char c) {
        if (peek() != c) throw ParseError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    void finish() {
        skip();
        if (pos_ != s_.size()) throw ParseError(pos_, "trailing characters after ']'");
    }

    Integer integer(bool allow_sign) {
        const std::size_t start = pos_;
        std::string digits;
        if (allow_sign && peek() == '-') {
            digits.push_back('-');
            ++pos_;
        }
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(s_[pos_++]);
        if (digits.empty() || digits == "-") throw ParseError(start, "expected an integer");
        return Integer(digits, 10);
    }

    static Quotient narrow(const Integer& z, std::size_t pos) {
        try {
            return to_int64(z);
        } catch (const ResourceError&) {
            throw ParseError(pos, "integer out of range");
        }
    }

    bool first_term_is_odd() const {
        std::size_t p = pos_;
        if (p < s_.size() && s_[p] == '-') ++p;
        while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
        while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
        return p < s_.size() && s_[p] == '/';
    }

    // Consumes ',' and returns true, or ']' and returns false.
    bool separator() {
        skip();
        if (peek() == ',') {
            ++pos_;
            skip();
            return true;
        }
        expect(']');
        return false;
    }

    OrdinaryCF ordinary_terms(Quotient b0) {
        OrdinaryCF cf{b0, {}};
        do {
            const std::size_t at = pos_;
            if (peek() == '-') throw ParseError(at, "ordinary partial quotients must be positive");
            const Integer b = integer(false);
            if (b < 1) throw ParseError(at, "ordinary partial quotients must be positive");
            cf.terms.push_back(narrow(b, at));
        } while (separator());
        finish();
        return canonicalize(std::move(cf));
    }

    OddCF odd_terms(Form form) {
        OddCF cf{form, {}};
        std::vector<std::size_t> positions;
        do {
            const std::size_t at = pos_;
            const Integer numer = integer(true);
            if (numer != 1 && numer != -1) throw ParseError(at, "numerator of an odd term must be 1 or -1");
            skip();
            expect('/');
            skip();
            const std::size_t q_at = pos_;
            if (peek() == '-') throw ParseError(q_at, "odd partial quotients must be positive");
            const Integer a = integer(false);
            if (a < 1) throw ParseError(q_at, "odd partial quotients must be positive");
            if (a % 2 == 0)
                throw ParseError(q_at, "even partial quotient " + a.get_str() + " in odd continued fraction");
            cf.terms.push_back({numer < 0 ? -1 : 1, narrow(a, q_at)});
            positions.push_back(at);
        } while (separator());
        finish();
        if (auto v = validate(cf, prefix_))
            throw ParseError(positions[v->index], "invalid odd continued fraction: " + v->clause);
        return cf;
    }

    std::string_view s_;
    bool prefix_;
    std::size_t pos_ = 0;
};

}  // namespace

ContinuedFraction parse_cf(std::string_view text) { return CfParser(text).parse(0); }

OddCF parse_odd_cf(std::string_view text, bool prefix) { return std::get<OddCF>(CfParser(text, prefix).parse(2)); }

OrdinaryCF parse_ordinary_cf(std::string_view text) { return std::get<OrdinaryCF>(CfParser(text).parse(1)); }

std::string format_cf(const OrdinaryCF& cf) {
    std::string out = "[" + std::to_string(cf.b0) + ";";
    for (std::size_t i = 0; i < cf.terms.size(); ++i) out += (i == 0 ? " " : ", ") + std::to_string(cf.terms[i]);
    return out + "]";
}

std::string format_cf(const OddCF& cf) {
    std::string out = cf.form == Form::zero ? "[0;" : "[1;";
    for (std::size_t i = 0; i < cf.terms.size(); ++i) {
        out += i == 0 ? " " : ", ";
        if (cf.terms[i].sign < 0) out += "-";
        out += "1/" + std::to_string(cf.terms[i].a);
    }
    return out + "]";
}

std::string format_cf(const ContinuedFraction& cf) {
    return std::visit([](const auto& c) { return format_cf(c); }, cf);
}

Rational eval(const ContinuedFraction& cf) {
    if (const auto* o = std::get_if<OddCF>(&cf)) return eval_odd(*o);
    return eval_ordinary(std::get<OrdinaryCF>(cf));
}

}  // namespace oddcf
