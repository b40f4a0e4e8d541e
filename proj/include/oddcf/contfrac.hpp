#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oddcf/rational.hpp"

namespace oddcf {

using Quotient = std::int64_t;

/// [b0; b1, ..., bl] with b_j >= 1. Canonical when the last term is >= 2.
struct OrdinaryCF {
    Quotient b0 = 0;
    std::vector<Quotient> terms;

    friend bool operator==(const OrdinaryCF&, const OrdinaryCF&) = default;
};

/// Leading term of an odd continued fraction: 0 + ... or 1 + ...
enum class Form { zero, one };

struct SignedQuotient {
    int sign = 1;  // +1 or -1
    Quotient a = 1;

    friend bool operator==(const SignedQuotient&, const SignedQuotient&) = default;
};

/// [0 or 1; e1/a1, ..., el/al] with every a_i odd. Empty terms denote 0 in
/// form zero and 1 in form one.
struct OddCF {
    Form form = Form::zero;
    std::vector<SignedQuotient> terms;

    friend bool operator==(const OddCF&, const OddCF&) = default;
};

struct OddDivision {
    Quotient q;
    Quotient r;

    friend bool operator==(const OddDivision&, const OddDivision&) = default;
};

/// a = b*q + r with q odd and -b < r <= b. Requires a, b >= 1.
OddDivision odd_div(Quotient a, Quotient b);

OrdinaryCF expand_ordinary(const Rational& x);
Rational eval_ordinary(const OrdinaryCF& cf);

/// Merges a trailing 1 into the previous term ([.., b, 1] -> [.., b+1]).
OrdinaryCF canonicalize(OrdinaryCF cf);

/// Ordinary expansion of 1 - x for x in [0, 1], built from the quotients of x.
OrdinaryCF reflect(const OrdinaryCF& cf);

/// Form-zero odd expansion of x in [0, 1] by iterated odd division.
OddCF expand_odd_zero(const Rational& x);

/// Form-one odd expansion of x in [0, 1]: expand 1 - x in form zero and flip e1.
OddCF expand_odd_one(const Rational& x);

Rational eval_odd(const OddCF& cf);

/// Rewrites an ordinary fraction with b0 = 0 (or the integer 1) into form zero
/// by applying the even-quotient identities left to right.
OddCF convert_ordinary_to_odd(const OrdinaryCF& cf);

/// Sum of the partial quotients of a form-zero fraction.
Quotient sum_S0(const OddCF& cf);

/// Sum of the partial quotients of a form-one fraction, leading 1 included.
Quotient sum_S(const OddCF& cf);

struct Violation {
    std::size_t index;  // zero-based term index the clause refers to
    std::string clause;
};

/// First violated invariant, if any. With `prefix` set the final-term
/// uniqueness rule is waived.
std::optional<Violation> validate(const OddCF& cf, bool prefix = false);

/// Replaces a trailing -1/1 by +1/1 with the previous quotient lowered by 2.
OddCF normalize_trailing(OddCF cf);

using ContinuedFraction = std::variant<OrdinaryCF, OddCF>;

/// Parses either grammar; an empty term list reads as an ordinary fraction.
ContinuedFraction parse_cf(std::string_view text);
/// With `prefix` set the text may stop where a complete expansion could not.
OddCF parse_odd_cf(std::string_view text, bool prefix = false);
OrdinaryCF parse_ordinary_cf(std::string_view text);

std::string format_cf(const OrdinaryCF& cf);
std::string format_cf(const OddCF& cf);
std::string format_cf(const ContinuedFraction& cf);

Rational eval(const ContinuedFraction& cf);

}  // namespace oddcf
