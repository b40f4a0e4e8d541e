#pragma once

#include <cstdint>
#include <vector>

#include "oddcf/contfrac.hpp"
#include "oddcf/cubic.hpp"

namespace oddcf {

/// One term E_i / L^A_i of the series for F and F0.
struct SeriesTerm {
    int sign;            // E_i = prod_{j<=i} (-e_j)
    std::int64_t power;  // A_i = a_1 + ... + a_i - 1

    friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

std::vector<SeriesTerm> series_terms(const OddCF& cf);

/// sum_i E_i * L^-A_i, exactly.
CubicNumber series_sum(const std::vector<SeriesTerm>& terms);

/// F0(x) = -sum E_i L^-A_i over the form-zero expansion of x in [0, 1].
CubicNumber F0_exact(const Rational& x);

/// F(x) = 1 - sum E_i L^-A_i over the form-one expansion of x in [0, 1].
CubicNumber F_exact(const Rational& x);

/// The ordinary-quotient series 1 - sum (-1)^(i+1) c_i / L^(S_i - 1), with
/// c_i = 1 for odd b_i, 1 + 1/L for even b_i and S_i = b_1 + ... + b_i plus the
/// number of even b_j, j <= i. Evaluated on the quotients of x this equals
/// 1 - F0(x), i.e. F(1 - x).
CubicNumber ordinary_series(const OrdinaryCF& cf);

/// F(x) from the ordinary quotients of x: the ordinary series of 1 - x, whose
/// quotients are read off those of x.
CubicNumber F_from_ordinary(const OrdinaryCF& cf);

enum class PrefixKind { partial, complete };

/// Enclosure of F0 over every extension of a form-zero prefix. A partial
/// prefix adds the tail bound L^-A_k / (L - 1); the result is clipped to [0, 1].
Enclosure F0_numeric(const OddCF& prefix, unsigned precision_bits, PrefixKind kind = PrefixKind::partial);

struct EquationCheck {
    bool first = false;
    bool second = false;

    bool both() const { return first && second; }
};

/// F0(x)/L^(2n-1) = 1/L^(2n-2) - F0(1/(2n-1+x)) and F0(x)/L^(2n) = F0(1/(2n+1/x)).
/// At x = 0 the second argument is taken as its limit 0.
EquationCheck check_functional_eq_F0(const Rational& x, int n);

/// (1-F(1-x))/L^(2n-1) = 1/L^(2n-2) - 1 + F(1 - 1/(2n-1+x)) and
/// (1-F(1-x))/L^(2n) = 1 - F(1 - 1/(2n+1/x)), checked as displayed.
EquationCheck check_functional_eq_F(const Rational& x, int n);

/// F(x) == 1 - F0(1 - x), exactly.
bool reflection_holds(const Rational& x);

}  // namespace oddcf
