#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "oddcf/cubic.hpp"
#include "oddcf/tree.hpp"

namespace oddcf {

// Endpoint convention: Y_n holds interior rationals only (X_1 = {1/2}); M_n is
// the reflection of Y_{n-1} together with the point 1.

/// #{xi in sorted_y : xi <= x} / |sorted_y|.
Rational empirical_F0(std::span<const Rational> sorted_y, const Rational& x);
Rational empirical_F0(int n, const Rational& x);

/// #{xi in sorted_y : xi < x} / |sorted_y|, the left limit of the step CDF.
Rational empirical_F0_strict(std::span<const Rational> sorted_y, const Rational& x);

/// #{xi in M_n : xi <= x} / |M_n|, M_n = {1 - xi : xi in Y_{n-1}} u {1}.
Rational empirical_F(std::span<const Rational> sorted_y_prev, const Rational& x);
Rational empirical_F(int n, const Rational& x);

struct ConvergenceRow {
    int n = 0;
    Rational x;
    Rational empirical;
    Enclosure exact;
    Rational abs_error_bound;  // max |empirical - v| over v in exact
};

/// Rows ordered by n, then by grid position.
std::vector<ConvergenceRow> convergence_table(int max_n, std::span<const Rational> grid, unsigned precision_bits = 64);

/// Largest abs_error_bound among the rows for level n.
Rational max_error(std::span<const ConvergenceRow> rows, int n);

enum class RatioClass { lambda_minus_one, inv_lambda_minus_one, lambda, inv_lambda, other };

std::string to_string(RatioClass c);

enum class AuditTarget { F, F0 };

struct AuditRow {
    int level = 0;
    Rational x;
    Rational y;
    Rational mediant;
    CubicNumber ratio;       // (G(m) - G(x)) / (G(y) - G(m))
    CubicNumber normalized;  // (G(m) - G(x)) / (G(y) - G(x))
    RatioClass ratio_class = RatioClass::other;
    bool normalized_in_set = false;
    NodeType node_type = NodeType::first;
};

struct AuditReport {
    std::vector<AuditRow> rows;
    std::array<std::size_t, 5> class_counts{};
    bool all_members = true;     // every ratio in {L-1, 1/(L-1), L, 1/L}
    bool all_normalized = true;  // every normalized ratio in {L/(L+1), 1/(L+1), (L-1)/L, 1/L}
    bool all_correlated = true;  // first type <=> ratio in {L-1, 1/(L-1)}
};

/// Ratio audit over the consecutive pairs x < y of the Stern-Brocot sequence
/// F_level. For G = F the node type of a mediant is read from its form-one
/// expansion, for G = F0 from its form-zero expansion.
AuditReport mediant_ratio_audit(int level, AuditTarget target = AuditTarget::F);

struct ProbeRow {
    Rational x;
    Rational h;
    Enclosure quotient;  // (F(x+h) - F(x-h)) / 2h
};

/// Symmetric difference quotients of F at x. Throws std::domain_error unless
/// 0 < x < 1 and every h satisfies 0 < h <= min(x, 1 - x).
std::vector<ProbeRow> derivative_probe(const Rational& x, std::span<const Rational> steps,
                                       unsigned relative_bits = 32);

/// h = 10^-first, ..., 10^-last.
std::vector<Rational> decimal_steps(int first, int last);

void export_csv(std::ostream& os, std::span<const ConvergenceRow> rows, int digits);
void export_csv(std::ostream& os, const AuditReport& report);
void export_csv(std::ostream& os, std::span<const ProbeRow> rows, int digits);

}  // namespace oddcf
