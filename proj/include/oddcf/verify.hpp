#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oddcf/rational.hpp"

namespace oddcf {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20240517;

struct VerifyOptions {
    int max_level = 14;
    std::uint64_t seed = kDefaultSeed;
};

/// arith, field, contfrac, distribution, tree, empirical.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument on
/// an unknown name.
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options = {});

/// Reduced p/q in [0, 1] with q <= max_den, ascending.
std::vector<Rational> farey_fractions(int max_den);

/// Reproducible sample of reduced p/q with 1 <= q <= max_den, in [0, 1] or,
/// with interior set, in (0, 1).
std::vector<Rational> random_rationals(std::size_t count, int max_den, std::uint64_t seed, bool interior = false);

// arith
CheckResult check_rational_canonical(int range);
CheckResult check_mediant_between(std::uint64_t seed, std::size_t count);
CheckResult check_compare_order(std::uint64_t seed, std::size_t count);

// field
CheckResult check_field_axioms(std::uint64_t seed, std::size_t count);
CheckResult check_lambda_power_recurrence(int max_n);
CheckResult check_enclose_sum(std::uint64_t seed, std::size_t count);
CheckResult check_lambda_bisection(unsigned max_bits);
CheckResult check_lambda_certificate();

// contfrac
CheckResult check_roundtrip(int max_den);
CheckResult check_odd_uniqueness(int max_den);
CheckResult check_expansions_valid(int max_den);
CheckResult check_conversion(int max_den);
CheckResult check_odd_div(int limit);
CheckResult check_termination(int max_den);
CheckResult check_S_shift(std::uint64_t seed, std::size_t count);

// distribution
CheckResult check_known_expansions();
CheckResult check_monotone(int level);
CheckResult check_boundary();
CheckResult check_ordinary_series(int max_den);
CheckResult check_reflection(int max_den);
CheckResult check_functional_equations(std::uint64_t seed, std::size_t count, int max_n);
CheckResult check_numeric_enclosures(int max_den);
CheckResult check_convergence(int grid_level, int max_n);

// tree
CheckResult check_first_levels();
CheckResult check_level_counts(int max_k);
CheckResult check_phi_bijection(int max_n);
CheckResult check_levels_match_S0(int level);
CheckResult check_arrow_lengths(int level);
CheckResult check_bruteforce_levels(int level);
CheckResult check_count_recurrences(int upto, int enumerate_upto);
CheckResult check_subtree_counts(int max_s0, int max_n);
CheckResult check_ratio_limits();

// empirical
CheckResult check_step_cdf(int level);
CheckResult check_empirical_F_reflection(int level);
CheckResult check_subtree_ratio(int max_n);
CheckResult check_ratio_audit(int max_level);
CheckResult check_probe(std::uint64_t seed, std::size_t count);

}  // namespace oddcf
