#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "oddcf/contfrac.hpp"
#include "oddcf/cubic.hpp"

namespace oddcf {

/// First type: both successors one level down. Second type: one successor
/// one level down and the other two levels down.
enum class NodeType { first, second };

std::string to_string(NodeType t);

/// A rational of (0, 1) in the Stern-Brocot tree, leveled by S0 - 1.
struct TreeNode {
    Rational value;
    Rational left_parent;
    Rational right_parent;
    OddCF rep;
    int level = 0;
    NodeType type = NodeType::first;
};

/// Mediant insertion from {0/1, 1/1}; 2^n + 1 sorted rationals.
std::vector<Rational> stern_brocot_level(int n);

/// First type iff the last odd quotient is 1.
NodeType classify(const OddCF& rep);

/// 1/2 with virtual parents 0/1 and 1/1.
TreeNode root_node();

/// (x (+) xi, xi (+) y) with representations built from the parent's quotients.
std::pair<TreeNode, TreeNode> successors(const TreeNode& node);

/// Node for an interior rational, found by descending from the root.
TreeNode locate(const Rational& x);

inline constexpr std::size_t kDefaultNodeBudget = 5'000'000;

/// Level sets X_1..X_n (index k-1 holds X_k), each sorted by value.
/// Throws ResourceError once more than `budget` nodes would be produced.
std::vector<std::vector<TreeNode>> d_levels(int n, std::size_t budget = kDefaultNodeBudget);

/// Sorted values of Y_n = X_1 u ... u X_n.
std::vector<Rational> y_set(int n, std::size_t budget = kDefaultNodeBudget);

/// The correspondence X_{n+2} u X_{n+1} u X_n -> X_{n+3}.
OddCF phi(const OddCF& x, int n);
Rational phi(const Rational& x, int n);

/// Preimage of y in X_{m} (m >= 4) under phi with n = m - 3.
OddCF phi_inverse(const OddCF& y);
Rational phi_inverse(const Rational& y);

struct LevelCounts {
    int n = 0;
    Integer X;
    Integer Y;
    Integer Z;
};

/// X, Y, Z at index n (n >= 0; index 0 is all zeros) from their recurrences.
LevelCounts counts(int n);

/// counts(0..n).
std::vector<LevelCounts> counts_upto(int n);

/// Number of nodes of the subtree rooted at xi on levels <= n, closed form.
Integer subtree_count(const OddCF& xi, int n);

/// Same count by walking the subtree.
std::size_t subtree_count_direct(const TreeNode& xi, int n);

struct RatioLine {
    std::string name;
    Rational value;
    CubicNumber limit;
    Enclosure distance;  // |value - limit|
};

struct RatioReport {
    int n = 0;
    std::vector<RatioLine> lines;  // Y_n/Y_{n+1}, Z_n/Z_{n+1}, Y_n/Z_n
};

RatioReport ratio_report(int n);

}  // namespace oddcf
