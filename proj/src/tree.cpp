#include "oddcf/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace oddcf {

std::string to_string(NodeType t) { return t == NodeType::first ? "first" : "second"; }

std::vector<Rational> stern_brocot_level(int n) {
    if (n < 0) throw std::domain_error("Stern-Brocot level must be non-negative");
    std::vector<Rational> seq{Rational(0), Rational(1)};
    for (int k = 0; k < n; ++k) {
        std::vector<Rational> next;
        next.reserve(seq.size() * 2 - 1);
        for (std::size_t j = 0; j + 1 < seq.size(); ++j) {
            next.push_back(seq[j]);
            next.push_back(mediant(seq[j], seq[j + 1]));
        }
        next.push_back(seq.back());
        seq = std::move(next);
    }
    return seq;
}

NodeType classify(const OddCF& rep) {
    if (rep.terms.empty()) throw std::domain_error("endpoints are not tree nodes");
    return rep.terms.back().a == 1 ? NodeType::first : NodeType::second;
}

TreeNode root_node() {
    return TreeNode{Rational(1, 2), Rational(0), Rational(1), OddCF{Form::zero, {{1, 1}, {1, 1}}}, 1,
                    NodeType::first};
}

std::pair<TreeNode, TreeNode> successors(const TreeNode& node) {
    OddCF near = node.rep;
    OddCF other = node.rep;
    int near_step = 1;
    int other_step = 1;
    if (node.type == NodeType::first) {
        // [.., e/(a+2)] and [.., 1/1, 1/1]
        near.terms.pop_back();
        near.terms.back().a += 2;
        other.terms.push_back({1, 1});
    } else {
        // [.., a, 1/1] and [.., a, -1/1, 1/1]
        near.terms.push_back({1, 1});
        other.terms.push_back({-1, 1});
        other.terms.push_back({1, 1});
        other_step = 2;
    }

    TreeNode left;
    left.value = mediant(node.left_parent, node.value);
    left.left_parent = node.left_parent;
    left.right_parent = node.value;
    TreeNode right;
    right.value = mediant(node.value, node.right_parent);
    right.left_parent = node.value;
    right.right_parent = node.right_parent;

    if (eval_odd(near) == left.value) {
        left.rep = std::move(near);
        left.level = node.level + near_step;
        right.rep = std::move(other);
        right.level = node.level + other_step;
    } else {
        left.rep = std::move(other);
        left.level = node.level + other_step;
        right.rep = std::move(near);
        right.level = node.level + near_step;
    }
    left.type = classify(left.rep);
    right.type = classify(right.rep);
    return {std::move(left), std::move(right)};
}

TreeNode locate(const Rational& x) {
    if (x.sign() <= 0 || x >= Rational(1)) throw std::domain_error("tree nodes lie in (0, 1), got " + x.str());
    // Left parent a/b satisfies p*b - q*a = 1 with 0 < b < q.
    const Integer& p = x.num();
    const Integer& q = x.den();
    Integer b;
    mpz_invert(b.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (b == 0) b = q;  // q == 1 cannot happen for interior x
    const Integer a = (p * b - 1) / q;
    TreeNode node;
    node.value = x;
    node.left_parent = Rational(a, b);
    node.right_parent = Rational(p - a, q - b);
    node.rep = expand_odd_zero(x);
    node.level = static_cast<int>(sum_S0(node.rep) - 1);
    node.type = classify(node.rep);
    return node;
}

std::vector<std::vector<TreeNode>> d_levels(int n, std::size_t budget) {
    if (n < 1) throw std::domain_error("level count must be at least 1");
    std::vector<std::vector<TreeNode>> levels(static_cast<std::size_t>(n));
    levels[0].push_back(root_node());
    std::size_t produced = 1;
    for (int k = 1; k <= n; ++k) {
        for (const TreeNode& node : levels[static_cast<std::size_t>(k - 1)]) {
            auto [l, r] = successors(node);
            for (TreeNode* child : {&l, &r}) {
                if (child->level > n) continue;
                if (++produced > budget)
                    throw ResourceError("enumeration budget of " + std::to_string(budget) + " nodes exceeded");
                levels[static_cast<std::size_t>(child->level - 1)].push_back(std::move(*child));
            }
        }
    }
    for (auto& level : levels)
        std::sort(level.begin(), level.end(), [](const TreeNode& a, const TreeNode& b) { return a.value < b.value; });
    return levels;
}

std::vector<Rational> y_set(int n, std::size_t budget) {
    std::vector<Rational> out;
    for (const auto& level : d_levels(n, budget))
        for (const auto& node : level) out.push_back(node.value);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int level_of(const OddCF& rep) { return static_cast<int>(sum_S0(rep) - 1); }

void require_interior(const OddCF& rep) {
    if (rep.form != Form::zero) throw std::domain_error("expected a form-zero representation");
    if (auto v = validate(rep)) throw std::domain_error("invalid representation: " + v->clause);
    if (rep.terms.empty() || (rep.terms.size() == 1 && rep.terms[0].a == 1))
        throw std::domain_error("endpoints 0 and 1 are outside the level sets");
}

}  // namespace

OddCF phi(const OddCF& x, int n) {
    if (n < 1) throw std::domain_error("phi needs n >= 1");
    require_interior(x);
    const int k = level_of(x);
    OddCF y = x;
    auto& t = y.terms;
    const bool last_is_one = t.back().a == 1;
    if (k == n + 2) {
        if (last_is_one) {
            t.pop_back();
            t.back().a += 2;
        } else {
            t.push_back({1, 1});
        }
    } else if (k == n + 1) {
        if (last_is_one) {
            t.push_back({1, 1});
            t.push_back({1, 1});
        } else {
            t.push_back({-1, 1});
            t.push_back({1, 1});
        }
    } else if (k == n) {
        if (last_is_one) {
            t.pop_back();
            t.back().a += 2;
            t.push_back({1, 1});
            t.push_back({1, 1});
        } else {
            t.push_back({-1, 1});
            t.push_back({1, 1});
            t.push_back({1, 1});
        }
    } else {
        throw std::domain_error("phi: argument lies on level " + std::to_string(k) + ", outside levels " +
                                std::to_string(n) + ".." + std::to_string(n + 2));
    }
    return normalize_trailing(std::move(y));
}

Rational phi(const Rational& x, int n) { return eval_odd(phi(expand_odd_zero(x), n)); }

OddCF phi_inverse(const OddCF& y) {
    require_interior(y);
    if (level_of(y) < 4) throw std::domain_error("phi_inverse needs an element of X_m with m >= 4");
    OddCF x = y;
    auto& t = x.terms;
    const std::size_t l = t.size();
    auto at = [&](std::size_t back) -> const SignedQuotient& { return y.terms[l - 1 - back]; };
    if (at(0).a > 1) {
        t.back().a -= 2;
        t.push_back({1, 1});
    } else if (at(1).a > 1) {
        t.pop_back();
    } else if (at(1).sign < 0) {
        t.resize(l - 2);
    } else if (at(2).a > 1) {
        t.resize(l - 2);
        t.back().a -= 2;
        t.push_back({1, 1});
    } else if (at(2).sign > 0) {
        t.resize(l - 3);
        t.push_back({1, 1});
    } else {
        t.resize(l - 3);
    }
    return normalize_trailing(std::move(x));
}

Rational phi_inverse(const Rational& y) { return eval_odd(phi_inverse(expand_odd_zero(y))); }

std::vector<LevelCounts> counts_upto(int n) {
    if (n < 0) throw std::domain_error("counts need n >= 0");
    const int size = std::max(n, 4) + 1;
    std::vector<LevelCounts> c(static_cast<std::size_t>(size));
    const int seeds[] = {0, 1, 2, 3, 6};
    for (int k = 0; k < size; ++k) c[static_cast<std::size_t>(k)].n = k;
    for (int k = 1; k <= 4; ++k) c[static_cast<std::size_t>(k)].X = seeds[k];
    for (int k = 1; k <= 3; ++k) c[static_cast<std::size_t>(k)].Y = c[static_cast<std::size_t>(k - 1)].Y + seeds[k];
    // Z_{k-1} = Y_k - Y_{k-1} - 1 on the seeds
    c[1].Z = 1;
    c[2].Z = 2;
    c[3].Z = 5;
    for (int k = 4; k < size; ++k) {
        auto& cur = c[static_cast<std::size_t>(k)];
        const auto& a = c[static_cast<std::size_t>(k - 1)];
        const auto& b = c[static_cast<std::size_t>(k - 2)];
        const auto& d = c[static_cast<std::size_t>(k - 3)];
        if (k > 4) cur.X = a.X + b.X + d.X;
        cur.Y = a.Y + b.Y + d.Y + 2;
        cur.Z = a.Z + b.Z + d.Z + 2;
    }
    c.resize(static_cast<std::size_t>(n) + 1);
    return c;
}

LevelCounts counts(int n) { return counts_upto(n).back(); }

Integer subtree_count(const OddCF& xi, int n) {
    require_interior(xi);
    const int index = n - static_cast<int>(sum_S0(xi)) + 2;
    if (index <= 0) return 0;
    const LevelCounts c = counts(index);
    return classify(xi) == NodeType::first ? c.Y : c.Z;
}

std::size_t subtree_count_direct(const TreeNode& xi, int n) {
    std::size_t count = 0;
    std::vector<TreeNode> stack;
    if (xi.level <= n) stack.push_back(xi);
    while (!stack.empty()) {
        TreeNode node = std::move(stack.back());
        stack.pop_back();
        ++count;
        auto [l, r] = successors(node);
        if (l.level <= n) stack.push_back(std::move(l));
        if (r.level <= n) stack.push_back(std::move(r));
    }
    return count;
}

namespace {

Enclosure abs_enclosure(const Enclosure& e) {
    if (e.lo.sign() >= 0) return e;
    if (e.hi.sign() <= 0) return {-e.hi, -e.lo};
    return {Rational(0), std::max(-e.lo, e.hi)};
}

}  // namespace

RatioReport ratio_report(int n) {
    if (n < 4) throw std::domain_error("ratio report needs n >= 4");
    const auto c = counts_upto(n + 1);
    const auto& now = c[static_cast<std::size_t>(n)];
    const auto& next = c[static_cast<std::size_t>(n) + 1];
    const CubicNumber inv_lambda = CubicNumber::lambda().inverse();
    const CubicNumber inv_lambda_minus_one = (CubicNumber::lambda() - CubicNumber(1)).inverse();
    RatioReport report;
    report.n = n;
    auto add = [&](std::string name, Rational value, CubicNumber limit) {
        const Enclosure d = abs_enclosure(enclose(CubicNumber(value) - limit, 64));
        report.lines.push_back({std::move(name), std::move(value), std::move(limit), d});
    };
    add("Y_n/Y_n+1", Rational(now.Y, next.Y), inv_lambda);
    add("Z_n/Z_n+1", Rational(now.Z, next.Z), inv_lambda);
    add("Y_n/Z_n", Rational(now.Y, now.Z), inv_lambda_minus_one);
    return report;
}

}  // namespace oddcf
