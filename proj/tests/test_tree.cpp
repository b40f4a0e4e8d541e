#include <algorithm>

#include "doctest.h"
#include "oddcf/tree.hpp"

using namespace oddcf;

namespace {

std::vector<Rational> rs(std::initializer_list<std::pair<long, long>> v) {
    std::vector<Rational> out;
    for (auto [p, q] : v) out.emplace_back(p, q);
    return out;
}

std::vector<Rational> values(const std::vector<TreeNode>& level) {
    std::vector<Rational> out;
    for (const auto& n : level) out.push_back(n.value);
    return out;
}

}  // namespace

TEST_CASE("Stern-Brocot sequences") {
    CHECK(stern_brocot_level(0) == rs({{0, 1}, {1, 1}}));
    CHECK(stern_brocot_level(1) == rs({{0, 1}, {1, 2}, {1, 1}}));
    CHECK(stern_brocot_level(2) == rs({{0, 1}, {1, 3}, {1, 2}, {2, 3}, {1, 1}}));
    CHECK(stern_brocot_level(7).size() == 129);
}

TEST_CASE("node typing") {
    CHECK(classify(expand_odd_zero(Rational(2, 5))) == NodeType::first);
    CHECK(classify(expand_odd_zero(Rational(1, 3))) == NodeType::second);
    CHECK(classify(expand_odd_zero(Rational(1, 2))) == NodeType::first);
}

TEST_CASE("successors") {
    const TreeNode root = root_node();
    CHECK(root.level == 1);
    auto [l, r] = successors(root);
    CHECK(l.value == Rational(1, 3));
    CHECK(r.value == Rational(2, 3));
    CHECK(l.level == 2);
    CHECK(r.level == 2);
    auto [l2, r2] = successors(l);
    CHECK(l2.value == Rational(1, 4));
    CHECK(l2.level == 3);
    CHECK(r2.value == Rational(2, 5));
    CHECK(r2.level == 4);
    CHECK(r2.rep == expand_odd_zero(Rational(2, 5)));
}

TEST_CASE("locate") {
    const TreeNode n = locate(Rational(5, 8));
    CHECK(n.left_parent == Rational(3, 5));
    CHECK(n.right_parent == Rational(2, 3));
    CHECK(n.level == 4);
    CHECK_THROWS_AS(locate(Rational(1)), std::domain_error);
}

TEST_CASE("level sets") {
    const auto d = d_levels(5);
    CHECK(values(d[0]) == rs({{1, 2}}));
    CHECK(values(d[1]) == rs({{1, 3}, {2, 3}}));
    CHECK(values(d[2]) == rs({{1, 4}, {3, 5}, {3, 4}}));
    CHECK(values(d[3]) == rs({{1, 5}, {2, 7}, {2, 5}, {4, 7}, {5, 8}, {4, 5}}));
    CHECK(d[4].size() == 11);
    CHECK_THROWS_AS(d_levels(30, 1000), ResourceError);
    CHECK_THROWS_AS(d_levels(0), std::domain_error);
}

TEST_CASE("level sizes agree with a brute-force count") {
    // independent count: reduced p/q with S0 <= n + 1, q <= Fib(n + 2)
    const std::size_t brute[] = {1, 3, 6, 12, 23, 43, 80, 148, 273, 503, 926, 1704};
    for (int n = 1; n <= 12; ++n) CHECK(y_set(n).size() == brute[n - 1]);
}

TEST_CASE("Phi for n = 1") {
    CHECK(phi(Rational(1, 4), 1) == Rational(1, 5));
    CHECK(phi(Rational(3, 5), 1) == Rational(4, 7));
    CHECK(phi(Rational(3, 4), 1) == Rational(4, 5));
    CHECK(phi(Rational(1, 3), 1) == Rational(2, 5));
    CHECK(phi(Rational(2, 3), 1) == Rational(5, 8));
    CHECK(phi(Rational(1, 2), 1) == Rational(2, 7));
    std::vector<Rational> image;
    for (const auto& x : rs({{1, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 5}, {3, 4}})) {
        image.push_back(phi(x, 1));
        CHECK(phi_inverse(image.back()) == x);
    }
    std::sort(image.begin(), image.end());
    CHECK(image == rs({{1, 5}, {2, 7}, {2, 5}, {4, 7}, {5, 8}, {4, 5}}));
    CHECK_THROWS_AS(phi(Rational(1, 5), 1), std::domain_error);
    CHECK_THROWS_AS(phi_inverse(Rational(1, 3)), std::domain_error);
}

TEST_CASE("counts") {
    const auto c = counts_upto(7);
    CHECK(c[1].X == 1);
    CHECK(c[2].X == 2);
    CHECK(c[3].X == 3);
    CHECK(c[4].X == 6);
    CHECK(c[4].Y == 12);
    CHECK(c[1].Z == 1);
    CHECK(c[2].Z == 2);
    CHECK(c[3].Z == 5);
    CHECK(c[4].Z == 10);
    CHECK(c[5].Y == 23);
    CHECK(c[7].X == c[6].X + c[5].X + c[4].X);
    for (int k = 2; k <= 7; ++k) CHECK(c[k].Y == c[k - 1].Y + c[k - 1].Z + 1);
    CHECK(counts(60).Y > 0);
}

TEST_CASE("subtree counts") {
    const auto c = counts_upto(12);
    CHECK(subtree_count(expand_odd_zero(Rational(1, 2)), 1) == 1);
    for (int n = 1; n <= 12; ++n) CHECK(subtree_count(expand_odd_zero(Rational(1, 2)), n) == c[n].Y);
    for (const auto& x : rs({{1, 3}, {2, 3}, {1, 4}, {3, 5}, {2, 7}, {5, 8}})) {
        const TreeNode node = locate(x);
        for (int n = 1; n <= 10; ++n) {
            INFO(x.str(), " n = ", n);
            CHECK(subtree_count(node.rep, n) == Integer(static_cast<unsigned long>(subtree_count_direct(node, n))));
        }
        CHECK(subtree_count(node.rep, node.level - 1) == 0);
    }
}

TEST_CASE("ratio report") {
    const RatioReport small = ratio_report(4);
    CHECK(small.lines[0].value == Rational(12, 23));
    CHECK(small.lines[2].value == Rational(12, 10));
    const RatioReport r = ratio_report(25);
    for (const auto& line : r.lines) {
        INFO(line.name);
        CHECK(line.distance.hi < Rational(1, 1000));
    }
    CHECK_THROWS_AS(ratio_report(3), std::domain_error);
}
