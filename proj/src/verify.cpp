#include "oddcf/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "oddcf/contfrac.hpp"
#include "oddcf/cubic.hpp"
#include "oddcf/distribution.hpp"
#include "oddcf/empirical.hpp"
#include "oddcf/tree.hpp"

namespace oddcf {

namespace {

CheckResult pass(std::string name, std::string detail) { return {std::move(name), true, std::move(detail)}; }
CheckResult fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

template <class... Ts>
std::string cat(const Ts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

// Modulo reduction of raw mt19937_64 output keeps samples identical across
// standard libraries; the bias is irrelevant at these ranges.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(rng() % span);
}

Rational draw_rational(std::mt19937_64& rng, std::int64_t bound) {
    return Rational(draw(rng, -bound, bound), draw(rng, 1, bound));
}

CubicNumber draw_cubic(std::mt19937_64& rng) {
    return CubicNumber(draw_rational(rng, 50), draw_rational(rng, 50), draw_rational(rng, 50));
}

std::string show(const OddCF& cf) { return format_cf(cf); }

std::string show(const std::vector<Rational>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + "}";
}

std::vector<Rational> values_of(const std::vector<TreeNode>& level) {
    std::vector<Rational> out;
    out.reserve(level.size());
    for (const auto& node : level) out.push_back(node.value);
    return out;
}

// Y_n together with 0 and 1, ascending.
std::vector<Rational> closed_grid(int level) {
    std::vector<Rational> grid{Rational(0)};
    for (const auto& y : y_set(level)) grid.push_back(y);
    grid.emplace_back(1);
    return grid;
}

}  // namespace

std::vector<Rational> farey_fractions(int max_den) {
    if (max_den < 1) throw std::domain_error("max_den must be positive");
    std::vector<Rational> out;
    for (long q = 1; q <= max_den; ++q)
        for (long p = 0; p <= q; ++p)
            if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Rational> random_rationals(std::size_t count, int max_den, std::uint64_t seed, bool interior) {
    if (max_den < (interior ? 2 : 1)) throw std::domain_error("max_den too small for the requested range");
    std::mt19937_64 rng(seed);
    std::vector<Rational> out;
    out.reserve(count);
    while (out.size() < count) {
        const std::int64_t q = draw(rng, interior ? 2 : 1, max_den);
        const std::int64_t p = interior ? draw(rng, 1, q - 1) : draw(rng, 0, q);
        out.emplace_back(static_cast<long>(p), static_cast<long>(q));
    }
    return out;
}

// ---- arith

CheckResult check_rational_canonical(int range) {
    const std::string name = "rational canonical form";
    std::size_t n = 0;
    for (long p = -range; p <= range; ++p) {
        for (long q = -range; q <= range; ++q) {
            if (q == 0) continue;
            const Rational r(p, q);
            const long g = std::gcd(p, q);
            const long np = (q < 0 ? -p : p) / g;
            const long nq = (q < 0 ? -q : q) / g;
            if (r.num() != np || r.den() != nq)
                return fail(name, cat(p, "/", q, " stored as ", r, ", expected ", np, "/", nq));
            if (Rational::parse(r.str()) != r) return fail(name, cat(r, " does not re-parse"));
            ++n;
        }
    }
    return pass(name, cat(n, " pairs"));
}

CheckResult check_mediant_between(std::uint64_t seed, std::size_t count) {
    const std::string name = "mediant strictly between";
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        Rational a = draw_rational(rng, 1000);
        Rational b = draw_rational(rng, 1000);
        if (a == b) continue;
        if (b < a) std::swap(a, b);
        const Rational m = mediant(a, b);
        if (!(a < m && m < b)) return fail(name, cat("mediant(", a, ", ", b, ") = ", m));
    }
    return pass(name, cat(count, " random pairs"));
}

CheckResult check_compare_order(std::uint64_t seed, std::size_t count) {
    const std::string name = "compare is the real order";
    std::mt19937_64 rng(seed + 1);
    for (std::size_t i = 0; i < count; ++i) {
        const Rational a = draw_rational(rng, 1'000'000);
        const Rational b = draw_rational(rng, 1'000'000);
        // oracle: sign of a.num*b.den - b.num*a.den
        const Integer cross = a.num() * b.den() - b.num() * a.den();
        const int expect = sgn(cross);
        const auto got = compare(a, b);
        const int g = got < 0 ? -1 : (got > 0 ? 1 : 0);
        if (g != expect) return fail(name, cat("compare(", a, ", ", b, ")"));
    }
    return pass(name, cat(count, " random pairs"));
}

// ---- field

CheckResult check_field_axioms(std::uint64_t seed, std::size_t count) {
    const std::string name = "field axioms in Q(lambda)";
    std::mt19937_64 rng(seed + 2);
    const CubicNumber one(1);
    for (std::size_t i = 0; i < count; ++i) {
        const CubicNumber a = draw_cubic(rng), b = draw_cubic(rng), c = draw_cubic(rng);
        if ((a * b) * c != a * (b * c)) return fail(name, cat("associativity at ", a.str()));
        if (a * (b + c) != a * b + a * c) return fail(name, cat("distributivity at ", a.str()));
        if (a * b != b * a) return fail(name, cat("commutativity at ", a.str()));
        if (!a.is_zero() && a * a.inverse() != one) return fail(name, cat("inverse of ", a.str()));
    }
    return pass(name, cat(count, " random triples"));
}

CheckResult check_lambda_power_recurrence(int max_n) {
    const std::string name = "lambda power recurrence";
    const CubicNumber L = CubicNumber::lambda();
    for (int n = 0; n <= max_n; ++n)
        if (L.pow(n + 3) != L.pow(n + 2) + L.pow(n + 1) + L.pow(n)) return fail(name, cat("n = ", n));
    return pass(name, cat("0 <= n <= ", max_n));
}

CheckResult check_enclose_sum(std::uint64_t seed, std::size_t count) {
    const std::string name = "enclosure of a sum";
    std::mt19937_64 rng(seed + 3);
    for (std::size_t i = 0; i < count; ++i) {
        const CubicNumber a = draw_cubic(rng), b = draw_cubic(rng);
        const Enclosure sum = enclose(a, 48) + enclose(b, 48);
        // a finer enclosure of a + b must land inside the interval sum
        if (!sum.contains(enclose(a + b, 96))) return fail(name, cat("a = ", a.str(), ", b = ", b.str()));
    }
    return pass(name, cat(count, " random pairs"));
}

CheckResult check_lambda_bisection(unsigned max_bits) {
    const std::string name = "lambda bisection halves";
    Enclosure prev = lambda_enclosure(0);
    for (unsigned b = 1; b <= max_bits; ++b) {
        const Enclosure cur = lambda_enclosure(b);
        if (cur.width() * Rational(2) != prev.width() || !prev.contains(cur))
            return fail(name, cat("step ", b));
        if (lambda_polynomial(cur.lo).sign() >= 0 || lambda_polynomial(cur.hi).sign() <= 0)
            return fail(name, cat("no sign change at step ", b));
        prev = cur;
    }
    return pass(name, cat("1..", max_bits, " bits"));
}

CheckResult check_lambda_certificate() {
    const std::string name = "lambda certificate";
    const Enclosure e = lambda_enclosure(40);
    const Rational target = Rational::parse("1839286755214161/1000000000000000");
    if (e.width() > Rational(Integer(1), Integer(1) << 40)) return fail(name, "enclosure wider than 2^-40");
    if (!e.contains(target)) return fail(name, cat("[", e.lo, ", ", e.hi, "] misses 1.839286755214161"));
    return pass(name, cat("[", to_decimal(e.lo, 15, Rounding::down), ", ", to_decimal(e.hi, 15, Rounding::up),
                          "] width 2^-40"));
}

// ---- contfrac

CheckResult check_roundtrip(int max_den) {
    const std::string name = "expansion round trip";
    const auto xs = farey_fractions(max_den);
    for (const auto& x : xs) {
        if (eval_odd(expand_odd_zero(x)) != x) return fail(name, cat("form zero at ", x));
        if (eval_odd(expand_odd_one(x)) != x) return fail(name, cat("form one at ", x));
        if (eval_ordinary(expand_ordinary(x)) != x) return fail(name, cat("ordinary at ", x));
        const OddCF z = expand_odd_zero(x);
        if (eval(parse_cf(format_cf(z))) != x) return fail(name, cat("text round trip at ", x));
    }
    return pass(name, cat(xs.size(), " fractions, q <= ", max_den));
}

CheckResult check_odd_uniqueness(int max_den) {
    const std::string name = "form zero injective";
    std::set<std::string> seen;
    const auto xs = farey_fractions(max_den);
    for (const auto& x : xs)
        if (!seen.insert(show(expand_odd_zero(x))).second) return fail(name, cat("collision at ", x));
    return pass(name, cat(xs.size(), " distinct expansions"));
}

CheckResult check_expansions_valid(int max_den) {
    const std::string name = "expansions satisfy the odd-CF rules";
    const auto xs = farey_fractions(max_den);
    for (const auto& x : xs) {
        for (const OddCF& cf : {expand_odd_zero(x), expand_odd_one(x)}) {
            if (auto v = validate(cf)) return fail(name, cat(x, " -> ", show(cf), ": ", v->clause));
        }
    }
    return pass(name, cat(2 * xs.size(), " expansions"));
}

CheckResult check_conversion(int max_den) {
    const std::string name = "ordinary-to-odd conversion";
    const auto xs = farey_fractions(max_den);
    for (const auto& x : xs) {
        const OddCF direct = expand_odd_zero(x);
        const OddCF converted = convert_ordinary_to_odd(expand_ordinary(x));
        if (converted != direct)
            return fail(name, cat(x, ": converted ", show(converted), ", direct ", show(direct)));
    }
    return pass(name, cat(xs.size(), " fractions, q <= ", max_den));
}

CheckResult check_odd_div(int limit) {
    const std::string name = "odd division unique";
    for (Quotient a = 1; a <= limit; ++a) {
        for (Quotient b = 1; b <= limit; ++b) {
            // brute force over odd q with a - b*q in (-b, b]
            int found = 0;
            Quotient hit = 0;
            for (Quotient q = 1; q <= 2 * (a / b) + 3; q += 2) {
                const Quotient r = a - b * q;
                if (-b < r && r <= b) {
                    ++found;
                    hit = q;
                }
            }
            if (found != 1) return fail(name, cat(found, " odd quotients for ", a, "/", b));
            const OddDivision d = odd_div(a, b);
            if (d.q != hit || d.r != a - b * hit) return fail(name, cat("odd_div(", a, ", ", b, ")"));
        }
    }
    return pass(name, cat("1 <= a, b <= ", limit));
}

CheckResult check_termination(int max_den) {
    const std::string name = "odd Euclid remainders shrink";
    const auto xs = farey_fractions(max_den);
    for (const auto& x : xs) {
        Quotient a = to_int64(x.den());
        Quotient b = to_int64(x.num());
        const OddCF cf = expand_odd_zero(x);
        std::size_t i = 0;
        while (b != 0) {
            const OddDivision d = odd_div(a, b);
            if (i >= cf.terms.size() || cf.terms[i].a != d.q) return fail(name, cat("quotient mismatch at ", x));
            const Quotient r = d.r < 0 ? -d.r : d.r;
            if (r == b) {
                // the single allowed non-decrease: next step is b/b
                if (odd_div(b, r).r != 0) return fail(name, cat("r = b did not terminate at ", x));
            } else if (r >= b) {
                return fail(name, cat("remainder grew at ", x));
            }
            a = b;
            b = r;
            ++i;
        }
        if (i != cf.terms.size()) return fail(name, cat("length mismatch at ", x));
    }
    return pass(name, cat(xs.size(), " fractions"));
}

CheckResult check_S_shift(std::uint64_t seed, std::size_t count) {
    const std::string name = "S(x) - S0(1-x) = 1";
    for (const auto& x : random_rationals(count, 1000, seed + 4)) {
        const Quotient d = sum_S(expand_odd_one(x)) - sum_S0(expand_odd_zero(Rational(1) - x));
        if (d != 1) return fail(name, cat("difference ", d, " at ", x));
    }
    return pass(name, cat(count, " random rationals"));
}

// ---- distribution

CheckResult check_known_expansions() {
    const std::string name = "worked expansions";
    const std::vector<std::pair<Rational, std::string>> cases{
        {Rational(1, 2), "[0; 1/1, 1/1]"},
        {Rational(3, 5), "[0; 1/1, 1/1, 1/1, 1/1]"},
        {Rational(2, 5), "[0; 1/3, -1/1, 1/1]"},
    };
    for (const auto& [x, text] : cases) {
        const std::string got = show(expand_odd_zero(x));
        if (got != text) return fail(name, cat(x, " -> ", got, ", expected ", text));
    }
    return pass(name, "1/2, 3/5, 2/5");
}

CheckResult check_monotone(int level) {
    const std::string name = "F0 strictly increasing";
    const auto grid = closed_grid(level);
    CubicNumber prev = F0_exact(grid.front());
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const CubicNumber cur = F0_exact(grid[i]);
        if (sign(cur - prev) != Sign::positive) return fail(name, cat("between ", grid[i - 1], " and ", grid[i]));
        prev = cur;
    }
    return pass(name, cat(grid.size(), " points of Y_", level, " with endpoints"));
}

CheckResult check_boundary() {
    const std::string name = "boundary values";
    const CubicNumber zero, one(1);
    if (F_exact(Rational(0)) != zero || F_exact(Rational(1)) != one) return fail(name, "F");
    if (F0_exact(Rational(0)) != zero || F0_exact(Rational(1)) != one) return fail(name, "F0");
    return pass(name, "F and F0 at 0 and 1");
}

CheckResult check_ordinary_series(int max_den) {
    const std::string name = "F from the ordinary expansion";
    const auto xs = farey_fractions(max_den);
    std::size_t agree = 0;
    std::string first;
    for (const auto& x : xs) {
        const OrdinaryCF cf = expand_ordinary(x);
        if (F_from_ordinary(cf) == F_exact(x)) ++agree;
        else if (first.empty()) first = cat(x, " = ", format_cf(cf));
    }
    if (agree != xs.size())
        return fail(name, cat("agrees on ", agree, " of ", xs.size(), " fractions, q <= ", max_den,
                              "; first mismatch ", first));
    return pass(name, cat(xs.size(), " fractions, q <= ", max_den));
}

CheckResult check_reflection(int max_den) {
    const std::string name = "F(x) = 1 - F0(1 - x)";
    const auto xs = farey_fractions(max_den);
    for (const auto& x : xs)
        if (!reflection_holds(x)) return fail(name, cat("at ", x));
    return pass(name, cat(xs.size(), " fractions, q <= ", max_den));
}

CheckResult check_functional_equations(std::uint64_t seed, std::size_t count, int max_n) {
    const std::string name = "functional equations";
    for (const auto& x : random_rationals(count, 1000, seed + 5)) {
        for (int n = 1; n <= max_n; ++n) {
            const EquationCheck f0 = check_functional_eq_F0(x, n);
            const EquationCheck f = check_functional_eq_F(x, n);
            if (!f0.first || !f0.second)
                return fail(name, cat("F0 equation ", f0.first ? 2 : 1, " at x = ", x, ", n = ", n));
            if (!f.first || !f.second)
                return fail(name, cat("F equation ", f.first ? 2 : 1, " at x = ", x, ", n = ", n));
            if (!reflection_holds(x)) return fail(name, cat("reflection at ", x));
        }
    }
    return pass(name, cat(count, " random rationals x n = 1..", max_n));
}

CheckResult check_numeric_enclosures(int max_den) {
    const std::string name = "F0 prefix enclosures";
    const auto xs = farey_fractions(max_den);
    for (const auto& x : xs) {
        const CubicNumber exact = F0_exact(x);
        const Enclosure fine = enclose(exact, 96);
        const OddCF cf = expand_odd_zero(x);
        if (!F0_numeric(cf, 64, PrefixKind::complete).contains(fine))
            return fail(name, cat("complete expansion of ", x));
        for (std::size_t k = 0; k < cf.terms.size(); ++k) {
            OddCF prefix{Form::zero, {cf.terms.begin(), cf.terms.begin() + static_cast<std::ptrdiff_t>(k)}};
            if (!F0_numeric(prefix, 64).contains(fine)) return fail(name, cat("prefix of length ", k, " of ", x));
        }
    }
    return pass(name, cat(xs.size(), " fractions and all their prefixes"));
}

CheckResult check_convergence(int grid_level, int max_n) {
    const std::string name = "empirical F0 converges";
    const auto grid = y_set(grid_level);
    const auto rows = convergence_table(max_n, grid);
    const Rational worst = max_error(rows, max_n);
    if (worst >= Rational(1, 50))
        return fail(name, cat("max error ", to_decimal(worst, 6, Rounding::up), " at n = ", max_n));
    for (int n = 8; n + 3 <= max_n; ++n) {
        if (max_error(rows, n + 3) > max_error(rows, n))
            return fail(name, cat("max error rises from n = ", n, " to n = ", n + 3));
    }
    return pass(name, cat("max error ", to_decimal(worst, 6, Rounding::up), " at n = ", max_n, " on Y_",
                          grid_level));
}

// ---- tree

CheckResult check_first_levels() {
    const std::string name = "first level sets";
    const std::vector<std::vector<Rational>> expected{
        {Rational(1, 2)},
        {Rational(1, 3), Rational(2, 3)},
        {Rational(1, 4), Rational(3, 5), Rational(3, 4)},
        {Rational(1, 5), Rational(2, 7), Rational(2, 5), Rational(4, 7), Rational(5, 8), Rational(4, 5)},
    };
    const auto levels = d_levels(4);
    for (std::size_t k = 0; k < expected.size(); ++k) {
        const auto got = values_of(levels[k]);
        if (got != expected[k]) return fail(name, cat("X_", k + 1, " = ", show(got)));
    }
    return pass(name, "X_1..X_4");
}

CheckResult check_level_counts(int max_k) {
    const std::string name = "level sizes match the recurrence";
    const auto levels = d_levels(max_k);
    const auto c = counts_upto(max_k);
    for (int k = 1; k <= max_k; ++k) {
        const auto& got = levels[static_cast<std::size_t>(k - 1)];
        if (Integer(static_cast<unsigned long>(got.size())) != c[static_cast<std::size_t>(k)].X)
            return fail(name, cat("|X_", k, "| = ", got.size(), ", recurrence ", c[static_cast<std::size_t>(k)].X));
        if (k > 3) {
            const auto& k1 = c[static_cast<std::size_t>(k - 1)].X;
            const auto& k2 = c[static_cast<std::size_t>(k - 2)].X;
            const auto& k3 = c[static_cast<std::size_t>(k - 3)].X;
            if (c[static_cast<std::size_t>(k)].X != k1 + k2 + k3) return fail(name, cat("X_", k, " recurrence"));
        }
    }
    return pass(name, cat("k <= ", max_k));
}

CheckResult check_phi_bijection(int max_n) {
    const std::string name = "Phi bijection";
    const auto levels = d_levels(max_n + 3);
    for (int n = 1; n <= max_n; ++n) {
        std::vector<Rational> image;
        for (int k = n; k <= n + 2; ++k) {
            for (const auto& node : levels[static_cast<std::size_t>(k - 1)]) {
                const Rational y = phi(node.value, n);
                if (phi_inverse(y) != node.value) return fail(name, cat("inverse fails at ", node.value, ", n = ", n));
                image.push_back(y);
            }
        }
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end())
            return fail(name, cat("not injective for n = ", n));
        if (image != values_of(levels[static_cast<std::size_t>(n + 2)]))
            return fail(name, cat("image differs from X_", n + 3));
    }
    return pass(name, cat("1 <= n <= ", max_n));
}

CheckResult check_levels_match_S0(int level) {
    const std::string name = "tree level equals S0 - 1";
    const auto levels = d_levels(level);
    std::size_t n = 0;
    for (int k = 1; k <= level; ++k) {
        for (const auto& node : levels[static_cast<std::size_t>(k - 1)]) {
            const OddCF direct = expand_odd_zero(node.value);
            if (node.rep != direct) return fail(name, cat("representation of ", node.value));
            if (sum_S0(direct) != k + 1) return fail(name, cat(node.value, " found on level ", k));
            if (node.value != mediant(node.left_parent, node.right_parent))
                return fail(name, cat("parents of ", node.value));
            ++n;
        }
    }
    return pass(name, cat(n, " nodes"));
}

CheckResult check_arrow_lengths(int level) {
    const std::string name = "arrow lengths follow node type";
    const auto levels = d_levels(level);
    std::size_t n = 0;
    for (const auto& lv : levels) {
        for (const auto& node : lv) {
            const auto [l, r] = successors(node);
            const int dl = l.level - node.level;
            const int dr = r.level - node.level;
            const bool ok = node.type == NodeType::first ? (dl == 1 && dr == 1)
                                                         : (std::min(dl, dr) == 1 && std::max(dl, dr) == 2);
            if (!ok) return fail(name, cat(node.value, " (", to_string(node.type), ") steps ", dl, ", ", dr));
            ++n;
        }
    }
    return pass(name, cat(n, " nodes"));
}

CheckResult check_bruteforce_levels(int level) {
    const std::string name = "levels match a brute-force filter";
    // a node on level n sits at Stern-Brocot depth <= n, so its denominator is
    // at most Fib(n + 2)
    long a = 1, b = 1;
    for (int i = 2; i < level + 2; ++i) {
        const long c = a + b;
        a = b;
        b = c;
    }
    std::vector<Rational> brute;
    for (const auto& x : farey_fractions(static_cast<int>(b))) {
        if (x.is_zero() || x == Rational(1)) continue;
        if (sum_S0(expand_odd_zero(x)) <= level + 1) brute.push_back(x);
    }
    const auto got = y_set(level);
    if (got != brute) return fail(name, cat("|Y_", level, "| = ", got.size(), ", brute force ", brute.size()));
    return pass(name, cat("Y_", level, ", q <= ", b));
}

CheckResult check_count_recurrences(int upto, int enumerate_upto) {
    const std::string name = "count recurrences";
    const auto c = counts_upto(upto);
    auto at = [&](int k) -> const LevelCounts& { return c[static_cast<std::size_t>(k)]; };
    if (at(1).X != 1 || at(2).X != 2 || at(3).X != 3 || at(4).X != 6) return fail(name, "seeds");
    for (int k = 1; k <= upto; ++k) {
        Integer sum = 0;
        for (int j = 1; j <= k; ++j) sum += at(j).X;
        if (at(k).Y != sum) return fail(name, cat("Y_", k, " is not a partial sum"));
        if (k >= 2 && at(k).Y != at(k - 1).Y + at(k - 1).Z + 1) return fail(name, cat("Y_", k, " = Y + Z + 1"));
        if (k >= 4) {
            if (at(k).Y != at(k - 1).Y + at(k - 2).Y + at(k - 3).Y + 2) return fail(name, cat("Y_", k));
            if (at(k).Z != at(k - 1).Z + at(k - 2).Z + at(k - 3).Z + 2) return fail(name, cat("Z_", k));
        }
    }
    const auto levels = d_levels(enumerate_upto + 1);
    const TreeNode third = locate(Rational(1, 3));
    std::size_t running = 0;
    for (int k = 1; k <= enumerate_upto; ++k) {
        running += levels[static_cast<std::size_t>(k - 1)].size();
        if (Integer(static_cast<unsigned long>(running)) != at(k).Y) return fail(name, cat("enumerated Y_", k));
        // Z_k counts the subtree under 1/3 down to level k + 1
        const auto z = subtree_count_direct(third, k + 1);
        if (Integer(static_cast<unsigned long>(z)) != at(k).Z) return fail(name, cat("enumerated Z_", k));
    }
    return pass(name, cat("recurrences to ", upto, ", enumeration to ", enumerate_upto));
}

CheckResult check_subtree_counts(int max_s0, int max_n) {
    const std::string name = "subtree counts";
    const auto levels = d_levels(max_s0 - 1);
    std::size_t roots = 0;
    for (const auto& lv : levels) {
        for (const auto& node : lv) {
            for (int n = 1; n <= max_n; ++n) {
                const Integer closed = subtree_count(node.rep, n);
                const auto direct = subtree_count_direct(node, n);
                if (closed != Integer(static_cast<unsigned long>(direct)))
                    return fail(name, cat("xi = ", node.value, ", n = ", n, ": ", closed, " vs ", direct));
            }
            ++roots;
        }
    }
    return pass(name, cat(roots, " roots with S0 <= ", max_s0, ", n <= ", max_n));
}

CheckResult check_ratio_limits() {
    const std::string name = "count ratios approach their limits";
    const RatioReport report = ratio_report(25);
    const Rational tol(1, 1000);
    for (const auto& line : report.lines)
        if (line.distance.hi >= tol) return fail(name, cat(line.name, " off by ", to_decimal(line.distance.hi, 8)));
    return pass(name, "n = 25 within 1e-3");
}

// ---- empirical

CheckResult check_step_cdf(int level) {
    const std::string name = "empirical F0 is a step CDF";
    const auto y = y_set(level);
    const auto grid = farey_fractions(60);
    Rational prev;
    for (const auto& x : grid) {
        const Rational v = empirical_F0(y, x);
        if (v.sign() < 0 || v > Rational(1)) return fail(name, cat("value ", v, " at ", x));
        if (v < prev) return fail(name, cat("decreases at ", x));
        prev = v;
    }
    if (empirical_F0(y, Rational(1)) != Rational(1)) return fail(name, "does not reach 1");
    for (const auto& x : y)
        if (empirical_F0(y, x) == empirical_F0_strict(y, x)) return fail(name, cat("no jump at ", x));
    return pass(name, cat("Y_", level, " on the q <= 60 grid"));
}

CheckResult check_empirical_F_reflection(int level) {
    const std::string name = "empirical F mirrors F0";
    const auto y = y_set(level - 1);
    const Rational size(static_cast<long>(y.size()));
    for (const auto& x : farey_fractions(40)) {
        const Rational f = empirical_F(y, x);
        // 1 - F0_{n-1}(1 - x) over the reflected set, rescaled for the extra point 1
        const Rational strict = empirical_F0_strict(y, Rational(1) - x);
        Rational expect = (size * (Rational(1) - strict) + (x == Rational(1) ? 1 : 0)) / (size + Rational(1));
        if (f != expect) return fail(name, cat("at ", x));
    }
    return pass(name, cat("n = ", level));
}

CheckResult check_subtree_ratio(int max_n) {
    const std::string name = "empirical F0 at 1/a1 equals a subtree ratio";
    const auto levels = d_levels(max_n);
    std::vector<Rational> y;
    std::string strict_note = "strict count matches";
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& node : levels[static_cast<std::size_t>(n - 1)]) y.push_back(node.value);
        std::sort(y.begin(), y.end());
        const Rational total(static_cast<long>(y.size()));
        for (Quotient a1 : {1, 3, 5, 7}) {
            const OddCF root{Form::zero, {{1, a1}, {1, 1}}};
            const Rational ratio = Rational(subtree_count(root, n)) / total;
            const Rational x(1L, static_cast<long>(a1));
            const Rational emp = empirical_F0(y, x);
            if (emp != ratio) {
                const bool strict_ok = empirical_F0_strict(y, x) == ratio;
                return fail(name, cat("a1 = ", a1, ", n = ", n, ": ", emp, " vs ", ratio,
                                      strict_ok ? " (the count with xi < x agrees)" : ""));
            }
        }
    }
    return pass(name, cat("a1 in {1, 3, 5, 7}, n <= ", max_n));
}

CheckResult check_ratio_audit(int max_level) {
    const std::string name = "mediant ratio audit";
    std::size_t pairs = 0;
    for (int level = 0; level <= max_level; ++level) {
        for (AuditTarget target : {AuditTarget::F, AuditTarget::F0}) {
            const AuditReport r = mediant_ratio_audit(level, target);
            const char* g = target == AuditTarget::F ? "F" : "F0";
            if (!r.all_members) return fail(name, cat(g, " ratio outside the set at level ", level));
            if (!r.all_normalized) return fail(name, cat(g, " normalized ratio outside the set at level ", level));
            if (!r.all_correlated) return fail(name, cat(g, " ratio and node type disagree at level ", level));
            pairs += r.rows.size();
        }
    }
    return pass(name, cat(pairs, " pairs, levels 0..", max_level));
}

CheckResult check_probe(std::uint64_t seed, std::size_t count) {
    const std::string name = "difference quotients vanish at rationals";
    const auto steps = decimal_steps(2, 6);
    for (const auto& x : random_rationals(count, 20, seed + 6, true)) {
        const auto rows = derivative_probe(x, steps);
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (rows[i - 1].h > Rational(1, 1000)) continue;
            if (!(rows[i].quotient.hi < rows[i - 1].quotient.lo))
                return fail(name, cat("no decrease at x = ", x, ", h = ", rows[i].h));
        }
        if (!(rows.back().quotient.hi < Rational(1, 10)))
            return fail(name, cat("quotient at x = ", x, " stays above 0.1"));
    }
    return pass(name, cat(count, " random rationals, h = 1e-2..1e-6"));
}

// ---- suites

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"arith", "field", "contfrac", "distribution", "tree", "empirical"};
    return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& o) {
    if (o.max_level < 4) throw std::domain_error("verify needs --max-level >= 4");
    const int L = o.max_level;
    const std::uint64_t s = o.seed;
    using Check = std::function<CheckResult()>;
    const std::map<std::string, std::vector<Check>, std::less<>> suites{
        {"arith",
         {[] { return check_rational_canonical(40); }, [s] { return check_mediant_between(s, 2000); },
          [s] { return check_compare_order(s, 2000); }}},
        {"field",
         {[s] { return check_field_axioms(s, 200); }, [] { return check_lambda_power_recurrence(30); },
          [s] { return check_enclose_sum(s, 200); }, [] { return check_lambda_bisection(96); },
          [] { return check_lambda_certificate(); }}},
        {"contfrac",
         {[] { return check_roundtrip(200); }, [] { return check_odd_uniqueness(200); },
          [] { return check_expansions_valid(200); }, [] { return check_conversion(200); },
          [] { return check_odd_div(500); }, [] { return check_termination(200); },
          [s] { return check_S_shift(s, 100); }, [] { return check_known_expansions(); }}},
        {"distribution",
         {[L] { return check_monotone(L); }, [] { return check_boundary(); },
          [] { return check_ordinary_series(200); }, [] { return check_reflection(100); },
          [s] { return check_functional_equations(s, 100, 5); }, [] { return check_numeric_enclosures(60); },
          [] { return check_convergence(10, 20); }}},
        {"tree",
         {[] { return check_first_levels(); }, [L] { return check_level_counts(L + 3); },
          [L] { return check_phi_bijection(L); }, [L] { return check_levels_match_S0(L); },
          [L] { return check_arrow_lengths(L); }, [L] { return check_bruteforce_levels(std::min(L, 12)); },
          [L] { return check_count_recurrences(30, L + 3); }, [L] { return check_subtree_counts(8, L); },
          [] { return check_ratio_limits(); }}},
        {"empirical",
         {[L] { return check_step_cdf(L); }, [L] { return check_empirical_F_reflection(L); },
          [L] { return check_subtree_ratio(L); }, [L] { return check_ratio_audit(std::min(L, 10)); },
          [s] { return check_probe(s, 25); }}},
    };

    std::vector<std::string_view> chosen;
    if (suite == "all") {
        for (const auto& n : suite_names()) chosen.push_back(n);
    } else if (suites.contains(suite)) {
        chosen.push_back(suite);
    } else {
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    }

    std::vector<CheckResult> out;
    for (auto name : chosen) {
        for (const auto& check : suites.find(name)->second) {
            CheckResult r = check();
            r.name = std::string(name) + ": " + r.name;
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace oddcf
