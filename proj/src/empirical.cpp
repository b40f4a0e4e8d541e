#include "oddcf/empirical.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "oddcf/distribution.hpp"

namespace oddcf {

Rational empirical_F0(std::span<const Rational> sorted_y, const Rational& x) {
    if (sorted_y.empty()) throw std::domain_error("empty sample");
    const auto count = std::upper_bound(sorted_y.begin(), sorted_y.end(), x) - sorted_y.begin();
    return Rational(static_cast<long>(count), static_cast<long>(sorted_y.size()));
}

Rational empirical_F0(int n, const Rational& x) {
    const auto y = y_set(n);
    return empirical_F0(y, x);
}

Rational empirical_F0_strict(std::span<const Rational> sorted_y, const Rational& x) {
    if (sorted_y.empty()) throw std::domain_error("empty sample");
    const auto count = std::lower_bound(sorted_y.begin(), sorted_y.end(), x) - sorted_y.begin();
    return Rational(static_cast<long>(count), static_cast<long>(sorted_y.size()));
}

Rational empirical_F(std::span<const Rational> sorted_y_prev, const Rational& x) {
    // 1 - xi <= x  <=>  xi >= 1 - x
    const Rational reflected = Rational(1) - x;
    const auto below = std::lower_bound(sorted_y_prev.begin(), sorted_y_prev.end(), reflected) - sorted_y_prev.begin();
    long count = static_cast<long>(sorted_y_prev.size()) - static_cast<long>(below);
    if (x >= Rational(1)) ++count;
    return Rational(count, static_cast<long>(sorted_y_prev.size()) + 1);
}

Rational empirical_F(int n, const Rational& x) {
    if (n < 2) throw std::domain_error("empirical F needs n >= 2");
    const auto y = y_set(n - 1);
    return empirical_F(y, x);
}

std::vector<ConvergenceRow> convergence_table(int max_n, std::span<const Rational> grid, unsigned precision_bits) {
    if (max_n < 1) throw std::domain_error("convergence table needs max_n >= 1");
    const auto levels = d_levels(max_n);
    std::vector<Enclosure> exact;
    exact.reserve(grid.size());
    for (const auto& x : grid) exact.push_back(enclose(F0_exact(x), precision_bits));

    std::vector<ConvergenceRow> rows;
    rows.reserve(grid.size() * static_cast<std::size_t>(max_n));
    std::vector<Rational> y;
    for (int n = 1; n <= max_n; ++n) {
        for (const auto& node : levels[static_cast<std::size_t>(n - 1)]) y.push_back(node.value);
        std::sort(y.begin(), y.end());
        for (std::size_t i = 0; i < grid.size(); ++i) {
            ConvergenceRow row;
            row.n = n;
            row.x = grid[i];
            row.empirical = empirical_F0(y, grid[i]);
            row.exact = exact[i];
            row.abs_error_bound = std::max(abs(row.empirical - exact[i].lo), abs(row.empirical - exact[i].hi));
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

Rational max_error(std::span<const ConvergenceRow> rows, int n) {
    Rational worst;
    for (const auto& r : rows)
        if (r.n == n && r.abs_error_bound > worst) worst = r.abs_error_bound;
    return worst;
}

std::string to_string(RatioClass c) {
    switch (c) {
    case RatioClass::lambda_minus_one: return "lambda-1";
    case RatioClass::inv_lambda_minus_one: return "1/(lambda-1)";
    case RatioClass::lambda: return "lambda";
    case RatioClass::inv_lambda: return "1/lambda";
    case RatioClass::other: break;
    }
    return "other";
}

namespace {

struct AuditConstants {
    CubicNumber lambda = CubicNumber::lambda();
    CubicNumber lambda_minus_one = lambda - CubicNumber(1);
    CubicNumber inv_lambda_minus_one = lambda_minus_one.inverse();
    CubicNumber inv_lambda = lambda.inverse();
    std::array<CubicNumber, 4> normalized{lambda / (lambda + CubicNumber(1)), (lambda + CubicNumber(1)).inverse(),
                                          lambda_minus_one / lambda, inv_lambda};
};

const AuditConstants& audit_constants() {
    static const AuditConstants k;
    return k;
}

RatioClass classify_ratio(const CubicNumber& r) {
    const auto& k = audit_constants();
    if (r == k.lambda_minus_one) return RatioClass::lambda_minus_one;
    if (r == k.inv_lambda_minus_one) return RatioClass::inv_lambda_minus_one;
    if (r == k.lambda) return RatioClass::lambda;
    if (r == k.inv_lambda) return RatioClass::inv_lambda;
    return RatioClass::other;
}

}  // namespace

AuditReport mediant_ratio_audit(int level, AuditTarget target) {
    const auto seq = stern_brocot_level(level);
    auto G = [target](const Rational& x) { return target == AuditTarget::F ? F_exact(x) : F0_exact(x); };
    std::vector<CubicNumber> values;
    values.reserve(seq.size());
    for (const auto& x : seq) values.push_back(G(x));

    const auto& k = audit_constants();
    AuditReport report;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        AuditRow row;
        row.level = level;
        row.x = seq[i];
        row.y = seq[i + 1];
        row.mediant = mediant(row.x, row.y);
        const CubicNumber gm = G(row.mediant);
        const CubicNumber left = gm - values[i];
        const CubicNumber right = values[i + 1] - gm;
        row.ratio = left / right;
        row.normalized = left / (values[i + 1] - values[i]);
        row.ratio_class = classify_ratio(row.ratio);
        row.normalized_in_set =
            std::find(k.normalized.begin(), k.normalized.end(), row.normalized) != k.normalized.end();
        const OddCF rep = target == AuditTarget::F ? expand_odd_one(row.mediant) : expand_odd_zero(row.mediant);
        row.node_type = rep.terms.back().a == 1 ? NodeType::first : NodeType::second;

        ++report.class_counts[static_cast<std::size_t>(row.ratio_class)];
        report.all_members = report.all_members && row.ratio_class != RatioClass::other;
        report.all_normalized = report.all_normalized && row.normalized_in_set;
        const bool first_branch = row.ratio_class == RatioClass::lambda_minus_one ||
                                  row.ratio_class == RatioClass::inv_lambda_minus_one;
        report.all_correlated = report.all_correlated && first_branch == (row.node_type == NodeType::first);
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::vector<ProbeRow> derivative_probe(const Rational& x, std::span<const Rational> steps, unsigned relative_bits) {
    if (x.sign() <= 0 || x >= Rational(1)) throw std::domain_error("probe point must lie in (0, 1)");
    const Rational reach = std::min(x, Rational(1) - x);
    for (const auto& h : steps) {
        if (h.sign() <= 0) throw std::domain_error("probe steps must be positive");
        if (h > reach) throw std::domain_error("step " + h.str() + " leaves [0, 1] around " + x.str());
    }
    std::vector<ProbeRow> rows;
    rows.reserve(steps.size());
    for (const auto& h : steps) {
        const CubicNumber diff = F_exact(x + h) - F_exact(x - h);
        const CubicNumber quotient = diff * CubicNumber(Rational(1) / (h + h));
        rows.push_back({x, h, enclose_relative(quotient, relative_bits)});
    }
    return rows;
}

std::vector<Rational> decimal_steps(int first, int last) {
    std::vector<Rational> out;
    Integer p = 1;
    for (int k = 0; k < first; ++k) p *= 10;
    for (int k = first; k <= last; ++k, p *= 10) out.emplace_back(Integer(1), p);
    return out;
}

void export_csv(std::ostream& os, std::span<const ConvergenceRow> rows, int digits) {
    os << "n,x,empirical,exact_lo,exact_hi,abs_error_bound\n";
    for (const auto& r : rows) {
        os << r.n << ',' << r.x << ',' << to_decimal(r.empirical, digits) << ','
           << to_decimal(r.exact.lo, digits, Rounding::down) << ',' << to_decimal(r.exact.hi, digits, Rounding::up)
           << ',' << to_decimal(r.abs_error_bound, digits, Rounding::up) << '\n';
    }
}

void export_csv(std::ostream& os, const AuditReport& report) {
    os << "level,x,y,mediant,ratio_class,node_type\n";
    for (const auto& r : report.rows) {
        os << r.level << ',' << r.x << ',' << r.y << ',' << r.mediant << ',' << to_string(r.ratio_class) << ','
           << to_string(r.node_type) << '\n';
    }
}

void export_csv(std::ostream& os, std::span<const ProbeRow> rows, int digits) {
    os << "x,h,quotient_lo,quotient_hi\n";
    for (const auto& r : rows) {
        os << r.x << ',' << r.h << ',' << to_scientific(r.quotient.lo, digits, Rounding::down) << ','
           << to_scientific(r.quotient.hi, digits, Rounding::up) << '\n';
    }
}

}  // namespace oddcf
