// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
// `acceptance --freeze` rewrites the golden files instead of comparing.
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oddcf/empirical.hpp"
#include "oddcf/verify.hpp"

#ifndef ODDCF_GOLDEN_DIR
#define ODDCF_GOLDEN_DIR "tests/golden"
#endif

using namespace oddcf;

namespace {

bool freeze = false;

CheckResult both(std::string name, const CheckResult& a, const CheckResult& b) {
    return {std::move(name), a.passed && b.passed,
            (a.passed ? "" : "FAILED ") + a.name + ": " + a.detail + "; " + (b.passed ? "" : "FAILED ") + b.name +
                ": " + b.detail};
}

CheckResult golden(const std::string& name, const std::string& file, const std::string& text) {
    const std::string path = std::string(ODDCF_GOLDEN_DIR) + "/" + file;
    if (freeze) {
        std::ofstream(path) << text;
        return {name, true, "wrote " + path};
    }
    std::ifstream in(path);
    if (!in) return {name, false, "missing " + path};
    std::stringstream ss;
    ss << in.rdbuf();
    if (ss.str() != text) return {name, false, "output differs from " + path};
    return {name, true, "matches " + file};
}

std::string convergence_summary() {
    const auto grid = y_set(10);
    const auto rows = convergence_table(20, grid);
    std::ostringstream os;
    os << "n,max_abs_error\n";
    for (int n = 1; n <= 20; ++n) os << n << ',' << to_decimal(max_error(rows, n), 10, Rounding::up) << '\n';
    return os.str();
}

std::string probe_table() {
    std::vector<ProbeRow> all;
    const auto steps = decimal_steps(2, 6);
    for (const auto& x : random_rationals(25, 20, kDefaultSeed + 6, true)) {
        auto rows = derivative_probe(x, steps);
        all.insert(all.end(), rows.begin(), rows.end());
    }
    std::ostringstream os;
    export_csv(os, all, 6);
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--freeze") freeze = true;

    struct Criterion {
        int id;
        CheckResult (*run)();
    };
    const std::vector<Criterion> criteria{
        {1, [] { return both("tree levels and worked expansions", check_first_levels(), check_known_expansions()); }},
        {2, [] { return both("Phi bijection and level sizes", check_phi_bijection(14), check_level_counts(20)); }},
        {3, [] { return check_count_recurrences(30, 17); }},
        {4, [] { return check_reflection(100); }},
        {5, [] { return check_ordinary_series(200); }},
        {6, [] { return check_conversion(200); }},
        {7, [] { return check_functional_equations(kDefaultSeed, 100, 5); }},
        {8, [] { return both("subtree counts and subtree ratios", check_subtree_counts(8, 14), check_subtree_ratio(14)); }},
        {9, [] { return both("count ratios and lambda", check_ratio_limits(), check_lambda_certificate()); }},
        {10, [] { return check_ratio_audit(10); }},
        {11, [] { return both("convergence", check_convergence(10, 20),
                              golden("convergence golden", "convergence_max_error.csv", convergence_summary())); }},
        {12, [] { return both("derivative probe", check_probe(kDefaultSeed, 25),
                              golden("probe golden", "probe.csv", probe_table())); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {"exception", false, e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << c.id << ": " << r.name << " (" << r.detail
                  << ") [" << secs << " s]\n";
        if (!r.passed) ++failed;
    }
    std::cout << 12 - failed << " of 12 criteria passed\n";
    return failed == 0 ? 0 : 1;
}
