#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "oddcf/contfrac.hpp"
#include "oddcf/cubic.hpp"
#include "oddcf/distribution.hpp"
#include "oddcf/empirical.hpp"
#include "oddcf/rational.hpp"
#include "oddcf/tree.hpp"
#include "oddcf/verify.hpp"

using namespace oddcf;

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Runs `emit` against the --out file when one is given, stdout otherwise.
template <class Emit>
void with_output(const std::string& path, Emit emit) {
    if (path.empty()) {
        emit(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    emit(out);
    if (!out) throw IoError("write to " + path + " failed");
}

Rational rational_or_cf(const std::string& text) {
    if (!text.empty() && text.front() == '[') return eval(parse_cf(text));
    return Rational::parse(text);
}

void print_value(const char* label, const CubicNumber& v, bool exact, int digits) {
    if (exact) std::cout << label << " = " << v.str() << '\n';
    std::cout << "≈ " << to_decimal(v, digits) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Odd continued fractions and their limit distribution functions"};
    app.require_subcommand(1);

    std::string arg;
    std::string kind = "odd";
    std::string form = "zero";
    bool exact = false;
    bool prefix = false;
    int digits = 12;
    int level = 4;
    std::string set = "X";
    int upto = 10;
    int at = 25;
    std::string suite = "all";
    VerifyOptions vopt;
    int max_n = 20;
    int grid_level = 10;
    std::string target = "F";
    int from = 1;
    int to = 6;
    std::string out;

    auto* expand = app.add_subcommand("expand", "Expand a rational in [0, 1] as a continued fraction");
    expand->add_option("x", arg, "p/q")->required();
    expand->add_option("--kind", kind, "ordinary or odd")->check(CLI::IsMember({"ordinary", "odd"}));
    expand->add_option("--form", form, "zero or one (odd kind only)")->check(CLI::IsMember({"zero", "one"}));

    auto* convert = app.add_subcommand("convert", "Rewrite an ordinary continued fraction with odd quotients");
    convert->add_option("cf", arg, "e.g. [0; 2, 1, 2]")->required();

    auto* evalc = app.add_subcommand("eval", "Evaluate continued fraction text");
    evalc->add_option("cf", arg, "ordinary or odd continued fraction")->required();

    auto* eval_f = app.add_subcommand("eval-f", "Evaluate F at a rational");
    eval_f->add_option("x", arg, "p/q or continued fraction text")->required();
    auto* eval_f0 = app.add_subcommand("eval-f0", "Evaluate F0 at a rational or on an odd prefix");
    eval_f0->add_option("x", arg, "p/q or continued fraction text")->required();
    eval_f0->add_flag("--prefix", prefix, "treat odd continued fraction text as a truncated expansion");
    for (auto* c : {eval_f, eval_f0}) {
        c->add_flag("--exact", exact, "also print the element of Q(lambda)");
        c->add_option("--digits", digits, "decimal places")->check(CLI::Range(1, 10000));
    }

    auto* enumerate = app.add_subcommand("enumerate", "List the level set X_n or the union Y_n");
    enumerate->add_option("--level", level, "n >= 1")->required()->check(CLI::Range(1, 40));
    enumerate->add_option("--set", set, "X or Y")->check(CLI::IsMember({"X", "Y"}));

    auto* countsc = app.add_subcommand("counts", "X_n, Y_n, Z_n from their recurrences");
    countsc->add_option("--upto", upto, "largest n")->required()->check(CLI::Range(1, 100000));

    auto* ratios = app.add_subcommand("ratios", "Count ratios against their limits");
    ratios->add_option("--at", at, "n >= 4")->required()->check(CLI::Range(4, 100000));
    ratios->add_option("--digits", digits, "decimal places")->check(CLI::Range(1, 1000));

    auto* verify = app.add_subcommand("verify", "Run property suites");
    verify->add_option("--suite", suite, "arith|field|contfrac|distribution|tree|empirical|all")
        ->check(CLI::IsMember({"arith", "field", "contfrac", "distribution", "tree", "empirical", "all"}));
    verify->add_option("--max-level", vopt.max_level, "enumeration depth for tree checks")->check(CLI::Range(4, 20));
    verify->add_option("--seed", vopt.seed, "seed for the random samples");

    auto* convergence = app.add_subcommand("convergence", "CSV of empirical F0 against exact F0");
    convergence->add_option("--max-n", max_n, "largest enumeration level")->check(CLI::Range(1, 26));
    convergence->add_option("--grid-level", grid_level, "grid is Y_k for this k")->check(CLI::Range(1, 16));
    convergence->add_option("--digits", digits, "decimal places")->check(CLI::Range(1, 100));

    auto* audit = app.add_subcommand("ratio-audit", "CSV of mediant ratios over Stern-Brocot levels");
    audit->add_option("--level", level, "audit levels 0..n")->required()->check(CLI::Range(0, 16));
    audit->add_option("--target", target, "F or F0")->check(CLI::IsMember({"F", "F0"}));

    auto* probe = app.add_subcommand("derivative-probe", "CSV of symmetric difference quotients of F");
    probe->add_option("x", arg, "p/q in (0, 1)")->required();
    probe->add_option("--from", from, "first step is 10^-from")->check(CLI::Range(0, 12));
    probe->add_option("--to", to, "last step is 10^-to")->check(CLI::Range(0, 12));
    probe->add_option("--digits", digits, "significant digits")->check(CLI::Range(1, 100));

    for (auto* c : {convergence, audit, probe}) c->add_option("--out", out, "write CSV here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*expand) {
            const Rational x = Rational::parse(arg);
            if (kind == "ordinary") std::cout << format_cf(expand_ordinary(x)) << '\n';
            else std::cout << format_cf(form == "zero" ? expand_odd_zero(x) : expand_odd_one(x)) << '\n';
        } else if (*convert) {
            std::cout << format_cf(convert_ordinary_to_odd(parse_ordinary_cf(arg))) << '\n';
        } else if (*evalc) {
            std::cout << eval(parse_cf(arg)) << '\n';
        } else if (*eval_f) {
            print_value("F", F_exact(rational_or_cf(arg)), exact, digits);
        } else if (*eval_f0) {
            if (prefix) {
                const Enclosure e = F0_numeric(parse_odd_cf(arg, true), static_cast<unsigned>(4 * digits + 16));
                std::cout << "F0 in [" << to_decimal(e.lo, digits, Rounding::down) << ", "
                          << to_decimal(e.hi, digits, Rounding::up) << "]\n";
            } else {
                print_value("F0", F0_exact(rational_or_cf(arg)), exact, digits);
            }
        } else if (*enumerate) {
            const auto levels = d_levels(level);
            if (set == "X") {
                for (const auto& node : levels.back()) std::cout << node.value << '\n';
            } else {
                for (const auto& y : y_set(level)) std::cout << y << '\n';
            }
        } else if (*countsc) {
            std::cout << "n,X,Y,Z\n";
            for (const auto& c : counts_upto(upto))
                if (c.n > 0) std::cout << c.n << ',' << c.X << ',' << c.Y << ',' << c.Z << '\n';
        } else if (*ratios) {
            for (const auto& line : ratio_report(at).lines) {
                std::cout << line.name << " = " << line.value << " ≈ " << to_decimal(line.value, digits)
                          << "  limit ≈ " << to_decimal(line.limit, digits) << "  distance <= "
                          << to_scientific(line.distance.hi, 3, Rounding::up) << '\n';
            }
        } else if (*verify) {
            std::size_t failed = 0;
            const auto results = run_suite(suite, vopt);
            for (const auto& r : results) {
                std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
                if (!r.passed) ++failed;
            }
            std::cout << results.size() - failed << " of " << results.size() << " checks passed\n";
            return failed == 0 ? 0 : 1;
        } else if (*convergence) {
            const auto grid = y_set(grid_level);
            const auto rows = convergence_table(max_n, grid);
            with_output(out, [&](std::ostream& os) { export_csv(os, rows, digits); });
        } else if (*audit) {
            const AuditTarget t = target == "F" ? AuditTarget::F : AuditTarget::F0;
            with_output(out, [&](std::ostream& os) {
                AuditReport all;
                for (int k = 0; k <= level; ++k) {
                    AuditReport r = mediant_ratio_audit(k, t);
                    for (auto& row : r.rows) all.rows.push_back(std::move(row));
                }
                export_csv(os, all);
            });
        } else if (*probe) {
            if (from > to) throw std::domain_error("--from must not exceed --to");
            const auto rows = derivative_probe(Rational::parse(arg), decimal_steps(from, to));
            with_output(out, [&](std::ostream& os) { export_csv(os, rows, digits); });
        }
    } catch (const ParseError& e) {
        std::cerr << "error: parse: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "error: resource: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "error: io: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: domain: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: usage: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
