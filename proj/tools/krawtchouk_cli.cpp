// krawtchouk: emit Krawtchouk matrices and Boolean-lattice operators, run the
// identity suites, and compare computed algebra statistics with closed forms.
//
// Exit codes: 0 all checks pass, 1 an identity or statistic failed, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "krawtchouk/algebra.hpp"
#include "krawtchouk/io.hpp"
#include "krawtchouk/krawtchouk.hpp"
#include "krawtchouk/suites.hpp"
#include "krawtchouk/zeon.hpp"

namespace {

using namespace krawtchouk;

constexpr const char* kVersion = "1.0.0";
constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr const char* kFormatEnv = "KRAWTCHOUK_FORMAT";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// KRAWTCHOUK_FORMAT when it names one of `allowed`, else `fallback`.
std::string default_format(const std::vector<std::string>& allowed, const std::string& fallback) {
    if (const char* env = std::getenv(kFormatEnv)) {
        for (const auto& a : allowed)
            if (a == env) return a;
    }
    return fallback;
}

ExactRational parse_r(const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// ---------------------------------------------------------------------------

struct MatrixArgs {
    int n = 0;
    std::string r = "1";
    std::string format;
};

int cmd_matrix(const MatrixArgs& args) {
    if (args.n < 0) throw UsageError("--n must be nonnegative");
    const KrawtchoukMatrix m = build_matrix(args.n, parse_r(args.r));
    if (args.format == "csv") std::cout << matrix_csv(m);
    else if (args.format == "json") std::cout << matrix_json(m).dump(2) << '\n';
    else std::cout << matrix_pretty(m);
    return kExitPass;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    int max_n = 10;
    std::vector<std::string> r_values;
    std::string format;
    unsigned jobs = 1;
    bool inject_fault = false;
};

int cmd_verify(const VerifyArgs& args) {
    if (args.max_n < 0) throw UsageError("--max-n must be nonnegative");
    if (args.suite != "all" && std::find(suite_names().begin(), suite_names().end(), args.suite) == suite_names().end())
        throw UsageError("unknown suite '" + args.suite + "'");

    SuiteConfig config;
    config.max_n = args.max_n;
    config.jobs = std::max(1U, args.jobs);
    config.inject_fault = args.inject_fault;
    if (!args.r_values.empty()) {
        config.r_values.clear();
        for (const auto& r : args.r_values) config.r_values.push_back(parse_r(r));
    }

    const auto start = std::chrono::steady_clock::now();
    const std::vector<IdentityReport> reports = run_suites(args.suite, config);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::size_t cases = 0, failures = 0;
    for (const auto& r : reports) {
        cases += r.cases();
        failures += r.failure_count();
    }
    const bool passed = failures == 0;

    json r_list = json::array();
    for (const auto& r : config.r_values) r_list.push_back(to_fraction_string(r));

    if (args.format == "json") {
        json suites = json::array();
        for (const auto& r : reports) suites.push_back(identity_report_json(r));
        const json out = {{"schema", kSchemaVersion},
                          {"kind", "verify_report"},
                          {"tool", "krawtchouk"},
                          {"version", kVersion},
                          {"parameters", {{"suite", args.suite}, {"max_n", args.max_n}, {"r_values", r_list}}},
                          {"suites", std::move(suites)},
                          {"total_cases", cases},
                          {"total_failures", failures},
                          {"passed", passed},
                          {"wall_time_seconds", seconds}};
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "krawtchouk verify " << kVersion << "  suite=" << args.suite << "  max-n=" << args.max_n
                  << "  r=";
        for (std::size_t k = 0; k < config.r_values.size(); ++k)
            std::cout << (k ? "," : "") << to_string(config.r_values[k]);
        std::cout << '\n';
        for (const auto& r : reports) {
            std::cout << std::left << std::setw(14) << r.suite() << " cases=" << std::setw(8) << r.cases()
                      << " failures=" << std::setw(6) << r.failure_count() << (r.passed() ? "PASS" : "FAIL") << '\n';
            std::size_t shown = 0;
            for (const auto& f : r.failures()) {
                if (shown++ == 10) break;
                std::cout << "  FAIL " << f.relation << " [" << f.params << "] lhs=" << to_string(f.lhs)
                          << " rhs=" << to_string(f.rhs) << '\n';
            }
        }
        std::cout << "total cases=" << cases << " failures=" << failures << "  " << (passed ? "PASS" : "FAIL") << '\n';
        std::cerr << "wall time " << std::fixed << std::setprecision(3) << seconds << " s\n";
    }
    return passed ? kExitPass : kExitViolation;
}

// ---------------------------------------------------------------------------

struct ZeonArgs {
    int n = 1;
    std::string op = "T";
    std::string format;
};

ZeonMatrix zeon_operator(int n, const std::string& op) {
    if (op == "T") return op_T(n);
    if (op == "Tstar") return op_Tstar(n);
    if (op == "U") return op_U(n);
    const auto colon = op.find(':');
    if (colon != std::string::npos) {
        const std::string kind = op.substr(0, colon);
        const std::string index = op.substr(colon + 1);
        if ((kind == "raise" || kind == "lower") && !index.empty() &&
            index.find_first_not_of("0123456789") == std::string::npos && index.size() < 4) {
            const int i = std::stoi(index);
            if (i < 1 || i > n) throw UsageError("generator index out of range in '" + op + "'");
            return kind == "raise" ? raise(n, i) : lower(n, i);
        }
    }
    throw UsageError("bad operator '" + op + "' (expected T, Tstar, U, raise:i, lower:i)");
}

int cmd_zeon(const ZeonArgs& args) {
    if (args.n < 1 || args.n > 12) throw UsageError("--n must be in [1, 12]");
    const ZeonMatrix m = zeon_operator(args.n, args.op);
    const bool diagonal = args.op == "U";
    if (args.format == "json") std::cout << zeon_json(m, args.op, diagonal).dump(2) << '\n';
    else std::cout << zeon_coordinates(m, args.op, diagonal);
    return kExitPass;
}

// ---------------------------------------------------------------------------

struct AlgebraArgs {
    int n = 1;
    std::string family = "U";
    bool check = false;
    bool allow_large = false;
    std::string format;
    unsigned jobs = 1;
};

AlgebraFamily parse_family(const std::string& name) {
    if (name == "U") return AlgebraFamily::GenU;
    if (name == "T") return AlgebraFamily::GenTTstar;
    if (name == "TT") return AlgebraFamily::GenTTstarTstarT;
    throw UsageError("unknown family '" + name + "' (expected U, T, TT)");
}

int cmd_algebra(const AlgebraArgs& args) {
    const AlgebraFamily family = parse_family(args.family);
    if (args.n < 1) throw UsageError("--n must be at least 1");
    FamilyReport report;
    try {
        report = analyze_family(family, args.n, {args.allow_large, std::max(1U, args.jobs)});
    } catch (const BudgetExceeded& e) {
        throw UsageError(e.what());
    }

    if (args.format == "json") {
        std::cout << family_report_json(report).dump(2) << '\n';
    } else {
        auto row = [](const char* name, const ExactInt& computed, const ExactInt& predicted, bool match) {
            std::cout << std::left << std::setw(8) << name << std::right << std::setw(12) << computed.get_str()
                      << std::setw(12) << predicted.get_str() << "  " << (match ? "match" : "MISMATCH") << '\n';
        };
        std::cout << "family " << to_string(report.family) << "  n=" << report.n << '\n';
        std::cout << std::left << std::setw(8) << "stat" << std::right << std::setw(12) << "computed"
                  << std::setw(12) << "predicted" << '\n';
        row("d", report.computed.d, report.predicted.stats.d, report.match_d);
        row("delta", report.computed.delta, report.predicted.stats.delta, report.match_delta);
        row("zeta", report.computed.zeta, report.predicted.stats.zeta, report.match_zeta);
        row("z", report.computed.z, report.predicted.stats.z, report.match_z);
        std::cout << "components (m, d):";
        for (const auto& c : report.predicted.components)
            std::cout << " (" << c.multiplicity.get_str() << "," << c.degree.get_str() << ")";
        std::cout << "\ncomponent count " << report.component_count << '\n';
        if (report.family == AlgebraFamily::GenTTstarTstarT && !report.match_z)
            std::cout << "NOTE: paper-stated z differs: stated " << report.predicted.stats.z.get_str()
                      << ", computed " << report.computed.z.get_str() << ", component count "
                      << report.component_count << '\n';
        for (const auto& note : report.notes)
            if (note.rfind("n = 6", 0) == 0) std::cerr << "warning: " << note << '\n';
    }
    if (args.check) return report.passes_check() ? kExitPass : kExitViolation;
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Krawtchouk matrices, identity verification and Boolean-lattice algebra statistics"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    MatrixArgs matrix_args;
    matrix_args.format = default_format({"pretty", "csv", "json"}, "pretty");
    auto* matrix = app.add_subcommand("matrix", "Print the Krawtchouk matrix of order N for parameter r");
    matrix->add_option("--n", matrix_args.n, "Order N")->required();
    matrix->add_option("--r", matrix_args.r, "Parameter r as num/den or integer")->capture_default_str();
    matrix->add_option("--format", matrix_args.format, "pretty, csv or json")
        ->check(CLI::IsMember({"pretty", "csv", "json"}))
        ->capture_default_str();

    VerifyArgs verify_args;
    verify_args.format = default_format({"text", "json"}, "text");
    auto* verify = app.add_subcommand("verify", "Run identity suites over parameter grids");
    verify->add_option("--suite", verify_args.suite, "Suite name or 'all'")->capture_default_str();
    verify->add_option("--max-n", verify_args.max_n, "Largest order (or index) in the grids")->capture_default_str();
    verify->add_option("--r", verify_args.r_values, "Parameter values (repeatable); default 0,1,2,1/2,3/7,-2,5")
        ->delimiter(',');
    verify->add_option("--format", verify_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    verify->add_option("--jobs", verify_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--inject-fault", verify_args.inject_fault)->group("");

    ZeonArgs zeon_args;
    zeon_args.format = default_format({"coord", "json"}, "coord");
    auto* zeon = app.add_subcommand("zeon", "Print a Boolean-lattice operator as a sparse matrix");
    zeon->add_option("--n", zeon_args.n, "Number of zeon generators (1..12)")->required();
    zeon->add_option("--op", zeon_args.op, "T, Tstar, U, raise:i or lower:i")->capture_default_str();
    zeon->add_option("--format", zeon_args.format, "coord or json")
        ->check(CLI::IsMember({"coord", "json"}))
        ->capture_default_str();

    AlgebraArgs algebra_args;
    algebra_args.format = default_format({"text", "json"}, "text");
    auto* algebra = app.add_subcommand("algebra", "Compute algebra statistics and compare with closed forms");
    algebra->add_option("--n", algebra_args.n, "Number of zeon generators")->required();
    algebra->add_option("--family", algebra_args.family, "U, T (T and T*) or TT (TT* and T*T)")
        ->capture_default_str();
    algebra->add_flag("--check", algebra_args.check, "Exit 1 on any unexpected mismatch");
    algebra->add_flag("--allow-large", algebra_args.allow_large, "Permit n = 6");
    algebra->add_option("--format", algebra_args.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    algebra->add_option("--jobs", algebra_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*matrix) return cmd_matrix(matrix_args);
        if (*verify) return cmd_verify(verify_args);
        if (*zeon) return cmd_zeon(zeon_args);
        if (*algebra) return cmd_algebra(algebra_args);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
