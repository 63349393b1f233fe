#pragma once

// Named verification suites over parameter grids. A suite is split into
// independent tasks; tasks may run on several threads, and their reports are
// merged in task order so results never depend on the worker count.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "krawtchouk/algebra.hpp"
#include "krawtchouk/combinatorics.hpp"
#include "krawtchouk/identities.hpp"
#include "krawtchouk/identity_report.hpp"
#include "krawtchouk/krawtchouk.hpp"
#include "krawtchouk/zeon.hpp"

namespace krawtchouk {

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"pascal",      "recurrence", "involution", "symmetries",
                                                "rows-cols",   "conjugation", "sums",      "catalan",
                                                "supercatalan", "zeon"};
    return names;
}

inline std::vector<ExactRational> default_r_values() {
    return {ExactRational(0), ExactRational(1),  ExactRational(2), make_rational(1, 2),
            make_rational(3, 7), ExactRational(-2), ExactRational(5)};
}

struct SuiteConfig {
    int max_n = 10;
    std::vector<ExactRational> r_values = default_r_values();
    unsigned jobs = 1;
    bool inject_fault = false;  // corrupt one entry of every matrix the matrix suites build
    int zeon_max_n = 8;
};

namespace detail {

using SuiteTask = std::function<IdentityReport()>;

class SuiteBuilder {
public:
    SuiteBuilder(std::string name, const SuiteConfig& config) : name_(std::move(name)), config_(config) {}

    KrawtchoukMatrix matrix(int order, const ExactRational& r) const {
        KrawtchoukMatrix m = build_matrix(order, r);
        return config_.inject_fault ? m.perturbed(0, 0, 1) : m;
    }

    void add(SuiteTask task) { tasks_.push_back(std::move(task)); }

    IdentityReport run() const {
        std::vector<IdentityReport> parts(tasks_.size(), IdentityReport(name_));
        parallel_for(tasks_.size(), config_.jobs, [&](std::size_t k) { parts[k] = tasks_[k](); });
        IdentityReport merged(name_);
        for (const auto& p : parts) merged.merge(p);
        return merged;
    }

    const SuiteConfig& config() const { return config_; }
    const std::string& name() const { return name_; }

private:
    std::string name_;
    const SuiteConfig& config_;
    std::vector<SuiteTask> tasks_;
};

inline std::string tag(std::string_view key, long value) { return std::string(key) + "=" + std::to_string(value); }

inline void check_equality(IdentityReport& report, std::string_view relation, const std::string& where,
                           const Equality& e) {
    report.check(relation, where, e.lhs, e.rhs);
}

inline void build_pascal(SuiteBuilder& s) {
    for (int order = 0; order <= s.config().max_n; ++order)
        for (const auto& r : s.config().r_values)
            s.add([&s, order, r] { return verify_pascal(s.matrix(order, r), build_matrix(order + 1, r)); });
}

inline void build_recurrence(SuiteBuilder& s) {
    for (int order = 1; order <= s.config().max_n; ++order)
        for (const auto& r : s.config().r_values)
            s.add([&s, order, r] { return verify_recurrence_j(s.matrix(order, r)); });
}

inline void build_involution(SuiteBuilder& s) {
    for (int order = 0; order <= s.config().max_n; ++order)
        s.add([&s, order] {
            IdentityReport report("involution");
            report.check("square_is_2^N_identity", tag("N", order), verify_involution(s.matrix(order, 1)));
            return report;
        });
}

inline void build_symmetries(SuiteBuilder& s) {
    for (int order = 0; order <= s.config().max_n; ++order)
        s.add([&s, order] { return verify_sign_symmetries(s.matrix(order, 1)); });
}

inline void build_rows_cols(SuiteBuilder& s) {
    for (int order = 0; order <= s.config().max_n; ++order)
        s.add([&s, order] { return closed_form_row1_col01(s.matrix(order, 1), build_symmetric(order + 1)); });
}

inline void build_conjugation(SuiteBuilder& s) {
    for (int order = 0; order <= s.config().max_n; ++order)
        s.add([&s, order] { return verify_binomial_conjugation(s.matrix(order, 1)); });
}

inline void build_sums(SuiteBuilder& s) {
    const int max_n = s.config().max_n;
    for (int order = 1; order <= max_n; ++order) {
        for (const auto& r : s.config().r_values) {
            if (r == -1) continue;  // the general identity has a 1/(1+r) factor
            s.add([order, r] {
                IdentityReport report("sums");
                const auto phi = build_matrix(order, r);
                const auto prev = build_matrix(order - 1, r);
                for (int j = 0; j <= order; ++j)
                    for (int m = 0; m <= order; ++m)
                        check_equality(report, "sum_squares_general",
                                       tag("N", order) + " r=" + to_string(r) + " " + tag("j", j) + " " + tag("m", m),
                                       sum_squares_general(phi, prev, j, m));
                return report;
            });
        }
        s.add([order] {
            IdentityReport report("sums");
            const auto phi = build_symmetric(order);
            const auto prev = build_symmetric(order - 1);
            for (int j = 0; j <= order; ++j)
                for (int m = 0; m <= order; ++m) {
                    const std::string where = tag("N", order) + " " + tag("j", j) + " " + tag("m", m);
                    const Equality symmetric = sum_squares_symmetric(phi, prev, j, m);
                    check_equality(report, "sum_squares_symmetric", where, symmetric);
                    const Equality general = sum_squares_general(phi, prev, j, m);
                    report.check("symmetric_matches_general_lhs", where, symmetric.lhs, general.lhs);
                    report.check("symmetric_matches_general_rhs", where, symmetric.rhs, general.rhs);
                    if (j >= 2) {
                        const TripleEquality plain = partial_sum_plain(phi, prev, j, m);
                        report.check("partial_sum_plain_1", where, plain.lhs, plain.rhs1);
                        report.check("partial_sum_plain_2", where, plain.lhs, plain.rhs2);
                    }
                    if (j <= order - 1 && m <= order - 1)
                        check_equality(report, "column_sum_relation", where, column_sum_relation(phi, prev, j, m));
                }
            return report;
        });
    }
    for (int order = 0; order <= max_n; ++order)
        s.add([order] {
            IdentityReport report("sums");
            const auto phi = build_symmetric(order);
            for (int j = 0; j <= order; ++j) {
                const std::string where = tag("N", order) + " " + tag("j", j);
                const IntegerEquality col = column_sum_of_squares(phi, j);
                report.check("column_sum_of_squares", where, ExactRational(col.brute), col.closed);
                report.check("column_closed_form_integral", where, is_integer(col.closed));
                const IntegerEquality row = row_sum_of_squares(phi, j);
                report.check("row_sum_of_squares", tag("N", order) + " " + tag("i", j), ExactRational(row.brute),
                             row.closed);
                report.check("central_row_value", where, central_row_value(order, j), phi(order / 2, j));
            }
            return report;
        });
}

inline void build_catalan(SuiteBuilder& s) {
    const int max_n = s.config().max_n;
    for (int m = 0; m <= max_n; ++m)
        s.add([m] {
            IdentityReport report("catalan");
            report.check("catalan_times_m+1", tag("m", m), ExactRational(catalan(m) * (m + 1)),
                         ExactRational(binomial(2 * m, m)));
            if (m >= 1) report.merge(catalan_connection_report(m));
            for (int j = 0; j <= 2 * m; j += 2)
                check_equality(report, "column_square_central_link", tag("m", m) + " " + tag("j", j),
                               column_square_central_link(m, j));
            return report;
        });
}

inline void build_supercatalan(SuiteBuilder& s) {
    for (int n = 0; n <= s.config().max_n; ++n)
        s.add([n] {
            IdentityReport report("supercatalan");
            for (int k = 0; k <= n; ++k) {
                const std::string where = tag("n", n) + " " + tag("k", k);
                check_equality(report, "super_catalan_link", where, super_catalan_link(n, k));
                report.check("super_catalan_symmetry", where, ExactRational(super_catalan(n, k)),
                             ExactRational(super_catalan(n, n - k)));
            }
            return report;
        });
}

inline void build_zeon(SuiteBuilder& s) {
    const int zeon_limit = std::min(s.config().max_n, s.config().zeon_max_n);
    for (int n = 1; n <= zeon_limit; ++n)
        s.add([n] {
            IdentityReport report("zeon");
            const std::string where = tag("n", n);
            const ZeonMatrix u = op_U(n);
            bool spectrum = u.is_diagonal();
            for (std::uint32_t mask = 0; mask < u.size(); ++mask)
                spectrum = spectrum && u.at(mask, mask) == n - 2 * SubsetIndex(mask).layer();
            report.check("U_diagonal_layers", where, spectrum);
            const ZeonMatrix t = op_T(n);
            report.check("Tstar_is_transpose", where, op_Tstar(n) == t.transpose());
            report.check("T_nonzeros", where, ExactRational(static_cast<long>(t.nonzeros())),
                         ExactRational(n * power_of_two(n - 1)));
            std::vector<ZeonMatrix> raises, lowers;
            for (int i = 1; i <= n; ++i) {
                raises.push_back(raise(n, i));
                lowers.push_back(lower(n, i));
            }
            for (int i = 0; i < n; ++i) {
                const std::string gi = where + " " + tag("i", i + 1);
                report.check("lower_is_transpose", gi, lowers[i] == raises[i].transpose());
                report.check("raise_squared_zero", gi, (raises[i] * raises[i]).is_zero());
                report.check("lower_squared_zero", gi, (lowers[i] * lowers[i]).is_zero());
                for (int k = i + 1; k < n; ++k) {
                    const std::string gik = gi + " " + tag("k", k + 1);
                    report.check("raises_commute", gik, raises[i] * raises[k] == raises[k] * raises[i]);
                    report.check("lowers_commute", gik, lowers[i] * lowers[k] == lowers[k] * lowers[i]);
                }
            }
            return report;
        });
    for (int n = 1; n <= s.config().max_n; ++n)
        s.add([n] {
            IdentityReport report("zeon");
            const std::string where = tag("n", n);
            check_equality(report, "degree_via_krawtchouk", where, degree_via_krawtchouk(n));
            check_equality(report, "delta_via_row_squares", where, delta_via_row_squares(n));
            check_equality(report, "zeta_via_theorem", where, zeta_via_theorem(n));
            check_equality(report, "centralizer_via_column_squares", where, centralizer_via_column_squares(n));
            for (auto family : {AlgebraFamily::GenU, AlgebraFamily::GenTTstar}) {
                const Prediction p = predicted_stats(family, n);
                IdentityReport c = component_consistency(p.components, p.stats);
                report.merge(c);
            }
            return report;
        });
}

}  // namespace detail

/// Runs one named suite. Throws std::invalid_argument for unknown names.
inline IdentityReport run_suite(const std::string& name, const SuiteConfig& config) {
    if (config.max_n < 0) throw std::invalid_argument("max-N must be nonnegative");
    detail::SuiteBuilder builder(name, config);
    if (name == "pascal") detail::build_pascal(builder);
    else if (name == "recurrence") detail::build_recurrence(builder);
    else if (name == "involution") detail::build_involution(builder);
    else if (name == "symmetries") detail::build_symmetries(builder);
    else if (name == "rows-cols") detail::build_rows_cols(builder);
    else if (name == "conjugation") detail::build_conjugation(builder);
    else if (name == "sums") detail::build_sums(builder);
    else if (name == "catalan") detail::build_catalan(builder);
    else if (name == "supercatalan") detail::build_supercatalan(builder);
    else if (name == "zeon") detail::build_zeon(builder);
    else throw std::invalid_argument("unknown suite '" + name + "'");
    return builder.run();
}

/// "all" expands to every suite in a fixed order.
inline std::vector<IdentityReport> run_suites(const std::string& selection, const SuiteConfig& config) {
    std::vector<IdentityReport> out;
    if (selection == "all") {
        for (const auto& name : suite_names()) out.push_back(run_suite(name, config));
    } else {
        out.push_back(run_suite(selection, config));
    }
    return out;
}

}  // namespace krawtchouk
