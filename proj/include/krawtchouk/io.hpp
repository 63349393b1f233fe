#pragma once

// Text and JSON renderings. All output is deterministic for identical input.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "krawtchouk/algebra.hpp"
#include "krawtchouk/exact.hpp"
#include "krawtchouk/identity_report.hpp"
#include "krawtchouk/krawtchouk.hpp"
#include "krawtchouk/zeon.hpp"

namespace krawtchouk {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// ---------------------------------------------------------------------------
// Krawtchouk matrices

inline std::string matrix_csv(const KrawtchoukMatrix& m) {
    std::ostringstream out;
    out << "# krawtchouk N=" << m.order() << " r=" << to_fraction_string(m.r().value()) << '\n';
    for (int n = 0; n <= m.order(); ++n) {
        for (int j = 0; j <= m.order(); ++j) out << (j ? "," : "") << to_string(m(n, j));
        out << '\n';
    }
    return out.str();
}

inline std::string matrix_pretty(const KrawtchoukMatrix& m) {
    std::size_t width = 1;
    for (const auto& x : m.entries().data()) width = std::max(width, to_string(x).size());
    std::ostringstream out;
    out << "Krawtchouk matrix N=" << m.order() << " r=" << to_string(m.r().value()) << '\n';
    for (int n = 0; n <= m.order(); ++n) {
        for (int j = 0; j <= m.order(); ++j) {
            const std::string cell = to_string(m(n, j));
            out << (j ? "  " : "") << std::string(width - cell.size(), ' ') << cell;
        }
        out << '\n';
    }
    return out.str();
}

inline json matrix_json(const KrawtchoukMatrix& m) {
    json rows = json::array();
    for (int n = 0; n <= m.order(); ++n) {
        json row = json::array();
        for (int j = 0; j <= m.order(); ++j) row.push_back(to_string(m(n, j)));
        rows.push_back(std::move(row));
    }
    return {{"schema", kSchemaVersion},
            {"kind", "krawtchouk_matrix"},
            {"N", m.order()},
            {"r", to_fraction_string(m.r().value())},
            {"entries", std::move(rows)}};
}

// ---------------------------------------------------------------------------
// Zeon operators

inline json exact_number(const ExactInt& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
}

/// Header "# zeon n=<n> op=<name> size=<2^n> nnz=<k>", then "row col value"
/// per nonzero in (row, col) order. Row and column are subset bitmasks.
inline std::string zeon_coordinates(const ZeonMatrix& m, const std::string& name, bool with_diagonal = false) {
    std::ostringstream out;
    out << "# zeon n=" << m.n() << " op=" << name << " size=" << m.size() << " nnz=" << m.nonzeros() << '\n';
    for (const auto& [key, v] : m.entries()) out << key.first << ' ' << key.second << ' ' << v.get_str() << '\n';
    if (with_diagonal) {
        out << "# diagonal";
        for (const auto& x : m.diagonal()) out << ' ' << x.get_str();
        out << '\n';
    }
    return out.str();
}

inline json zeon_json(const ZeonMatrix& m, const std::string& name, bool with_diagonal = false) {
    json entries = json::array();
    for (const auto& [key, v] : m.entries()) entries.push_back(json::array({key.first, key.second, exact_number(v)}));
    json out = {{"schema", kSchemaVersion}, {"kind", "zeon_operator"}, {"n", m.n()},
                {"op", name},               {"size", m.size()},       {"nnz", m.nonzeros()},
                {"entries", std::move(entries)}};
    if (with_diagonal) {
        json diag = json::array();
        for (const auto& x : m.diagonal()) diag.push_back(exact_number(x));
        out["diagonal"] = std::move(diag);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reports

inline json identity_report_json(const IdentityReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures())
        failures.push_back({{"relation", f.relation},
                            {"params", f.params},
                            {"lhs", to_string(f.lhs)},
                            {"rhs", to_string(f.rhs)}});
    return {{"suite", r.suite()},
            {"cases", r.cases()},
            {"failure_count", r.failure_count()},
            {"passed", r.passed()},
            {"failures", std::move(failures)}};
}

inline json stats_json(const AlgebraStats& s) {
    return {{"d", exact_number(s.d)}, {"delta", exact_number(s.delta)}, {"zeta", exact_number(s.zeta)},
            {"z", exact_number(s.z)}};
}

inline json family_report_json(const FamilyReport& r) {
    json components = json::array();
    for (const auto& c : r.predicted.components)
        components.push_back({{"m", exact_number(c.multiplicity)}, {"d", exact_number(c.degree)}});
    json notes = json::array();
    for (const auto& n : r.notes) notes.push_back(n);
    return {{"schema", kSchemaVersion},
            {"kind", "algebra_report"},
            {"family", to_string(r.family)},
            {"n", r.n},
            {"computed", stats_json(r.computed)},
            {"predicted", stats_json(r.predicted.stats)},
            {"match", {{"d", r.match_d}, {"delta", r.match_delta}, {"zeta", r.match_zeta}, {"z", r.match_z}}},
            {"component_count", r.component_count},
            {"z_discrepancy_documented", r.documented_z_discrepancy()},
            {"closure_trace", r.closure_trace},
            {"components", std::move(components)},
            {"notes", std::move(notes)},
            {"check_passed", r.passes_check()}};
}

}  // namespace krawtchouk
