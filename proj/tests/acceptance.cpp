// One PASS/FAIL line per acceptance criterion, each with its time limit.
// Exit status is nonzero if any criterion fails or runs over time.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "krawtchouk/algebra.hpp"
#include "krawtchouk/identities.hpp"
#include "krawtchouk/krawtchouk.hpp"
#include "krawtchouk/zeon.hpp"

using namespace krawtchouk;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && ok) detail = what;
        ok = ok && condition;
    }
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::vector<ExactRational> grid_r() { return {0, 1, 2, make_rational(1, 2), make_rational(3, 7), -2, 5}; }

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    RationalMatrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    return m;
}

Outcome displayed_matrices() {
    Outcome o;
    o.require(build_matrix(3, 1).entries() ==
                  from_rows({{1, 1, 1, 1}, {3, 1, -1, -3}, {3, -1, -1, 3}, {1, -1, 1, -1}}),
              "Phi^3 differs");
    o.require(build_matrix(4, 1).entries() == from_rows({{1, 1, 1, 1, 1},
                                                         {4, 2, 0, -2, -4},
                                                         {6, 0, -2, 0, 6},
                                                         {4, -2, 0, 2, -4},
                                                         {1, -1, 1, -1, 1}}),
              "Phi^4 differs");
    return o;
}

Outcome pascal() {
    Outcome o;
    for (const auto& r : grid_r())
        for (int order = 0; order <= 10; ++order)
            o.require(verify_pascal(order, r).passed(), "N=" + std::to_string(order) + " r=" + to_string(r));
    return o;
}

Outcome recurrence() {
    Outcome o;
    for (const auto& r : grid_r())
        for (int order = 1; order <= 10; ++order)
            o.require(verify_recurrence_j(order, r).passed(), "N=" + std::to_string(order) + " r=" + to_string(r));
    return o;
}

Outcome general_sum_squares() {
    Outcome o;
    for (const auto& r : grid_r())
        for (int order = 1; order <= 10; ++order) {
            const auto phi = build_matrix(order, r);
            const auto prev = build_matrix(order - 1, r);
            for (int j = 0; j <= order; ++j)
                for (int m = 0; m <= order; ++m)
                    o.require(sum_squares_general(phi, prev, j, m).holds(),
                              "N=" + std::to_string(order) + " r=" + to_string(r));
        }
    return o;
}

Outcome symmetric_sums() {
    Outcome o;
    for (int order = 1; order <= 12; ++order) {
        const auto phi = build_symmetric(order);
        const auto prev = build_symmetric(order - 1);
        for (int j = 0; j <= order; ++j)
            for (int m = 0; m <= order; ++m) {
                const Equality s = sum_squares_symmetric(phi, prev, j, m);
                const Equality g = sum_squares_general(phi, prev, j, m);
                o.require(s.holds(), "symmetric N=" + std::to_string(order));
                o.require(s.lhs == g.lhs && s.rhs == g.rhs, "symmetric vs general N=" + std::to_string(order));
                if (j >= 2) o.require(partial_sum_plain(phi, prev, j, m).holds(), "plain N=" + std::to_string(order));
            }
    }
    return o;
}

Outcome squares() {
    Outcome o;
    for (int order = 0; order <= 12; ++order) {
        const auto phi = build_symmetric(order);
        for (int k = 0; k <= order; ++k) {
            o.require(column_sum_of_squares(phi, k).holds(), "column N=" + std::to_string(order));
            o.require(row_sum_of_squares(phi, k).holds(), "row N=" + std::to_string(order));
        }
    }
    for (int order = 0; order <= 20; ++order)
        for (int j = 0; j <= order; ++j)
            o.require(is_integer(column_square_closed_form(order, j)), "integrality N=" + std::to_string(order));
    return o;
}

Outcome special_values() {
    Outcome o;
    for (int order = 0; order <= 14; ++order) {
        const auto phi = build_symmetric(order);
        for (int j = 0; j <= order; ++j)
            o.require(central_row_value(order, j) == phi(order / 2, j), "central N=" + std::to_string(order));
    }
    for (int m = 1; m <= 10; ++m) o.require(catalan_connection_report(m).passed(), "catalan m=" + std::to_string(m));
    for (int n = 0; n <= 15; ++n)
        for (int k = 0; k <= n; ++k) o.require(super_catalan_link(n, k).holds(), "super n=" + std::to_string(n));
    for (int m = 0; m <= 10; ++m)
        for (int j = 0; j <= 2 * m; j += 2)
            o.require(column_square_central_link(m, j).holds(), "link m=" + std::to_string(m));
    return o;
}

Outcome involution() {
    Outcome o;
    for (int order = 0; order <= 12; ++order) o.require(verify_involution(order), "N=" + std::to_string(order));
    return o;
}

Outcome zeon() {
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        const std::string at = "n=" + std::to_string(n);
        const ZeonMatrix u = op_U(n);
        o.require(u.is_diagonal(), "U not diagonal " + at);
        std::vector<long> seen(n + 1, 0);
        for (std::uint32_t mask = 0; mask < u.size(); ++mask) {
            const int layer = std::popcount(mask);
            o.require(u.at(mask, mask) == n - 2 * layer, "U entry " + at);
            ++seen[layer];
        }
        for (int layer = 0; layer <= n; ++layer)
            o.require(binomial(n, layer) == seen[layer], "multiplicity " + at);
        for (int i = 1; i <= n; ++i) {
            const ZeonMatrix ri = raise(n, i), li = lower(n, i);
            o.require(li == ri.transpose(), "lower != raise^T " + at);
            o.require((ri * ri).is_zero() && (li * li).is_zero(), "square not zero " + at);
            for (int j = i + 1; j <= n; ++j) {
                const ZeonMatrix rj = raise(n, j), lj = lower(n, j);
                o.require(ri * rj == rj * ri, "raise commutation " + at);
                o.require(li * lj == lj * li, "lower commutation " + at);
                o.require(li * rj == rj * li, "mixed commutation " + at);
            }
        }
    }
    return o;
}

Outcome algebra(double& slowest_small) {
    Outcome o;
    slowest_small = 0;
    for (int n = 1; n <= 5; ++n)
        for (auto family : {AlgebraFamily::GenU, AlgebraFamily::GenTTstar, AlgebraFamily::GenTTstarTstarT}) {
            const auto start = std::chrono::steady_clock::now();
            const FamilyReport r = analyze_family(family, n);
            const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (n <= 4 && took > slowest_small) slowest_small = took;
            const std::string at = to_string(family) + " n=" + std::to_string(n);
            o.require(r.match_d && r.match_delta && r.match_zeta, "d/delta/zeta " + at);
            if (family == AlgebraFamily::GenTTstarTstarT) {
                o.require(r.computed.z == r.computed.delta, "z != delta " + at);
                o.require(r.predicted.stats.z == 1 + n / 2, "stated z " + at);
                o.require(!r.match_z && r.documented_z_discrepancy() && !r.notes.empty(), "z mismatch not reported " + at);
            } else {
                o.require(r.match_z, "z " + at);
            }
        }
    return o;
}

Outcome derivations() {
    Outcome o;
    for (int n = 1; n <= 10; ++n) {
        o.require(degree_via_krawtchouk(n).holds(), "degree n=" + std::to_string(n));
        o.require(delta_via_row_squares(n).holds(), "delta n=" + std::to_string(n));
        o.require(zeta_via_theorem(n).holds(), "zeta n=" + std::to_string(n));
    }
    return o;
}

Outcome components() {
    Outcome o;
    for (int n = 1; n <= 10; ++n)
        for (auto family : {AlgebraFamily::GenU, AlgebraFamily::GenTTstar}) {
            const Prediction p = predicted_stats(family, n);
            ExactInt degree = 0, dimension = 0, centralizer = 0;
            for (const auto& c : p.components) {
                degree += c.multiplicity * c.degree;
                dimension += c.degree * c.degree;
                centralizer += c.multiplicity * c.multiplicity;
            }
            const std::string at = to_string(family) + " n=" + std::to_string(n);
            o.require(degree == power_of_two(n), "sum m d " + at);
            o.require(dimension == p.stats.delta, "sum d^2 " + at);
            o.require(centralizer == p.stats.zeta, "sum m^2 " + at);
        }
    return o;
}

}  // namespace

int main() {
    double slowest_small = 0;
    const std::vector<Criterion> criteria{
        {1, "displayed matrices", 1, displayed_matrices},
        {2, "pascal relations", 5, pascal},
        {3, "recurrence in j", 5, recurrence},
        {4, "general-r sum of squares", 30, general_sum_squares},
        {5, "partial sums and symmetric sum of squares", 30, symmetric_sums},
        {6, "column and row sums of squares", 10, squares},
        {7, "special values", 10, special_values},
        {8, "involution", 5, involution},
        {9, "zeon operators", 10, zeon},
        {10, "algebra statistics", 180, [&] { return algebra(slowest_small); }},
        {11, "derivation cross-checks", 5, derivations},
        {12, "component consistency", 1, components},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && took > c.limit_seconds) {
            o.ok = false;
            o.detail = "over time limit";
        }
        if (o.ok && c.id == 10 && slowest_small > 10) {
            o.ok = false;
            o.detail = "an n <= 4 case took over 10 s";
        }
        std::printf("%s %2d %s (%.3f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), took,
                    c.limit_seconds, o.detail.empty() ? "" : ": ", o.detail.c_str());
        failed += o.ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
