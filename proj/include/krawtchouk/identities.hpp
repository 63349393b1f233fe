#pragma once

// Summation theorems and special values of Krawtchouk matrices. Every function
// returns both sides of an identity as exact rationals; callers decide what to
// do with a mismatch.

#include <stdexcept>
#include <string>

#include "krawtchouk/combinatorics.hpp"
#include "krawtchouk/identity_report.hpp"
#include "krawtchouk/krawtchouk.hpp"

namespace krawtchouk {

struct Equality {
    ExactRational lhs;
    ExactRational rhs;
    bool holds() const { return lhs == rhs; }
};

struct TripleEquality {
    ExactRational lhs;
    ExactRational rhs1;
    ExactRational rhs2;
    bool holds() const { return lhs == rhs1 && rhs1 == rhs2; }
};

struct IntegerEquality {
    ExactInt brute;
    ExactRational closed;
    bool holds() const { return ExactRational(brute) == closed; }
};

namespace detail {

inline void require_range(bool ok, const std::string& what) {
    if (!ok) throw std::out_of_range(what);
}

inline void require_square_sum_args(int order, int j, int m) {
    require_range(order >= 1, "sum of squares needs N >= 1");
    require_range(0 <= j && j <= order, "column j outside [0, N]");
    require_range(0 <= m && m <= order, "summation limit m outside [0, N]");
}

inline void require_pair(const KrawtchoukMatrix& phi, const KrawtchoukMatrix& prev) {
    if (prev.order() + 1 != phi.order() || !(prev.r() == phi.r()))
        throw std::invalid_argument("expected matrices of order N and N-1 with equal r");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Weighted sums along a column

/// sum_{n<=m} (N-2n) phi_{nj}^2
///   = (N-j) (phi^{N-1}_{mj})^2 + r j (phi^{N-1}_{m,j-1})^2
///     + (1-r)/(1+r) j sum_{n<=m} (r phi_{n,j-1}^2 + phi_{nj}^2)
/// Rows of phi^{N-1} beyond its order read as zero coefficients.
inline Equality sum_squares_general(const KrawtchoukMatrix& phi, const KrawtchoukMatrix& prev, int j, int m) {
    detail::require_pair(phi, prev);
    const int order = phi.order();
    detail::require_square_sum_args(order, j, m);
    const ExactRational& r = phi.r().value();
    if (r == -1) throw UndefinedParameterError("sum of squares identity undefined at r = -1");

    Equality out{0, 0};
    for (int n = 0; n <= m; ++n) out.lhs += ExactRational(order - 2 * n) * phi(n, j) * phi(n, j);

    if (order - j != 0) {
        const ExactRational a = prev.coefficient(m, j);
        out.rhs += ExactRational(order - j) * a * a;
    }
    if (j != 0) {
        const ExactRational b = prev.coefficient(m, j - 1);
        out.rhs += r * j * b * b;
        ExactRational tail = 0;
        for (int n = 0; n <= m; ++n) tail += r * phi(n, j - 1) * phi(n, j - 1) + phi(n, j) * phi(n, j);
        out.rhs += (1 - r) / (1 + r) * j * tail;
    }
    return out;
}

inline Equality sum_squares_general(int order, const ExactRational& r, int j, int m) {
    detail::require_square_sum_args(order, j, m);
    if (r == -1) throw UndefinedParameterError("sum of squares identity undefined at r = -1");
    return sum_squares_general(build_matrix(order, r), build_matrix(order - 1, r), j, m);
}

/// Symmetric case: sum_{n<=m} (N-2n) Phi_{nj}^2 = (N-j) (Phi^{N-1}_{mj})^2 + j (Phi^{N-1}_{m,j-1})^2
inline Equality sum_squares_symmetric(const KrawtchoukMatrix& phi, const KrawtchoukMatrix& prev, int j, int m) {
    detail::require_pair(phi, prev);
    const int order = phi.order();
    detail::require_square_sum_args(order, j, m);
    if (phi.r().value() != 1) throw std::invalid_argument("symmetric identity needs r = 1");

    Equality out{0, 0};
    for (int n = 0; n <= m; ++n) out.lhs += ExactRational(order - 2 * n) * phi(n, j) * phi(n, j);
    if (order - j != 0) {
        const ExactRational a = prev.coefficient(m, j);
        out.rhs += ExactRational(order - j) * a * a;
    }
    if (j != 0) {
        const ExactRational b = prev.coefficient(m, j - 1);
        out.rhs += ExactRational(j) * b * b;
    }
    return out;
}

inline Equality sum_squares_symmetric(int order, int j, int m) {
    detail::require_square_sum_args(order, j, m);
    return sum_squares_symmetric(build_symmetric(order), build_symmetric(order - 1), j, m);
}

/// sum_{n<=m} (N-2n) Phi_{nj} = (N-j) Phi^{N-1}_{mj} + j Phi^{N-1}_{m,j-2}
///                            = (N-1-2m) Phi^{N-1}_{m,j-1} + Phi^{N-1}_{m,j-2},   j >= 2
inline TripleEquality partial_sum_plain(const KrawtchoukMatrix& phi, const KrawtchoukMatrix& prev, int j, int m) {
    detail::require_pair(phi, prev);
    const int order = phi.order();
    if (j < 2) throw std::out_of_range("plain partial sums need j >= 2");
    detail::require_square_sum_args(order, j, m);

    TripleEquality out{0, 0, 0};
    for (int n = 0; n <= m; ++n) out.lhs += ExactRational(order - 2 * n) * phi(n, j);
    if (order - j != 0) out.rhs1 += ExactRational(order - j) * prev.coefficient(m, j);
    out.rhs1 += ExactRational(j) * prev.coefficient(m, j - 2);
    out.rhs2 = ExactRational(order - 1 - 2 * m) * prev.coefficient(m, j - 1) + prev.coefficient(m, j - 2);
    return out;
}

inline TripleEquality partial_sum_plain(int order, int j, int m) {
    if (j < 2) throw std::out_of_range("plain partial sums need j >= 2");
    detail::require_square_sum_args(order, j, m);
    return partial_sum_plain(build_symmetric(order), build_symmetric(order - 1), j, m);
}

/// Phi^{N-1}_{mj} = sum_{n<=m} Phi^N_{n,j+1}
inline Equality column_sum_relation(const KrawtchoukMatrix& phi, const KrawtchoukMatrix& prev, int j, int m) {
    detail::require_pair(phi, prev);
    const int order = phi.order();
    detail::require_range(order >= 1 && 0 <= j && j <= order - 1 && 0 <= m && m <= order - 1,
                          "column sum relation needs 0 <= j, m <= N-1");
    Equality out{prev(m, j), 0};
    for (int n = 0; n <= m; ++n) out.rhs += phi(n, j + 1);
    return out;
}

inline Equality column_sum_relation(int order, int j, int m) {
    detail::require_range(order >= 1 && 0 <= j && j <= order - 1 && 0 <= m && m <= order - 1,
                          "column sum relation needs 0 <= j, m <= N-1");
    return column_sum_relation(build_symmetric(order), build_symmetric(order - 1), j, m);
}

// ---------------------------------------------------------------------------
// Complete sums of squares

namespace detail {

inline ExactInt integral(const ExactRational& q) {
    if (!is_integer(q)) throw std::logic_error("expected integral entry, got " + to_string(q));
    return q.get_num();
}

}  // namespace detail

inline IntegerEquality column_sum_of_squares(const KrawtchoukMatrix& phi, int j) {
    const int order = phi.order();
    detail::require_range(0 <= j && j <= order, "column j outside [0, N]");
    IntegerEquality out{0, 0};
    for (int i = 0; i <= order; ++i) {
        const ExactInt x = detail::integral(phi(i, j));
        out.brute += x * x;
    }
    out.closed = ExactRational(binomial(2 * order - 2 * j, order - j) * binomial(2 * j, j)) /
                 ExactRational(binomial(order, j));
    return out;
}

inline IntegerEquality column_sum_of_squares(int order, int j) {
    detail::require_range(0 <= j && j <= order, "column j outside [0, N]");
    return column_sum_of_squares(build_symmetric(order), j);
}

/// Closed form only: binomial(2N-2j, N-j) binomial(2j, j) / binomial(N, j).
inline ExactRational column_square_closed_form(int order, int j) {
    detail::require_range(0 <= j && j <= order, "column j outside [0, N]");
    return ExactRational(binomial(2 * order - 2 * j, order - j) * binomial(2 * j, j)) /
           ExactRational(binomial(order, j));
}

inline IntegerEquality row_sum_of_squares(const KrawtchoukMatrix& phi, int i) {
    const int order = phi.order();
    detail::require_range(0 <= i && i <= order, "row i outside [0, N]");
    IntegerEquality out{0, 0};
    for (int j = 0; j <= order; ++j) {
        const ExactInt x = detail::integral(phi(i, j));
        out.brute += x * x;
    }
    ExactInt closed = 0;
    for (int k = 0; k <= i && 2 * k <= order; ++k)
        closed += binomial(order + 1, 2 * k + 1) * binomial(2 * k, k) * binomial(order - 2 * k, i - k);
    out.closed = ExactRational(closed);
    return out;
}

inline IntegerEquality row_sum_of_squares(int order, int i) {
    detail::require_range(0 <= i && i <= order, "row i outside [0, N]");
    return row_sum_of_squares(build_symmetric(order), i);
}

// ---------------------------------------------------------------------------
// Special values

/// Closed form of the middle-row entry Phi^N_{mj}, m = floor(N/2).
inline ExactRational central_row_value(int order, int j) {
    detail::require_range(order >= 0 && 0 <= j && j <= order, "central_row_value needs 0 <= j <= N");
    const int m = order / 2;
    if (order % 2 == 0 && j % 2 != 0) return 0;
    const int half = j / 2;
    return ExactRational(sign_power(half) * binomial(m, half) * binomial(order, m)) /
           ExactRational(binomial(order, j));
}

/// Sum of squares of column j/2 of Phi^m against (-1)^{j/2} Phi^{2m}_{mj}.
inline Equality column_square_central_link(int m, int j) {
    if (j % 2 != 0) throw std::invalid_argument("column_square_central_link needs even j");
    detail::require_range(m >= 0 && 0 <= j / 2 && j / 2 <= m && j >= 0,
                          "column_square_central_link needs 0 <= j/2 <= m");
    const KrawtchoukMatrix small = build_symmetric(m);
    const KrawtchoukMatrix big = build_symmetric(2 * m);
    Equality out{0, ExactRational(sign_power(j / 2)) * big(m, j)};
    for (int i = 0; i <= m; ++i) out.lhs += small(i, j / 2) * small(i, j / 2);
    return out;
}

inline Equality super_catalan_link(int n, int k) {
    detail::require_range(0 <= k && k <= n, "super_catalan_link needs 0 <= k <= n");
    return {ExactRational(binomial(n, k) * binomial(2 * n, n)) / ExactRational(binomial(2 * n, 2 * k)),
            ExactRational(super_catalan(n, k))};
}

/// Catalan evaluations in the middle rows of Phi^{2m} and Phi^{2m+1}, each with
/// its right-to-left mirror Phi_{i,N-j} = (-1)^i Phi_{ij}.
inline IdentityReport catalan_connection_report(int m) {
    if (m < 1) throw std::out_of_range("catalan_connection_report needs m >= 1");
    const KrawtchoukMatrix even = build_symmetric(2 * m);
    const KrawtchoukMatrix odd = build_symmetric(2 * m + 1);
    const ExactRational cm(catalan(m));
    const ExactRational cm1(catalan(m - 1));

    struct Evaluation {
        const char* name;
        const KrawtchoukMatrix* phi;
        int row;
        int col;
        ExactRational value;
    };
    const Evaluation evaluations[] = {
        {"even_m-1_1", &even, m - 1, 1, cm},      {"even_m+1_1", &even, m + 1, 1, -cm},
        {"even_m_2", &even, m, 2, -2 * cm1},      {"odd_m_1", &odd, m, 1, cm},
        {"odd_m_2", &odd, m, 2, -cm},             {"odd_m+1_1", &odd, m + 1, 1, -cm},
        {"odd_m+1_2", &odd, m + 1, 2, -cm},
    };

    IdentityReport report("catalan");
    for (const auto& e : evaluations) {
        const int order = e.phi->order();
        const std::string where = "m=" + std::to_string(m) + " N=" + std::to_string(order) +
                                  " i=" + std::to_string(e.row) + " j=" + std::to_string(e.col);
        report.check(e.name, where, e.phi->entry(e.row, e.col), e.value);
        report.check(std::string(e.name) + "_mirror", where, e.phi->entry(e.row, order - e.col),
                     ExactRational(sign_power(e.row)) * e.value);
    }
    return report;
}

}  // namespace krawtchouk
