#pragma once

// Krawtchouk matrices: column j of the order-N matrix holds the coefficients of
// (1+z)^(N-j) (1-rz)^j, rows indexed by degree n.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "krawtchouk/combinatorics.hpp"
#include "krawtchouk/exact.hpp"
#include "krawtchouk/identity_report.hpp"
#include "krawtchouk/matrix.hpp"

namespace krawtchouk {

/// Thrown where a formula needs 1 + r != 0.
class UndefinedParameterError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// r = (1-p)/p. Any rational is accepted; p and q exist only for r != -1.
class RParameter {
public:
    RParameter() : r_(1) {}
    explicit RParameter(ExactRational r) : r_(std::move(r)) { r_.canonicalize(); }

    const ExactRational& value() const { return r_; }
    bool has_probability() const { return r_ != -1; }

    /// p = 1/(1+r)
    ExactRational p() const {
        if (!has_probability()) throw UndefinedParameterError("p is undefined for r = -1");
        return ExactRational(1) / (ExactRational(1) + r_);
    }
    ExactRational q() const { return ExactRational(1) - p(); }

    friend bool operator==(const RParameter& a, const RParameter& b) { return a.r_ == b.r_; }

private:
    ExactRational r_;
};

class KrawtchoukMatrix {
public:
    KrawtchoukMatrix(int order, RParameter r, RationalMatrix entries)
        : order_(order), r_(std::move(r)), entries_(std::move(entries)) {
        const auto size = static_cast<std::size_t>(order_ + 1);
        if (order_ < 0 || entries_.rows() != size || entries_.cols() != size)
            throw std::invalid_argument("Krawtchouk matrix must be (N+1)x(N+1)");
    }

    int order() const { return order_; }
    const RParameter& r() const { return r_; }
    const RationalMatrix& entries() const { return entries_; }

    /// Checked access. Degree index -1 is the boundary row of zeros.
    ExactRational entry(int n, int j) const {
        if (j < 0 || j > order_)
            throw std::out_of_range("column index " + std::to_string(j) + " outside [0, " +
                                    std::to_string(order_) + "]");
        if (n == -1) return 0;
        if (n < -1 || n > order_)
            throw std::out_of_range("row index " + std::to_string(n) + " outside [-1, " +
                                    std::to_string(order_) + "]");
        return entries_(static_cast<std::size_t>(n), static_cast<std::size_t>(j));
    }

    /// Coefficient of z^n in the column-j generating polynomial: zero for every n
    /// outside [0, N]. Column index is still checked.
    ExactRational coefficient(int n, int j) const {
        if (j < 0 || j > order_)
            throw std::out_of_range("column index " + std::to_string(j) + " outside [0, " +
                                    std::to_string(order_) + "]");
        if (n < 0 || n > order_) return 0;
        return entries_(static_cast<std::size_t>(n), static_cast<std::size_t>(j));
    }

    const ExactRational& operator()(int n, int j) const {
        return entries_(static_cast<std::size_t>(n), static_cast<std::size_t>(j));
    }

    bool is_integral() const {
        for (const auto& x : entries_.data())
            if (!is_integer(x)) return false;
        return true;
    }

    /// Copy with one entry shifted by delta; used to exercise failure reporting.
    KrawtchoukMatrix perturbed(int n, int j, const ExactRational& delta) const {
        RationalMatrix e = entries_;
        e(static_cast<std::size_t>(n), static_cast<std::size_t>(j)) += delta;
        return KrawtchoukMatrix(order_, r_, std::move(e));
    }

    friend bool operator==(const KrawtchoukMatrix& a, const KrawtchoukMatrix& b) {
        return a.order_ == b.order_ && a.r_ == b.r_ && a.entries_ == b.entries_;
    }

private:
    int order_;
    RParameter r_;
    RationalMatrix entries_;
};

/// Diagonal B with B_ii = binomial(N, i).
class BinomialDiagonal {
public:
    explicit BinomialDiagonal(int order) : order_(order) {
        if (order < 0) throw std::invalid_argument("order must be nonnegative");
    }
    int order() const { return order_; }
    ExactInt operator[](int i) const { return binomial(order_, i); }

    RationalMatrix matrix() const {
        RationalMatrix b(static_cast<std::size_t>(order_ + 1), static_cast<std::size_t>(order_ + 1));
        for (int i = 0; i <= order_; ++i) b(i, i) = ExactRational((*this)[i]);
        return b;
    }

private:
    int order_;
};

namespace detail {

// Multiply a coefficient vector in place by (1 + c z).
inline void multiply_linear(std::vector<ExactRational>& poly, const ExactRational& c) {
    poly.push_back(0);
    for (std::size_t k = poly.size() - 1; k > 0; --k) poly[k] += c * poly[k - 1];
}

inline std::string params(int order, const RParameter& r) {
    return "N=" + std::to_string(order) + " r=" + to_string(r.value());
}

inline void require_order(int order, int min_order = 0) {
    if (order < min_order)
        throw std::invalid_argument("order N=" + std::to_string(order) + " below minimum " +
                                    std::to_string(min_order));
}

}  // namespace detail

/// Expand the generating function column by column.
inline KrawtchoukMatrix build_matrix(int order, const ExactRational& r) {
    detail::require_order(order);
    const auto size = static_cast<std::size_t>(order + 1);
    RationalMatrix entries(size, size);
    const ExactRational minus_r = -r;
    for (int j = 0; j <= order; ++j) {
        std::vector<ExactRational> poly{1};
        poly.reserve(size);
        for (int k = 0; k < order - j; ++k) detail::multiply_linear(poly, 1);
        for (int k = 0; k < j; ++k) detail::multiply_linear(poly, minus_r);
        for (std::size_t n = 0; n < size; ++n) entries(n, static_cast<std::size_t>(j)) = poly[n];
    }
    return KrawtchoukMatrix(order, RParameter(r), std::move(entries));
}

/// The symmetric case r = 1.
inline KrawtchoukMatrix build_symmetric(int order) { return build_matrix(order, 1); }

// ---------------------------------------------------------------------------
// Structural identities

/// Checks  phi^N_{n,j} + phi^N_{n-1,j} = phi^{N+1}_{n,j}
/// and     phi^N_{n,j} - r phi^N_{n-1,j} = phi^{N+1}_{n,j+1}  for 0 <= n, j <= N.
inline IdentityReport verify_pascal(const KrawtchoukMatrix& phi, const KrawtchoukMatrix& next) {
    const int order = phi.order();
    if (next.order() != order + 1 || !(next.r() == phi.r()))
        throw std::invalid_argument("verify_pascal needs matrices of order N and N+1 with equal r");
    const ExactRational& r = phi.r().value();
    IdentityReport report("pascal");
    for (int n = 0; n <= order; ++n)
        for (int j = 0; j <= order; ++j) {
            const std::string where = detail::params(order, phi.r()) + " n=" + std::to_string(n) +
                                      " j=" + std::to_string(j);
            const ExactRational here = phi.entry(n, j);
            const ExactRational above = phi.entry(n - 1, j);
            report.check("pascal(i)", where, here + above, next.entry(n, j));
            report.check("pascal(ii)", where, here - r * above, next.entry(n, j + 1));
        }
    return report;
}

inline IdentityReport verify_pascal(int order, const ExactRational& r) {
    return verify_pascal(build_matrix(order, r), build_matrix(order + 1, r));
}

/// (N + (r-1)j - n(1+r)) phi_{n,j} = (N-j) phi_{n,j+1} + r j phi_{n,j-1}
/// Terms whose coefficient vanishes (j = N, j = 0) are dropped before indexing.
inline IdentityReport verify_recurrence_j(const KrawtchoukMatrix& phi) {
    const int order = phi.order();
    detail::require_order(order, 1);
    const ExactRational& r = phi.r().value();
    IdentityReport report("recurrence");
    for (int n = 0; n <= order; ++n)
        for (int j = 0; j <= order; ++j) {
            const ExactRational lhs = (ExactRational(order) + (r - 1) * j - n * (1 + r)) * phi(n, j);
            ExactRational rhs = 0;
            if (order - j != 0) rhs += ExactRational(order - j) * phi(n, j + 1);
            if (j != 0) rhs += r * j * phi(n, j - 1);
            report.check("recurrence_j",
                         detail::params(order, phi.r()) + " n=" + std::to_string(n) + " j=" + std::to_string(j),
                         lhs, rhs);
        }
    return report;
}

inline IdentityReport verify_recurrence_j(int order, const ExactRational& r) {
    detail::require_order(order, 1);
    return verify_recurrence_j(build_matrix(order, r));
}

/// Phi^N Phi^N == 2^N I
inline bool verify_involution(const KrawtchoukMatrix& phi) {
    const auto size = static_cast<std::size_t>(phi.order() + 1);
    RationalMatrix expected = RationalMatrix::identity(size);
    expected *= ExactRational(power_of_two(phi.order()));
    return phi.entries() * phi.entries() == expected;
}

inline bool verify_involution(int order) { return verify_involution(build_symmetric(order)); }

inline IdentityReport verify_sign_symmetries(const KrawtchoukMatrix& phi) {
    const int order = phi.order();
    IdentityReport report("symmetries");
    for (int i = 0; i <= order; ++i) {
        for (int j = 0; j <= order; ++j) {
            const std::string where = "N=" + std::to_string(order) + " i=" + std::to_string(i) +
                                      " j=" + std::to_string(j);
            report.check("row_sign", where, phi(i, order - j), sign_power(i) * phi(i, j));
            report.check("column_sign", where, phi(order - i, j), sign_power(j) * phi(i, j));
        }
        report.check("diagonal_sign", "N=" + std::to_string(order) + " i=" + std::to_string(i),
                     phi(order - i, order - i), sign_power(order) * phi(i, i));
    }
    return report;
}

inline IdentityReport verify_sign_symmetries(int order) {
    return verify_sign_symmetries(build_symmetric(order));
}

/// Row 1 is N - 2j, column 0 is binomial(N, n), column 1 of order N+1 is
/// binomial(N,n) - binomial(N,n-1) = binomial(N,n)(N+1-2n)/(N+1-n).
inline IdentityReport closed_form_row1_col01(const KrawtchoukMatrix& phi, const KrawtchoukMatrix& next) {
    const int order = phi.order();
    if (next.order() != order + 1) throw std::invalid_argument("need matrices of order N and N+1");
    IdentityReport report("rows-cols");
    const std::string tag = "N=" + std::to_string(order);
    if (order >= 1)
        for (int j = 0; j <= order; ++j)
            report.check("row1", tag + " j=" + std::to_string(j), phi(1, j), ExactRational(order - 2 * j));
    for (int n = 0; n <= order; ++n) {
        const std::string where = tag + " n=" + std::to_string(n);
        report.check("column0", where, phi(n, 0), ExactRational(binomial(order, n)));
        const ExactRational difference(binomial(order, n) - binomial(order, n - 1));
        report.check("column1_difference", where, next(n, 1), difference);
        if (order + 1 - n != 0) {
            const ExactRational quotient =
                ExactRational(binomial(order, n)) * ExactRational(order + 1 - 2 * n) / ExactRational(order + 1 - n);
            report.check("column1_quotient", where, next(n, 1), quotient);
        }
    }
    return report;
}

inline IdentityReport closed_form_row1_col01(int order) {
    return closed_form_row1_col01(build_symmetric(order), build_symmetric(order + 1));
}

/// Phi B symmetric, and Phi_{ji} = binomial(N,j)/binomial(N,i) Phi_{ij}.
inline IdentityReport verify_binomial_conjugation(const KrawtchoukMatrix& phi) {
    const int order = phi.order();
    IdentityReport report("conjugation");
    const BinomialDiagonal b(order);
    const RationalMatrix phi_b = phi.entries() * b.matrix();
    const RationalMatrix phi_b_t = phi_b.transpose();
    for (int i = 0; i <= order; ++i)
        for (int j = 0; j <= order; ++j) {
            const std::string where = "N=" + std::to_string(order) + " i=" + std::to_string(i) +
                                      " j=" + std::to_string(j);
            report.check("phiB_symmetric", where, phi_b(i, j), phi_b_t(i, j));
            report.check("conjugation", where, phi(j, i),
                         ExactRational(b[j]) / ExactRational(b[i]) * phi(i, j));
        }
    return report;
}

inline IdentityReport verify_binomial_conjugation(int order) {
    return verify_binomial_conjugation(build_symmetric(order));
}

}  // namespace krawtchouk
