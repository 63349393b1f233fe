#pragma once

// Exact integer and rational scalars backed by GMP.

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace krawtchouk {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

/// Build num/den in lowest terms with a positive denominator.
inline ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const ExactRational& q) { return q.get_den() == 1; }

namespace detail {

inline bool parse_integer(std::string_view text, ExactInt& out) {
    if (text.empty()) return false;
    std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return out.set_str(digits, 10) == 0;
}

}  // namespace detail

/// Parse "num/den" (optional sign on num) or a bare integer literal.
inline ExactRational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    ExactInt num, den = 1;
    const bool ok = slash == std::string_view::npos
                        ? detail::parse_integer(text, num)
                        : detail::parse_integer(text.substr(0, slash), num) &&
                              detail::parse_integer(text.substr(slash + 1), den) &&
                              text[slash + 1] != '-' && text[slash + 1] != '+';
    if (!ok) throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
    if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    return make_rational(num, den);
}

/// Integers render without a denominator, everything else as num/den.
inline std::string to_string(const ExactRational& q) {
    return is_integer(q) ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const ExactInt& z) { return z.get_str(); }

/// Always num/den, also for integers ("1/1").
inline std::string to_fraction_string(const ExactRational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline int sign_power(long k) { return (k % 2 == 0) ? 1 : -1; }

}  // namespace krawtchouk
