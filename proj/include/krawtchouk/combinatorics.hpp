#pragma once

#include <stdexcept>
#include <string>

#include "krawtchouk/exact.hpp"

namespace krawtchouk {

inline ExactInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative number");
    ExactInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

/// Zero outside 0 <= k <= n, matching the boundary convention of the Krawtchouk Pascal relations.
inline ExactInt binomial(long n, long k) {
    if (n < 0) throw std::invalid_argument("binomial with negative n = " + std::to_string(n));
    if (k < 0 || k > n) return 0;
    ExactInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

inline ExactInt catalan(long m) {
    if (m < 0) throw std::invalid_argument("catalan index must be nonnegative");
    ExactInt out;
    const ExactInt central = binomial(2 * m, m);
    mpz_divexact_ui(out.get_mpz_t(), central.get_mpz_t(), static_cast<unsigned long>(m + 1));
    return out;
}

/// (2n-2k)! (2k)! / ((n-k)! k! n!)
inline ExactInt super_catalan(long n, long k) {
    if (n < 0 || k < 0 || k > n)
        throw std::out_of_range("super_catalan requires 0 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
    const ExactInt num = factorial(2 * n - 2 * k) * factorial(2 * k);
    const ExactInt den = factorial(n - k) * factorial(k) * factorial(n);
    ExactInt out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

inline ExactInt power_of_two(long e) {
    ExactInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return out;
}

}  // namespace krawtchouk
