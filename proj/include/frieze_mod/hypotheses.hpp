#pragma once

/**
 * @file hypotheses.hpp
 * @brief Integer-shape predicates on N used to select which statements apply.
 * A misclassified N silently changes what every report checks, so each one
 * is kept small and tested on its own.
 */

#include "frieze_mod/core_ring.hpp"

#include <cstdint>
#include <numeric>
#include <optional>

namespace frieze_mod::hyp {

/// N = 2u with u odd.
[[nodiscard]] constexpr bool is_twice_odd(std::int64_t n) noexcept {
    return n % 2 == 0 && (n / 2) % 2 == 1;
}

/// N = 3m with gcd(m, 6) = 1, i.e. m odd and not divisible by 3.
[[nodiscard]] constexpr bool is_three_times_coprime_to_six(std::int64_t n) noexcept {
    return n % 3 == 0 && std::gcd(n / 3, std::int64_t{6}) == 1;
}

/// Irreducible minimal monomial solutions are bounded by N for these N.
[[nodiscard]] constexpr bool size_bound_applies(std::int64_t n) noexcept {
    return n != 2 && !is_three_times_coprime_to_six(n);
}

struct TwoThreeForm {
    int a;          // exponent of 3, >= 1
    std::int64_t b; // odd, > 1, not divisible by 3
};

/// N = 2 * 3^a * b with a >= 1 and b > 1 odd, not divisible by 3.
[[nodiscard]] constexpr std::optional<TwoThreeForm> two_three_form(std::int64_t n) noexcept {
    if (!is_twice_odd(n)) return std::nullopt;
    std::int64_t b = n / 2;
    int a = 0;
    while (b % 3 == 0) {
        b /= 3;
        ++a;
    }
    if (a >= 1 && b > 1) return TwoThreeForm{a, b};
    return std::nullopt;
}

/// Exponent e when n = 2^e (e >= 0), otherwise absent.
[[nodiscard]] constexpr std::optional<int> two_exponent_if_power(std::int64_t n) noexcept {
    if (n < 1) return std::nullopt;
    int e = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++e;
    }
    return n == 1 ? std::optional<int>{e} : std::nullopt;
}

/// 2-adic valuation of n > 0.
[[nodiscard]] constexpr int two_adic(std::int64_t n) noexcept {
    int e = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++e;
    }
    return e;
}

/// Odd prime p with n = p^e (e >= 1), otherwise absent.
[[nodiscard]] inline std::optional<PrimePower> odd_prime_power(std::int64_t n) {
    if (n < 3) return std::nullopt;
    const Factorization f = factorize(n);
    if (f.size() != 1 || f.front().prime == 2) return std::nullopt;
    return f.front();
}

}  // namespace frieze_mod::hyp
