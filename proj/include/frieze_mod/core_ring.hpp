#pragma once

/**
 * @file core_ring.hpp
 * @brief Residues modulo N, trial-division factorization, projection onto
 * divisor moduli and Chinese-remainder recombination.
 */

#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frieze_mod {

/// A modulus n >= 2.
class Modulus {
public:
    constexpr explicit Modulus(std::int64_t n) : n_(n) {
        if (n < 2) throw std::domain_error("modulus must be >= 2, got " + std::to_string(n));
    }

    [[nodiscard]] constexpr std::int64_t value() const noexcept { return n_; }

    /// Canonical representative of x in [0, n).
    [[nodiscard]] constexpr std::int64_t reduce(std::int64_t x) const noexcept {
        x %= n_;
        return x < 0 ? x + n_ : x;
    }

    [[nodiscard]] constexpr std::int64_t mul(std::int64_t a, std::int64_t b) const noexcept {
        return static_cast<std::int64_t>(static_cast<__int128>(a) * b % n_);
    }

    friend constexpr bool operator==(Modulus, Modulus) = default;

private:
    std::int64_t n_;
};

/// An element of Z/NZ, stored as its canonical representative.
class Residue {
public:
    constexpr Residue(std::int64_t value, Modulus modulus)
        : value_(modulus.reduce(value)), modulus_(modulus) {}

    [[nodiscard]] constexpr std::int64_t value() const noexcept { return value_; }
    [[nodiscard]] constexpr Modulus modulus() const noexcept { return modulus_; }

    constexpr Residue operator+(Residue rhs) const { return {value_ + same(rhs).value_, modulus_}; }
    constexpr Residue operator-(Residue rhs) const { return {value_ - same(rhs).value_, modulus_}; }
    constexpr Residue operator*(Residue rhs) const {
        return {modulus_.mul(value_, same(rhs).value_), modulus_};
    }
    constexpr Residue operator-() const { return {-value_, modulus_}; }

    friend constexpr bool operator==(Residue, Residue) = default;

private:
    constexpr const Residue& same(const Residue& rhs) const {
        if (rhs.modulus_ != modulus_) throw std::domain_error("residue modulus mismatch");
        return rhs;
    }

    std::int64_t value_;
    Modulus modulus_;
};

struct PrimePower {
    std::int64_t prime;
    int exponent;

    [[nodiscard]] constexpr std::int64_t value() const noexcept {
        std::int64_t v = 1;
        for (int i = 0; i < exponent; ++i) v *= prime;
        return v;
    }

    friend constexpr bool operator==(PrimePower, PrimePower) = default;
};

/// Prime factorization with strictly increasing primes.
using Factorization = std::vector<PrimePower>;

[[nodiscard]] constexpr bool is_prime(std::int64_t n) noexcept {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Trial division up to sqrt(n).
[[nodiscard]] inline Factorization factorize(std::int64_t n) {
    if (n < 2) throw std::domain_error("factorize requires n >= 2");
    Factorization out;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.push_back({p, e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

/// True when n = p^e for a single prime p (e >= 1).
[[nodiscard]] inline bool is_prime_power(std::int64_t n) {
    return n >= 2 && factorize(n).size() == 1;
}

[[nodiscard]] inline std::int64_t power(std::int64_t base, int exp) noexcept {
    std::int64_t v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

/// Reduction of r modulo a divisor d of its modulus.
[[nodiscard]] inline Residue project(Residue r, std::int64_t d) {
    if (d < 2 || r.modulus().value() % d != 0)
        throw std::domain_error(std::to_string(d) + " is not a divisor >= 2 of " +
                                std::to_string(r.modulus().value()));
    return {r.value(), Modulus{d}};
}

/// Recombines one residue per prime-power factor of `target` (in any order).
/// The residues are found by stepping through the candidates congruent to the
/// running solution, so no modular inverses are needed.
[[nodiscard]] inline Residue crt_combine(std::span<const Residue> parts, Modulus target) {
    Factorization f = factorize(target.value());
    if (parts.size() != f.size())
        throw std::domain_error("crt_combine: expected one part per prime-power factor");
    std::vector<bool> used(parts.size(), false);
    for (const PrimePower& pp : f) {
        bool found = false;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (!used[i] && parts[i].modulus().value() == pp.value()) {
                used[i] = found = true;
                break;
            }
        }
        if (!found)
            throw std::domain_error("crt_combine: no part modulo " + std::to_string(pp.value()));
    }

    std::int64_t x = 0;
    std::int64_t step = 1;
    for (const Residue& part : parts) {
        const std::int64_t m = part.modulus().value();
        while (x % m != part.value()) x += step;
        step *= m;
    }
    return {x, target};
}

}  // namespace frieze_mod
