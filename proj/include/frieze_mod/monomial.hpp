#pragma once

/**
 * @file monomial.hpp
 * @brief Minimal monomial solutions (k, k, ..., k) of M_n = +-Id over Z/NZ.
 *
 * The minimal size is found directly by repeated multiplication, and
 * independently from the prime-power components of N: with l_i the minimal
 * size modulo p_i^a_i and m = lcm(l_i), the global size is m or 2m, and it is
 * m exactly when the component signs raised to m / l_i agree (the modulus-2
 * component agrees with either sign since Id = -Id there).
 */

#include "frieze_mod/core_ring.hpp"
#include "frieze_mod/modmat.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frieze_mod {

/// A proven statement failed on a concrete input. Never expected; signals a bug.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct MonomialSize {
    std::int64_t size;
    SolutionSign sign;

    friend bool operator==(const MonomialSize&, const MonomialSize&) = default;
};

/// Least n >= 1 with M_n(k, ..., k) = +-Id, and its sign.
[[nodiscard]] inline MonomialSize minimal_monomial_size(Residue k) {
    const Modulus m = k.modulus();
    const std::int64_t cap = 3 * m.value() + 1;
    Mat2 acc = Mat2::identity(m);
    for (std::int64_t n = 1; n <= cap; ++n) {
        acc = push_front_m1(k.value(), acc);
        if (auto s = central_sign(acc)) return {n, *s};
    }
    throw std::logic_error("minimal monomial size exceeded 3N+1 for N=" + std::to_string(m.value()) +
                           ", k=" + std::to_string(k.value()));
}

struct Component {
    std::int64_t prime_power;
    std::int64_t size;
    SolutionSign sign;

    friend bool operator==(const Component&, const Component&) = default;
};

/// One entry per prime-power factor of N, in increasing prime order.
[[nodiscard]] inline std::vector<Component> component_profile(Residue k) {
    std::vector<Component> out;
    for (const PrimePower& pp : factorize(k.modulus().value())) {
        const std::int64_t q = pp.value();
        const MonomialSize ms = minimal_monomial_size(project(k, q));
        out.push_back({q, ms.size, ms.sign});
    }
    return out;
}

struct MonomialProfile {
    Modulus n_modulus;
    Residue k;
    std::int64_t size;
    SolutionSign sign;
    std::vector<Component> components;
};

[[nodiscard]] inline MonomialProfile monomial_profile(Residue k) {
    const MonomialSize ms = minimal_monomial_size(k);
    return {k.modulus(), k, ms.size, ms.sign, component_profile(k)};
}

struct SizeLaw {
    std::int64_t lcm_value;
    int multiplier;  // 1 or 2
    SolutionSign sign;

    [[nodiscard]] std::int64_t size() const noexcept { return multiplier * lcm_value; }
};

/// Predicts the minimal size from the components alone.
[[nodiscard]] inline SizeLaw size_via_crt(std::span<const Component> components) {
    std::int64_t m = 1;
    for (const Component& c : components) m = std::lcm(m, c.size);

    std::optional<int> common;  // sign shared by every component at exponent m / l_i
    bool compatible = true;
    for (const Component& c : components) {
        if (c.prime_power == 2) continue;
        const int s = ((m / c.size) % 2 == 0) ? 1 : to_int(c.sign);
        if (!common) {
            common = s;
        } else if (*common != s) {
            compatible = false;
        }
    }
    if (compatible)
        return {m, 1, common.value_or(1) == 1 ? SolutionSign::plus : SolutionSign::minus};
    return {m, 2, SolutionSign::plus};
}

[[nodiscard]] inline SizeLaw size_via_crt(Residue k) {
    const std::vector<Component> comps = component_profile(k);
    return size_via_crt(comps);
}

/// Minimal sizes modulo p, p^2, ..., p^n_max. Each step is checked to either
/// keep the size or multiply it by p.
[[nodiscard]] inline std::vector<std::int64_t> prime_power_ladder(std::int64_t p, int n_max,
                                                                  std::int64_t k) {
    if (!is_prime(p)) throw std::domain_error("prime_power_ladder: " + std::to_string(p) + " is not prime");
    std::vector<std::int64_t> sizes;
    std::int64_t q = 1;
    for (int i = 1; i <= n_max; ++i) {
        q *= p;
        const std::int64_t r = minimal_monomial_size(Residue{k, Modulus{q}}).size;
        if (!sizes.empty() && r != sizes.back() && r != p * sizes.back())
            throw TheoremViolation("size mod " + std::to_string(q) + " is " + std::to_string(r) +
                                   ", expected " + std::to_string(sizes.back()) + " or " +
                                   std::to_string(p * sizes.back()));
        sizes.push_back(r);
    }
    return sizes;
}

struct LawCheck {
    bool holds;
    MonomialSize observed;
    std::string expectation;
};

/// Odd prime p: k = +-2 gives size p, anything else a size dividing (p+1)/2 or (p-1)/2.
[[nodiscard]] inline LawCheck check_prime_size_law(std::int64_t p, std::int64_t k) {
    if (p == 2 || !is_prime(p)) throw std::domain_error("check_prime_size_law needs an odd prime");
    const Modulus mod{p};
    const MonomialSize ms = minimal_monomial_size(Residue{k, mod});
    const std::int64_t kv = mod.reduce(k);
    if (kv == 2 || kv == p - 2) return {ms.size == p, ms, "size = " + std::to_string(p)};
    const bool holds = (p + 1) / 2 % ms.size == 0 || (p - 1) / 2 % ms.size == 0;
    return {holds, ms,
            "size divides " + std::to_string((p + 1) / 2) + " or " + std::to_string((p - 1) / 2)};
}

/// Even N >= 4, k = N/2: size 4 with sign +1 when 4 | N, else size 6 with sign -1.
[[nodiscard]] inline LawCheck check_half_n_law(std::int64_t n) {
    if (n < 4 || n % 2 != 0) throw std::domain_error("check_half_n_law needs even N >= 4");
    const MonomialSize ms = minimal_monomial_size(Residue{n / 2, Modulus{n}});
    if (n % 4 == 0)
        return {ms == MonomialSize{4, SolutionSign::plus}, ms, "size 4, M_4 = Id"};
    return {ms == MonomialSize{6, SolutionSign::minus}, ms, "size 6, M_6 = -Id"};
}

/// k = a * prod p_i^b_i with 1 <= b_i <= a_i and a coprime to N: size 2 * prod p_i^(a_i - b_i).
/// Valuations are capped at a_i since k is only known modulo N (k = 0 reads as N).
/// The closed form is cross-checked against the direct computation.
[[nodiscard]] inline std::int64_t shared_factor_size(Residue k) {
    const std::int64_t n = k.modulus().value();
    const std::int64_t kv = k.value();
    std::int64_t predicted = 2;
    for (const PrimePower& pp : factorize(n)) {
        int beta = 0;
        std::int64_t rest = kv;
        while (rest % pp.prime == 0 && beta < pp.exponent) {
            rest /= pp.prime;
            ++beta;
        }
        if (beta == 0)
            throw std::domain_error("shared_factor_size: " + std::to_string(pp.prime) +
                                    " does not divide k");
        predicted *= power(pp.prime, pp.exponent - beta);
    }
    const std::int64_t direct = minimal_monomial_size(k).size;
    if (direct != predicted)
        throw TheoremViolation("shared_factor_size: predicted " + std::to_string(predicted) +
                               ", direct " + std::to_string(direct));
    return predicted;
}

}  // namespace frieze_mod
