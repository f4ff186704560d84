#pragma once

/**
 * @file reduce.hpp
 * @brief Reducibility of solutions under the cycle sum.
 *
 * A solution c of size n >= 3 is reducible when some rotation/reversal of c
 * equals a (+) b with |a|, |b| >= 3 and b itself a solution. For the minimal
 * monomial solution (k, ..., k) this amounts to a bordered solution
 * (x, k, ..., k, y) of some size 3 <= l' <= n - 1.
 *
 * Bordered solutions are solved in closed form. With
 * P = M_{l'-2}(k, ..., k) = [[a, b], [c, d]],
 *
 *   m1(y) P m1(x) = [[y(ax + b) - (cx + d), c - ay], [ax + b, -a]],
 *
 * so the product is eps * Id only if a = -eps, x = eps * b, y = -eps * c and
 * -(cx + d) = eps. There is at most one (x, y) per sign.
 */

#include "frieze_mod/core_ring.hpp"
#include "frieze_mod/cycles.hpp"
#include "frieze_mod/modmat.hpp"
#include "frieze_mod/monomial.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace frieze_mod {

struct BorderedSolution {
    std::int64_t x;
    std::int64_t y;
    SolutionSign sign;

    friend bool operator==(const BorderedSolution&, const BorderedSolution&) = default;
};

namespace detail {

inline void solve_bordered(const Mat2& p, std::vector<BorderedSolution>& out) {
    const Modulus& m = p.modulus;
    for (SolutionSign s : {SolutionSign::plus, SolutionSign::minus}) {
        const std::int64_t eps = to_int(s);
        if (p.a != m.reduce(-eps)) continue;
        const std::int64_t x = m.reduce(eps * p.b);
        const std::int64_t y = m.reduce(-eps * p.c);
        if (m.reduce(-(m.mul(p.c, x) + p.d)) != m.reduce(eps)) continue;
        BorderedSolution sol{x, y, s};
        // Modulo 2 both signs describe the same matrix.
        if (std::find_if(out.begin(), out.end(), [&](const BorderedSolution& o) {
                return o.x == x && o.y == y;
            }) == out.end())
            out.push_back(sol);
    }
    std::sort(out.begin(), out.end(), [](const BorderedSolution& l, const BorderedSolution& r) {
        return std::pair{l.x, l.y} < std::pair{r.x, r.y};
    });
}

}  // namespace detail

/// All (x, y) making (x, k, ..., k, y) of the given size (>= 2) a solution,
/// sorted by (x, y).
[[nodiscard]] inline std::vector<BorderedSolution> bordered_solutions(Residue k, std::int64_t size) {
    if (size < 2) throw std::domain_error("bordered cycles need size >= 2");
    const Mat2 p = mat_pow(m1(k), static_cast<std::uint64_t>(size - 2));
    std::vector<BorderedSolution> out;
    detail::solve_bordered(p, out);
    return out;
}

/// Same set as bordered_solutions, by testing every (x, y) in (Z/NZ)^2.
[[nodiscard]] inline std::vector<BorderedSolution> bordered_solutions_scan(Residue k,
                                                                          std::int64_t size) {
    if (size < 2) throw std::domain_error("bordered cycles need size >= 2");
    const Modulus m = k.modulus();
    const Mat2 p = mat_pow(m1(k), static_cast<std::uint64_t>(size - 2));
    std::vector<BorderedSolution> out;
    for (std::int64_t x = 0; x < m.value(); ++x) {
        const Mat2 px = p * m1(Residue{x, m});
        for (std::int64_t y = 0; y < m.value(); ++y) {
            if (auto s = central_sign(push_front_m1(y, px))) out.push_back({x, y, *s});
        }
    }
    return out;
}

struct ReductionWitness {
    std::int64_t wsize;
    Residue x;
    Residue y;
    SolutionSign sign;

    /// (x, k, ..., k, y).
    [[nodiscard]] Cycle cycle(Residue k) const {
        return Cycle::bordered(x, k, y, static_cast<std::size_t>(wsize));
    }
};

/// Smallest-size bordered solution of size 3 <= l' <= n - 1, where n is the
/// minimal monomial size of k; ties broken by (x, y). Absent when the minimal
/// monomial solution is irreducible (or has size < 4).
[[nodiscard]] inline std::optional<ReductionWitness> monomial_reduction_witness(Residue k) {
    const std::int64_t n = minimal_monomial_size(k).size;
    const Modulus mod = k.modulus();
    Mat2 p = m1(k);  // M_{l'-2} for l' = 3
    for (std::int64_t lp = 3; lp <= n - 1; ++lp) {
        if (lp > 3) p = push_front_m1(k.value(), p);
        std::vector<BorderedSolution> sols;
        detail::solve_bordered(p, sols);
        if (sols.empty()) continue;
        const BorderedSolution& s = sols.front();
        ReductionWitness w{lp, Residue{s.x, mod}, Residue{s.y, mod}, s.sign};
        if (solution_sign(w.cycle(k)) != s.sign)
            throw TheoremViolation("emitted witness is not a solution");
        return w;
    }
    return std::nullopt;
}

enum class Verdict { irreducible, reducible, zero_convention };

[[nodiscard]] inline const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::irreducible: return "irreducible";
        case Verdict::reducible: return "reducible";
        case Verdict::zero_convention: return "zero-convention";
    }
    return "?";
}

struct Classification {
    Verdict verdict;
    MonomialSize minimal;
    std::optional<ReductionWitness> witness;
};

/// (0, 0) is the only size-2 minimal solution and is never called irreducible.
[[nodiscard]] inline Classification is_irreducible_monomial(Residue k) {
    const MonomialSize ms = minimal_monomial_size(k);
    if (ms.size == 2) return {Verdict::zero_convention, ms, std::nullopt};
    auto w = monomial_reduction_witness(k);
    return {w ? Verdict::reducible : Verdict::irreducible, ms, w};
}

struct Decomposition {
    Cycle rotated;
    Cycle left;
    Cycle right;
};

/// Searches every rotation/reversal c' of c, every split size l in [3, n-1]
/// and every pair of endpoints (b_1, b_l) for c' = a (+) b with b a solution.
/// The interior of b is read off c'. Only b is required to be a solution.
[[nodiscard]] inline std::optional<Decomposition> is_reducible_general(const Cycle& c) {
    if (!solution_sign(c)) throw std::domain_error("is_reducible_general: input is not a solution");
    const Modulus mod = c.modulus();
    const std::size_t n = c.size();
    if (n < 4) return std::nullopt;

    for (const Cycle& rot : equivalence_class(c)) {
        const auto& v = rot.values();
        for (std::size_t l = 3; l <= n - 1; ++l) {
            const std::size_t m = n - l + 2;
            std::vector<std::int64_t> interior(v.begin() + static_cast<std::ptrdiff_t>(m), v.end());
            Mat2 q = Mat2::identity(mod);
            for (std::int64_t e : interior) q = push_front_m1(e, q);
            for (std::int64_t b1 = 0; b1 < mod.value(); ++b1) {
                const Mat2 qb = q * m1(Residue{b1, mod});
                for (std::int64_t bl = 0; bl < mod.value(); ++bl) {
                    if (!central_sign(push_front_m1(bl, qb))) continue;
                    std::vector<std::int64_t> bv{b1};
                    bv.insert(bv.end(), interior.begin(), interior.end());
                    bv.push_back(bl);
                    std::vector<std::int64_t> av(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m));
                    av.front() -= bl;
                    av.back() -= b1;
                    return Decomposition{rot, Cycle{mod, std::move(av)}, Cycle{mod, std::move(bv)}};
                }
            }
        }
    }
    return std::nullopt;
}

struct StructureCheck {
    bool holds = true;
    std::int64_t minimal_size = 0;
    std::int64_t sizes_checked = 0;
    std::vector<std::string> violations;
};

/// Checks the shape of every bordered solution (a, k, ..., k, b) up to `cap`
/// (default 3n + 2): size = 0 mod n forces a = b = k, size = 1 mod n admits
/// none, size = 2 mod n forces a = b = 0. When the minimal solution is
/// irreducible, solutions exist exactly at sizes 0 and 2 mod n.
[[nodiscard]] inline StructureCheck witness_structure_check(Residue k,
                                                           std::optional<std::int64_t> cap = {}) {
    const Classification cls = is_irreducible_monomial(k);
    const std::int64_t n = cls.minimal.size;
    const std::int64_t limit = cap.value_or(3 * n + 2);
    const bool irreducible = cls.verdict == Verdict::irreducible;

    StructureCheck out;
    out.minimal_size = n;
    auto fail = [&](std::int64_t size, const std::string& what) {
        out.holds = false;
        out.violations.push_back("size " + std::to_string(size) + ": " + what);
    };
    for (std::int64_t s = 2; s <= limit; ++s) {
        ++out.sizes_checked;
        const auto sols = bordered_solutions(k, s);
        const std::int64_t r = s % n;
        for (const BorderedSolution& sol : sols) {
            if (r == 0 && (sol.x != k.value() || sol.y != k.value()))
                fail(s, "endpoints differ from k");
            else if (r == 1 && n > 1)
                fail(s, "solution at size 1 mod n");
            else if (r == 2 % n && r != 0 && (sol.x != 0 || sol.y != 0))
                fail(s, "endpoints differ from 0");
            if (irreducible && r != 0 && r != 2 % n) fail(s, "solution at a forbidden size");
        }
        if (irreducible && (r == 0 || r == 2 % n) && sols.empty())
            fail(s, "expected a solution at this size");
    }
    return out;
}

}  // namespace frieze_mod
