#pragma once

/**
 * @file modmat.hpp
 * @brief 2x2 matrices over Z/NZ and the continuant product
 *
 *   M_n(a_1, ..., a_n) = m1(a_n) * m1(a_{n-1}) * ... * m1(a_1),
 *   m1(k) = [[k, -1], [1, 0]].
 *
 * A cycle solves the frieze equation when M_n = +Id or M_n = -Id. Because
 * +-Id is central the solution predicate does not depend on the product
 * orientation, but intermediate matrices do, and the orientation above is the
 * one used throughout.
 */

#include "frieze_mod/core_ring.hpp"
#include "frieze_mod/cycle.hpp"

#include <cstdint>
#include <optional>
#include <ostream>

namespace frieze_mod {

/// Row-major [[a, b], [c, d]] over Z/NZ.
struct Mat2 {
    Modulus modulus;
    std::int64_t a, b, c, d;

    static constexpr Mat2 identity(Modulus m) noexcept {
        return {m, m.reduce(1), 0, 0, m.reduce(1)};
    }
    static constexpr Mat2 minus_identity(Modulus m) noexcept {
        return {m, m.reduce(-1), 0, 0, m.reduce(-1)};
    }

    [[nodiscard]] constexpr std::int64_t det() const noexcept {
        return modulus.reduce(modulus.mul(a, d) - modulus.mul(b, c));
    }

    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
    if (x.modulus != y.modulus) throw std::domain_error("matrix modulus mismatch");
    const Modulus& m = x.modulus;
    return {m,
            m.reduce(m.mul(x.a, y.a) + m.mul(x.b, y.c)),
            m.reduce(m.mul(x.a, y.b) + m.mul(x.b, y.d)),
            m.reduce(m.mul(x.c, y.a) + m.mul(x.d, y.c)),
            m.reduce(m.mul(x.c, y.b) + m.mul(x.d, y.d))};
}

inline std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]] mod "
              << m.modulus.value();
}

/// +1 when a product equals Id, -1 when it equals -Id.
enum class SolutionSign : int { minus = -1, plus = 1 };

[[nodiscard]] constexpr int to_int(SolutionSign s) noexcept { return static_cast<int>(s); }

/// m1(k) = [[k, -1], [1, 0]].
[[nodiscard]] inline Mat2 m1(Residue k) {
    const Modulus m = k.modulus();
    return {m, k.value(), m.reduce(-1), m.reduce(1), 0};
}

/// Left-multiplies `acc` by m1(k) without materializing m1(k).
[[nodiscard]] inline Mat2 push_front_m1(std::int64_t k, const Mat2& acc) {
    const Modulus& m = acc.modulus;
    return {m, m.reduce(m.mul(k, acc.a) - acc.c), m.reduce(m.mul(k, acc.b) - acc.d), acc.a, acc.b};
}

/// M_n(a_1, ..., a_n), the last entry ending up leftmost.
[[nodiscard]] inline Mat2 m_n(const Cycle& entries) {
    Mat2 acc = Mat2::identity(entries.modulus());
    for (std::int64_t v : entries.values()) acc = push_front_m1(v, acc);
    return acc;
}

/// Sign of a matrix that is +-Id, absent otherwise. Modulo 2 the two coincide
/// and +1 is reported.
[[nodiscard]] inline std::optional<SolutionSign> central_sign(const Mat2& m) {
    if (m == Mat2::identity(m.modulus)) return SolutionSign::plus;
    if (m == Mat2::minus_identity(m.modulus)) return SolutionSign::minus;
    return std::nullopt;
}

[[nodiscard]] inline std::optional<SolutionSign> solution_sign(const Cycle& entries) {
    return central_sign(m_n(entries));
}

/// Square-and-multiply.
[[nodiscard]] inline Mat2 mat_pow(Mat2 base, std::uint64_t e) {
    Mat2 result = Mat2::identity(base.modulus);
    while (e > 0) {
        if (e & 1U) result = result * base;
        base = base * base;
        e >>= 1U;
    }
    return result;
}

}  // namespace frieze_mod
