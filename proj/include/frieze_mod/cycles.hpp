#pragma once

/**
 * @file cycles.hpp
 * @brief The sum of cycles, equivalence up to rotation and reversal, canonical
 * representatives and the cycle literal syntax used by the CLI.
 */

#include "frieze_mod/cycle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frieze_mod {

/// (a_1+b_m, a_2, ..., a_{n-1}, a_n+b_1, b_2, ..., b_{m-1}); both sides need size >= 2.
[[nodiscard]] inline Cycle oplus(const Cycle& a, const Cycle& b) {
    if (a.modulus() != b.modulus()) throw std::domain_error("oplus: modulus mismatch");
    if (a.size() < 2 || b.size() < 2) throw std::domain_error("oplus: operands need size >= 2");
    const auto& av = a.values();
    const auto& bv = b.values();
    std::vector<std::int64_t> out;
    out.reserve(av.size() + bv.size() - 2);
    out.push_back(av.front() + bv.back());
    out.insert(out.end(), av.begin() + 1, av.end() - 1);
    out.push_back(av.back() + bv.front());
    out.insert(out.end(), bv.begin() + 1, bv.end() - 1);
    return {a.modulus(), std::move(out)};
}

/// All rotations of c and of its reversal.
[[nodiscard]] inline std::set<Cycle> equivalence_class(const Cycle& c) {
    std::set<Cycle> out;
    std::vector<std::int64_t> v = c.values();
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t r = 0; r < v.size(); ++r) {
            out.emplace(c.modulus(), v);
            std::rotate(v.begin(), v.begin() + 1, v.end());
        }
        std::reverse(v.begin(), v.end());
    }
    return out;
}

[[nodiscard]] inline bool equivalent(const Cycle& a, const Cycle& b) {
    if (a.modulus() != b.modulus() || a.size() != b.size()) return false;
    return equivalence_class(a).contains(b);
}

/// Lexicographically smallest member of the equivalence class.
[[nodiscard]] inline Cycle canonical_form(const Cycle& c) { return *equivalence_class(c).begin(); }

/// Parses "6,3,-3,6" (whitespace around entries tolerated).
/// Throws std::invalid_argument naming the 1-based character position.
[[nodiscard]] inline Cycle parse_cycle(std::string_view text, Modulus modulus) {
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (true) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        const char* first = text.data() + pos;
        const char* last = text.data() + text.size();
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{})
            throw std::invalid_argument("cycle parse error at position " + std::to_string(pos + 1));
        values.push_back(v);
        pos = static_cast<std::size_t>(ptr - text.data());
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw std::invalid_argument("cycle parse error at position " + std::to_string(pos + 1));
        ++pos;
    }
    return {modulus, std::move(values)};
}

/// "v1,v2,...,vn" with canonical representatives.
[[nodiscard]] inline std::string format_cycle(const Cycle& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c.values()[i];
    return os.str();
}

}  // namespace frieze_mod
