#pragma once

#include "frieze_mod/core_ring.hpp"

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace frieze_mod {

/// A nonempty tuple of residues sharing one modulus. Entries are kept as
/// canonical representatives, so negative input is normalized on construction.
class Cycle {
public:
    Cycle(Modulus modulus, std::vector<std::int64_t> values)
        : modulus_(modulus), values_(std::move(values)) {
        if (values_.empty()) throw std::domain_error("a cycle must have at least one entry");
        for (auto& v : values_) v = modulus_.reduce(v);
    }

    Cycle(Modulus modulus, std::initializer_list<std::int64_t> values)
        : Cycle(modulus, std::vector<std::int64_t>(values)) {}

    /// (k, k, ..., k) of the given size.
    static Cycle constant(Residue k, std::size_t size) {
        return {k.modulus(), std::vector<std::int64_t>(size, k.value())};
    }

    /// (x, k, ..., k, y) of the given size (>= 2).
    static Cycle bordered(Residue x, Residue k, Residue y, std::size_t size) {
        if (size < 2) throw std::domain_error("bordered cycle needs size >= 2");
        std::vector<std::int64_t> v(size, k.value());
        v.front() = x.value();
        v.back() = y.value();
        return {k.modulus(), std::move(v)};
    }

    [[nodiscard]] Modulus modulus() const noexcept { return modulus_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] const std::vector<std::int64_t>& values() const noexcept { return values_; }
    [[nodiscard]] Residue operator[](std::size_t i) const { return {values_.at(i), modulus_}; }

    friend bool operator==(const Cycle&, const Cycle&) = default;
    friend auto operator<=>(const Cycle& a, const Cycle& b) {
        if (auto c = a.modulus_.value() <=> b.modulus_.value(); c != 0) return c;
        return a.values_ <=> b.values_;
    }

private:
    Modulus modulus_;
    std::vector<std::int64_t> values_;
};

}  // namespace frieze_mod
