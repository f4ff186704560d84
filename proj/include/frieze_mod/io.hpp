#pragma once

/**
 * @file io.hpp
 * @brief JSON reports, survey records and the on-disk result cache.
 *
 * Requires nlohmann/json as "json.hpp" on the include path.
 */

#include "frieze_mod/verify.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace frieze_mod {

using ordered_json = nlohmann::ordered_json;

[[nodiscard]] inline ordered_json to_json(const TheoremReport& r) {
    ordered_json j;
    j["theorem_id"] = r.theorem_id;
    j["range"] = r.range;
    j["status"] = to_string(r.status);
    ordered_json ces = ordered_json::array();
    for (const Counterexample& c : r.counterexamples)
        ces.push_back({{"N", c.n}, {"k", c.k}, {"observed", c.observed}, {"expected", c.expected}});
    j["counterexamples"] = std::move(ces);
    j["elapsed_ms"] = r.elapsed.count();
    j["instances"] = r.instances;
    ordered_json notes = ordered_json::array();
    for (const ReportNote& n : r.notes) notes.push_back({{"N", n.n}, {"k", n.k}, {"note", n.text}});
    j["notes"] = std::move(notes);
    return j;
}

/// Field order matches the CSV header.
[[nodiscard]] inline ordered_json to_json(const CellRecord& c) {
    ordered_json j;
    j["N"] = c.n;
    j["k"] = c.k;
    j["size"] = c.size;
    j["sign"] = to_int(c.sign);
    j["verdict"] = to_string(c.verdict);
    if (c.witness) {
        j["witness_size"] = c.witness->wsize;
        j["witness_x"] = c.witness->x.value();
        j["witness_y"] = c.witness->y.value();
    } else {
        j["witness_size"] = nullptr;
        j["witness_x"] = nullptr;
        j["witness_y"] = nullptr;
    }
    return j;
}

inline constexpr const char* kSurveyCsvHeader = "N,k,size,sign,verdict,witness_size,witness_x,witness_y";

[[nodiscard]] inline std::string to_csv_row(const CellRecord& c) {
    std::ostringstream os;
    os << c.n << ',' << c.k << ',' << c.size << ',' << to_int(c.sign) << ',' << to_string(c.verdict)
       << ',';
    if (c.witness) os << c.witness->wsize << ',' << c.witness->x.value() << ',' << c.witness->y.value();
    else os << ",,";
    return os.str();
}

[[nodiscard]] inline std::optional<Verdict> verdict_from_string(std::string_view s) {
    for (Verdict v : {Verdict::irreducible, Verdict::reducible, Verdict::zero_convention})
        if (s == to_string(v)) return v;
    return std::nullopt;
}

/// Inverse of to_json(CellRecord); throws std::invalid_argument on malformed input.
[[nodiscard]] inline CellRecord cell_from_json(const ordered_json& j) {
    try {
        const std::int64_t n = j.at("N").get<std::int64_t>();
        const Modulus mod{n};
        const int sign = j.at("sign").get<int>();
        if (sign != 1 && sign != -1) throw std::invalid_argument("bad sign");
        const auto verdict = verdict_from_string(j.at("verdict").get<std::string>());
        if (!verdict) throw std::invalid_argument("bad verdict");
        CellRecord c{n, j.at("k").get<std::int64_t>(), j.at("size").get<std::int64_t>(),
                     static_cast<SolutionSign>(sign), *verdict, std::nullopt};
        if (!j.at("witness_size").is_null()) {
            ReductionWitness w{j.at("witness_size").get<std::int64_t>(),
                               Residue{j.at("witness_x").get<std::int64_t>(), mod},
                               Residue{j.at("witness_y").get<std::int64_t>(), mod},
                               SolutionSign::plus};
            // The witness sign is not stored; it is re-derived and doubles as a sanity check.
            const auto ws = solution_sign(w.cycle(Residue{c.k, mod}));
            if (w.wsize < 3 || !ws) throw std::invalid_argument("witness is not a solution");
            w.sign = *ws;
            c.witness = w;
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed cell record: ") + e.what());
    }
}

/// Memo of classify_cell persisted as one JSON document. Entries from another
/// schema version are dropped wholesale; unreadable files are ignored.
class ResultCache {
public:
    static constexpr int kSchemaVersion = 1;

    explicit ResultCache(std::filesystem::path file) : file_(std::move(file)) { load(); }

    /// $FRIEZE_MOD_CACHE_DIR, else $XDG_CACHE_HOME/frieze_mod, else ~/.cache/frieze_mod.
    [[nodiscard]] static std::filesystem::path default_dir() {
        if (const char* d = std::getenv("FRIEZE_MOD_CACHE_DIR"); d && *d) return d;
        if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x)
            return std::filesystem::path(x) / "frieze_mod";
        if (const char* h = std::getenv("HOME"); h && *h)
            return std::filesystem::path(h) / ".cache" / "frieze_mod";
        return std::filesystem::temp_directory_path() / "frieze_mod";
    }

    [[nodiscard]] static std::filesystem::path default_file() { return default_dir() / "cells.json"; }

    /// Cached record, or computes, stores and returns it.
    CellRecord get(std::int64_t n, std::int64_t k) {
        const std::int64_t kv = Modulus{n}.reduce(k);
        const std::string key = std::to_string(n) + ":" + std::to_string(kv);
        if (auto it = entries_.find(key); it != entries_.end()) return it->second;
        CellRecord c = classify_cell(n, kv);
        entries_.emplace(key, c);
        dirty_ = true;
        return c;
    }

    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] const std::filesystem::path& file() const noexcept { return file_; }

    /// Writes to a sibling temp file, then renames over the target.
    void save() {
        if (!dirty_) return;
        ordered_json doc;
        doc["schema_version"] = kSchemaVersion;
        ordered_json entries = ordered_json::object();
        for (const auto& [key, c] : entries_) entries[key] = to_json(c);
        doc["entries"] = std::move(entries);

        std::filesystem::create_directories(file_.parent_path());
        std::filesystem::path tmp = file_;
        tmp += ".tmp";
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
            out << doc.dump() << '\n';
            if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        }
        std::filesystem::rename(tmp, file_);
        dirty_ = false;
    }

private:
    void load() {
        std::ifstream in(file_);
        if (!in) return;
        try {
            const ordered_json doc = ordered_json::parse(in);
            if (doc.value("schema_version", -1) != kSchemaVersion) return;
            for (const auto& [key, value] : doc.at("entries").items())
                entries_.emplace(key, cell_from_json(value));
        } catch (const std::exception&) {
            // The cache is advisory: a corrupt file is recomputed from scratch.
            entries_.clear();
        }
    }

    std::filesystem::path file_;
    std::map<std::string, CellRecord> entries_;
    bool dirty_ = false;
};

}  // namespace frieze_mod
