// frieze_mod: minimal monomial solutions of M_n = +-Id over Z/NZ.

#include "frieze_mod/io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fm = frieze_mod;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr std::int64_t kScanLimit = 2000;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

fm::Modulus modulus_arg(std::int64_t n) {
    if (n < 2) throw UsageError("N must be >= 2, got " + std::to_string(n));
    return fm::Modulus{n};
}

/// Cell lookups go through the cache unless --no-cache was given.
class Cells {
public:
    explicit Cells(bool use_cache) {
        if (use_cache) cache_.emplace(fm::ResultCache::default_file());
    }

    fm::CellRecord get(std::int64_t n, std::int64_t k) {
        return cache_ ? cache_->get(n, k) : fm::classify_cell(n, k);
    }

    /// Cache write failures never change command output.
    void flush() noexcept {
        if (!cache_) return;
        try {
            cache_->save();
        } catch (const std::exception& e) {
            std::cerr << "warning: cache not saved: " << e.what() << '\n';
        }
    }

private:
    std::optional<fm::ResultCache> cache_;
};

std::string sign_name(fm::SolutionSign s) { return s == fm::SolutionSign::plus ? "Id" : "-Id"; }

std::string witness_text(const fm::ReductionWitness& w, std::int64_t n, std::int64_t k) {
    return "(" + fm::format_cycle(w.cycle(fm::Residue{k, fm::Modulus{n}})) + ")";
}

/// Sends text to --out when given, else stdout.
void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::trunc);
    if (!f) throw IoError("cannot open " + out_path + " for writing");
    f << text;
    if (!f) throw IoError("write to " + out_path + " failed");
}

int cmd_size(std::int64_t n, std::int64_t k, Cells& cells) {
    modulus_arg(n);
    const fm::CellRecord c = cells.get(n, k);
    std::cout << c.size << ", " << sign_name(c.sign) << '\n';
    return kOk;
}

int cmd_classify(std::int64_t n, std::int64_t k, Cells& cells) {
    modulus_arg(n);
    const fm::CellRecord c = cells.get(n, k);
    switch (c.verdict) {
        case fm::Verdict::reducible:
            std::cout << "reducible; witness size " << c.witness->wsize << ": "
                      << witness_text(*c.witness, n, c.k) << '\n';
            break;
        case fm::Verdict::irreducible:
        case fm::Verdict::zero_convention:
            std::cout << fm::to_string(c.verdict) << "; size " << c.size << '\n';
            break;
    }
    return kOk;
}

int cmd_oplus(std::int64_t n, const std::string& a_text, const std::string& b_text) {
    const fm::Modulus mod = modulus_arg(n);
    auto parse = [&](const std::string& text, const char* which) {
        try {
            return fm::parse_cycle(text, mod);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("operand ") + which + ": " + e.what());
        }
    };
    const fm::Cycle a = parse(a_text, "a");
    const fm::Cycle b = parse(b_text, "b");
    if (a.size() < 2 || b.size() < 2) throw UsageError("oplus operands need size >= 2");
    std::cout << fm::format_cycle(fm::oplus(a, b)) << '\n';
    return kOk;
}

/// Lists every bordered solution (x, k, ..., k, y) of size 3..n-1 when --scan
/// is given, otherwise only the canonical reduction witness.
int cmd_witness(std::int64_t n, std::int64_t k, bool scan, bool force) {
    const fm::Modulus mod = modulus_arg(n);
    const fm::Residue r{k, mod};
    if (!scan) {
        const auto w = fm::monomial_reduction_witness(r);
        if (!w) {
            std::cout << "none\n";
            return kOk;
        }
        std::cout << "size " << w->wsize << ": " << witness_text(*w, n, r.value()) << ", "
                  << sign_name(w->sign) << '\n';
        return kOk;
    }
    if (n > kScanLimit && !force)
        throw UsageError("--scan with N > " + std::to_string(kScanLimit) +
                         " is O(N^2) per size; pass --force to run it");
    const std::int64_t size = fm::minimal_monomial_size(r).size;
    std::ostringstream os;
    for (std::int64_t s = 3; s <= size - 1; ++s) {
        for (const fm::BorderedSolution& b : fm::bordered_solutions_scan(r, s)) {
            const fm::ReductionWitness w{s, fm::Residue{b.x, mod}, fm::Residue{b.y, mod}, b.sign};
            os << "size " << s << ": " << witness_text(w, n, r.value()) << ", " << sign_name(b.sign)
               << '\n';
        }
    }
    const std::string text = os.str();
    std::cout << (text.empty() ? std::string("none\n") : text);
    return kOk;
}

std::string valid_ids() {
    std::string out = "all";
    for (const char* id : fm::kTheoremIds) out += std::string(", ") + id;
    return out;
}

int cmd_verify(const std::string& id, fm::NRange range, const std::string& out_path) {
    if (id != "all" && !fm::is_theorem_id(id))
        throw UsageError("unknown theorem id '" + id + "'; valid ids: " + valid_ids());
    fm::CellTable table;
    std::vector<fm::TheoremReport> reports;
    if (id == "all") reports = fm::verify_all(table, range);
    else reports.push_back(fm::run_verifier(id, table, range));

    bool failed = false;
    for (const auto& r : reports) failed = failed || r.status == fm::ReportStatus::fail;

    fm::ordered_json doc;
    if (id == "all") {
        doc["theorem_id"] = "all";
        doc["range"] = range.describe();
        doc["status"] = failed ? "fail" : "pass";
        fm::ordered_json arr = fm::ordered_json::array();
        std::int64_t elapsed = 0;
        for (const auto& r : reports) {
            arr.push_back(fm::to_json(r));
            elapsed += r.elapsed.count();
        }
        doc["counterexamples"] = fm::ordered_json::array();
        for (const auto& r : reports)
            for (const auto& j : fm::to_json(r)["counterexamples"]) doc["counterexamples"].push_back(j);
        doc["elapsed_ms"] = elapsed;
        doc["reports"] = std::move(arr);
    } else {
        doc = fm::to_json(reports.front());
    }
    emit(out_path, doc.dump(2) + "\n");
    if (!out_path.empty()) {
        for (const auto& r : reports)
            std::cout << r.theorem_id << ": " << fm::to_string(r.status) << " (" << r.instances
                      << " instances, " << r.counterexamples.size() << " counterexamples)\n";
    }
    return failed ? kFailure : kOk;
}

int cmd_survey(fm::NRange range, const std::string& format, const std::string& out_path,
               Cells& cells) {
    std::ostringstream os;
    if (format == "csv") os << fm::kSurveyCsvHeader << '\n';
    fm::survey(
        range,
        [&](const fm::CellRecord& c) {
            if (format == "csv") os << fm::to_csv_row(c) << '\n';
            else os << fm::to_json(c).dump() << '\n';
        },
        [&](std::int64_t n, std::int64_t k) { return cells.get(n, k); });
    emit(out_path, os.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal monomial solutions of M_n = +-Id over Z/NZ and their irreducibility"};
    app.require_subcommand(1);
    bool no_cache = false;
    app.add_flag("--no-cache", no_cache, "Bypass the result cache")->configurable(false);

    std::int64_t n = 0;
    std::int64_t k = 0;
    auto add_nk = [&](CLI::App* sub) {
        sub->add_option("N", n, "Modulus (>= 2)")->required();
        sub->add_option("k", k, "Residue (any integer, reduced mod N)")->required();
    };

    auto* size = app.add_subcommand("size", "Minimal monomial size and sign");
    add_nk(size);
    auto* classify = app.add_subcommand("classify", "Irreducibility of the minimal monomial solution");
    add_nk(classify);

    std::string a_text, b_text;
    auto* oplus = app.add_subcommand("oplus", "Sum of two cycles");
    oplus->add_option("N", n, "Modulus (>= 2)")->required();
    oplus->add_option("a", a_text, "First cycle, e.g. 1,1,3")->required();
    oplus->add_option("b", b_text, "Second cycle, e.g. -2,0,2")->required();

    bool scan = false;
    bool force = false;
    auto* witness = app.add_subcommand("witness", "Reduction witness (x, k, ..., k, y)");
    add_nk(witness);
    witness->add_flag("--scan", scan, "List every bordered solution by scanning all (x, y)");
    witness->add_flag("--force", force, "Allow --scan above N = 2000");

    fm::NRange range;
    std::string out_path;
    std::string theorem_id;
    auto add_range = [&](CLI::App* sub) {
        sub->add_option("--min", range.min, "Smallest N")->capture_default_str();
        sub->add_option("--max", range.max, "Largest N")->capture_default_str();
        sub->add_option("--out", out_path, "Output file (default stdout)");
    };
    auto* verify = app.add_subcommand("verify", "Check a statement over a range of N");
    verify->add_option("theorem_id", theorem_id, "One of: " + valid_ids())->required();
    add_range(verify);

    std::string format = "csv";
    auto* survey = app.add_subcommand("survey", "One record per (N, k)");
    add_range(survey);
    survey->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    Cells cells(!no_cache);
    int code = kOk;
    try {
        if (*size) code = cmd_size(n, k, cells);
        else if (*classify) code = cmd_classify(n, k, cells);
        else if (*oplus) code = cmd_oplus(n, a_text, b_text);
        else if (*witness) code = cmd_witness(n, k, scan, force);
        else if (*verify) code = cmd_verify(theorem_id, range, out_path);
        else if (*survey) code = cmd_survey(range, format, out_path, cells);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    cells.flush();
    return code;
}
