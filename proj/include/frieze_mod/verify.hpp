#pragma once

/**
 * @file verify.hpp
 * @brief Finite-range checks of the irreducibility and size statements for
 * minimal monomial solutions.
 *
 * Every verifier decides irreducibility through the reduce and monomial
 * primitives (CellTable below) and compares the outcome with the statement
 * it checks; none uses a closed-form classification as its own oracle.
 */

#include "frieze_mod/core_ring.hpp"
#include "frieze_mod/hypotheses.hpp"
#include "frieze_mod/monomial.hpp"
#include "frieze_mod/reduce.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace frieze_mod {

/// Everything known about the minimal monomial solution for one (N, k).
struct CellRecord {
    std::int64_t n;
    std::int64_t k;
    std::int64_t size;
    SolutionSign sign;
    Verdict verdict;
    std::optional<ReductionWitness> witness;
};

[[nodiscard]] inline CellRecord classify_cell(std::int64_t n, std::int64_t k) {
    const Residue r{k, Modulus{n}};
    const Classification c = is_irreducible_monomial(r);
    return {n, r.value(), c.minimal.size, c.minimal.sign, c.verdict, c.witness};
}

/// Memo over classify_cell, shared by the verifiers of one run.
class CellTable {
public:
    const CellRecord& cell(std::int64_t n, std::int64_t k) {
        const std::int64_t kv = Modulus{n}.reduce(k);
        auto it = cells_.find({n, kv});
        if (it == cells_.end()) it = cells_.emplace(std::pair{n, kv}, classify_cell(n, kv)).first;
        return it->second;
    }

    [[nodiscard]] std::size_t cached() const noexcept { return cells_.size(); }

private:
    std::map<std::pair<std::int64_t, std::int64_t>, CellRecord> cells_;
};

/// Inclusive range of moduli; empty when max < min.
struct NRange {
    std::int64_t min = 2;
    std::int64_t max = 150;

    [[nodiscard]] std::string describe() const {
        return "N in [" + std::to_string(min) + ", " + std::to_string(max) + "]";
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::int64_t n = std::max<std::int64_t>(min, 2); n <= max; ++n) f(n);
    }
};

enum class ReportStatus { pass, fail, vacuous };

[[nodiscard]] inline const char* to_string(ReportStatus s) noexcept {
    switch (s) {
        case ReportStatus::pass: return "pass";
        case ReportStatus::fail: return "fail";
        case ReportStatus::vacuous: return "vacuous";
    }
    return "?";
}

struct Counterexample {
    std::int64_t n;
    std::int64_t k;
    std::string observed;
    std::string expected;
};

struct ReportNote {
    std::int64_t n;
    std::int64_t k;
    std::string text;
};

struct TheoremReport {
    std::string theorem_id;
    std::string range;
    ReportStatus status = ReportStatus::vacuous;
    std::int64_t instances = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<ReportNote> notes;
    std::chrono::milliseconds elapsed{0};
};

namespace detail {

inline std::string describe(const CellRecord& c) {
    return std::string(to_string(c.verdict)) + ", size " + std::to_string(c.size);
}

/// Collects instances and counterexamples, then settles status and timing.
class ReportBuilder {
public:
    ReportBuilder(std::string id, std::string range)
        : start_(std::chrono::steady_clock::now()) {
        report_.theorem_id = std::move(id);
        report_.range = std::move(range);
    }

    /// Counts one instance of the hypothesis; records a counterexample unless `ok`.
    void check(bool ok, std::int64_t n, std::int64_t k, std::string observed, std::string expected) {
        ++report_.instances;
        if (!ok) report_.counterexamples.push_back({n, k, std::move(observed), std::move(expected)});
    }

    void note(std::int64_t n, std::int64_t k, std::string text) {
        report_.notes.push_back({n, k, std::move(text)});
    }

    TheoremReport finish() {
        report_.status = !report_.counterexamples.empty() ? ReportStatus::fail
                         : report_.instances == 0         ? ReportStatus::vacuous
                                                          : ReportStatus::pass;
        report_.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start_);
        return std::move(report_);
    }

private:
    TheoremReport report_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

/// Outside N = 2 and N = 3m with gcd(m, 6) = 1, every irreducible minimal
/// monomial solution has size <= N.
[[nodiscard]] inline TheoremReport verify_size_bound(CellTable& table, NRange range) {
    detail::ReportBuilder rb("size-bound", range.describe());
    range.for_each([&](std::int64_t n) {
        if (!hyp::size_bound_applies(n)) return;
        for (std::int64_t k = 0; k < n; ++k) {
            const CellRecord& c = table.cell(n, k);
            rb.check(c.verdict != Verdict::irreducible || c.size <= n, n, k, detail::describe(c),
                     "irreducible implies size <= " + std::to_string(n));
        }
    });
    return rb.finish();
}

/// 8 | N: every minimal monomial size is <= N.
[[nodiscard]] inline TheoremReport verify_eight_divides(CellTable& table, NRange range) {
    detail::ReportBuilder rb("eight-divides", range.describe());
    range.for_each([&](std::int64_t n) {
        if (n % 8 != 0) return;
        for (std::int64_t k = 0; k < n; ++k) {
            const CellRecord& c = table.cell(n, k);
            rb.check(c.size <= n, n, k, "size " + std::to_string(c.size),
                     "size <= " + std::to_string(n));
        }
    });
    return rb.finish();
}

/// The k used for N = 3p: p + 2 when p = 1 mod 3, p - 2 when p = 2 mod 3.
[[nodiscard]] inline std::int64_t unbounded_family_k(std::int64_t p) {
    if (p == 2 || p == 3 || !is_prime(p))
        throw std::domain_error("unbounded family needs an odd prime other than 3, got " +
                                std::to_string(p));
    return p % 3 == 1 ? p + 2 : p - 2;
}

/// N = 3p: the minimal monomial solution for unbounded_family_k(p) is
/// irreducible of size 4p, so irreducible sizes exceed N by N/3.
[[nodiscard]] inline TheoremReport verify_unbounded_family(std::span<const std::int64_t> primes) {
    std::string range = "p in {";
    for (std::size_t i = 0; i < primes.size(); ++i) range += (i ? "," : "") + std::to_string(primes[i]);
    range += "}, N = 3p";
    detail::ReportBuilder rb("unbounded-family", range);
    for (std::int64_t p : primes) {
        const std::int64_t n = 3 * p;
        const CellRecord c = classify_cell(n, unbounded_family_k(p));
        rb.check(c.size == 4 * p && c.verdict == Verdict::irreducible, n, c.k, detail::describe(c),
                 "irreducible, size " + std::to_string(4 * p));
    }
    return rb.finish();
}

/// Odd primes other than 3 within [lo, hi].
[[nodiscard]] inline std::vector<std::int64_t> family_primes(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t p = std::max<std::int64_t>(lo, 5); p <= hi; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

/// N > 2 not of the form 2 * odd: odd-size minimal monomial solutions are
/// irreducible. N = 2m with m odd > 1: odd sizes divisible by 9 are.
[[nodiscard]] inline TheoremReport verify_odd_sizes(CellTable& table, NRange range) {
    detail::ReportBuilder rb("odd-sizes", range.describe());
    range.for_each([&](std::int64_t n) {
        if (n <= 2) return;
        const bool twice_odd = hyp::is_twice_odd(n);
        for (std::int64_t k = 0; k < n; ++k) {
            const CellRecord& c = table.cell(n, k);
            if (c.size % 2 == 0) continue;
            const bool ok = c.verdict == Verdict::irreducible;
            if (!twice_odd) {
                rb.check(ok, n, k, detail::describe(c), "irreducible (odd size)");
            } else if (c.size % 9 == 0) {
                rb.check(ok, n, k, detail::describe(c), "irreducible (odd size divisible by 9)");
            } else if (!ok) {
                rb.note(n, k, "reducible odd size " + std::to_string(c.size) + " modulo 2*odd");
            }
        }
    });
    return rb.finish();
}

/// N = 2m, m odd, minimal size 3h with h > 1 odd and 3 not dividing h:
/// irreducible iff the minimal size of k modulo m is divisible by 3.
[[nodiscard]] inline TheoremReport verify_3h_criterion(CellTable& table, NRange range) {
    detail::ReportBuilder rb("3h-criterion", range.describe());
    range.for_each([&](std::int64_t n) {
        if (!hyp::is_twice_odd(n) || n == 2) return;
        const std::int64_t m = n / 2;
        for (std::int64_t k = 0; k < n; ++k) {
            const CellRecord& c = table.cell(n, k);
            if (c.size % 3 != 0) continue;
            const std::int64_t h = c.size / 3;
            if (h == 1 || h % 2 == 0 || h % 3 == 0) continue;
            const std::int64_t half_size = table.cell(m, k).size;
            const bool predicted_irreducible = half_size % 3 == 0;
            rb.check((c.verdict == Verdict::irreducible) == predicted_irreducible, n, k,
                     detail::describe(c) + ", size mod " + std::to_string(m) + " is " +
                         std::to_string(half_size),
                     predicted_irreducible ? "irreducible" : "reducible");
        }
    });
    return rb.finish();
}

/// The k with k = 1 mod 2, k = 2 mod 3^a, k = -2 mod b, for N = 2 * 3^a * b.
[[nodiscard]] inline std::int64_t size_n_construction_k(std::int64_t n) {
    const auto form = hyp::two_three_form(n);
    if (!form) throw std::domain_error(std::to_string(n) + " is not of the form 2 * 3^a * b");
    const std::int64_t three_a = power(3, form->a);
    const Modulus mod{n};
    std::vector<Residue> parts{Residue{1, Modulus{2}}, Residue{2, Modulus{three_a}}};
    // b may itself split into several prime powers.
    for (const PrimePower& pp : factorize(form->b)) parts.emplace_back(-2, Modulus{pp.value()});
    return crt_combine(parts, mod).value();
}

/// N > 2: size-N minimal monomial solutions are irreducible unless
/// N = 2 * 3^a * b (a >= 1, b > 1 odd, 3 not dividing b), where a reducible
/// one exists (the constructed k is checked explicitly).
[[nodiscard]] inline TheoremReport verify_size_n(CellTable& table, NRange range) {
    detail::ReportBuilder rb("size-n", range.describe());
    range.for_each([&](std::int64_t n) {
        if (n <= 2) return;
        const bool special = hyp::two_three_form(n).has_value();
        if (!special) {
            for (std::int64_t k = 0; k < n; ++k) {
                const CellRecord& c = table.cell(n, k);
                if (c.size != n) continue;
                rb.check(c.verdict == Verdict::irreducible, n, k, detail::describe(c), "irreducible");
            }
            return;
        }
        const std::int64_t k = size_n_construction_k(n);
        const CellRecord& c = table.cell(n, k);
        rb.check(c.size == n && c.verdict == Verdict::reducible, n, k, detail::describe(c),
                 "reducible, size " + std::to_string(n));
        if (c.witness)
            rb.note(n, k, "reducible size-N instance, witness size " + std::to_string(c.witness->wsize));
    });
    return rb.finish();
}

/// Irreducibility modulo p^n predicted from k alone.
/// p odd: p does not divide k. p = 2: k odd, or k = 2^(n-1), or n >= 2 and k = 2 * odd.
[[nodiscard]] inline bool prime_power_predicts_irreducible(PrimePower q, std::int64_t k) {
    const std::int64_t n = q.value();
    const std::int64_t kv = Modulus{n}.reduce(k);
    if (q.prime != 2) return kv % q.prime != 0;
    if (kv % 2 == 1) return true;
    if (kv == Modulus{n}.reduce(power(2, q.exponent - 1))) return true;
    return q.exponent >= 2 && kv % 4 == 2;
}

[[nodiscard]] inline TheoremReport verify_prime_power_classification(CellTable& table, NRange range) {
    detail::ReportBuilder rb("prime-power", range.describe());
    range.for_each([&](std::int64_t n) {
        const Factorization f = factorize(n);
        if (f.size() != 1) return;
        for (std::int64_t k = 0; k < n; ++k) {
            const CellRecord& c = table.cell(n, k);
            const bool predicted = prime_power_predicts_irreducible(f.front(), k);
            rb.check((c.verdict == Verdict::irreducible) == predicted, n, k, detail::describe(c),
                     predicted ? "irreducible" : "not irreducible");
        }
    });
    return rb.finish();
}

/// Unitary divisors m of N (products of whole prime-power factors), 1 < m < N.
[[nodiscard]] inline std::vector<std::int64_t> proper_unitary_divisors(std::int64_t n) {
    const Factorization f = factorize(n);
    std::vector<std::int64_t> out;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << f.size()); ++mask) {
        std::int64_t m = 1;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (mask & (std::size_t{1} << i)) m *= f[i].value();
        out.push_back(m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Known reducible families:
///  - odd p with p^2 | N: k = N/p is reducible of size 2p;
///  - 16 | N: k = N/4 is reducible of size 8;
///  - N = n*m, gcd(n, m) = 1, n, m != 1, m odd and prime to 3: some unit k is
///    reducible of size 6m (n > 2) or 3m (n = 2), found by sweeping k.
[[nodiscard]] inline TheoremReport verify_reducible_constructions(CellTable& table, NRange range) {
    detail::ReportBuilder rb("reducible-constructions", range.describe());
    range.for_each([&](std::int64_t n) {
        for (const PrimePower& pp : factorize(n)) {
            if (pp.prime == 2 || pp.exponent < 2) continue;
            const CellRecord& c = table.cell(n, n / pp.prime);
            rb.check(c.size == 2 * pp.prime && c.verdict == Verdict::reducible, n, c.k,
                     detail::describe(c), "reducible, size " + std::to_string(2 * pp.prime));
        }
        if (n % 16 == 0) {
            const CellRecord& c = table.cell(n, n / 4);
            rb.check(c.size == 8 && c.verdict == Verdict::reducible, n, c.k, detail::describe(c),
                     "reducible, size 8");
        }
        for (std::int64_t m : proper_unitary_divisors(n)) {
            if (m % 2 == 0 || m % 3 == 0) continue;
            const std::int64_t cofactor = n / m;
            const std::int64_t target = cofactor > 2 ? 6 * m : 3 * m;
            std::optional<std::int64_t> found;
            for (std::int64_t k = 1; k < n && !found; ++k) {
                if (std::gcd(k, n) != 1) continue;
                const CellRecord& c = table.cell(n, k);
                if (c.size == target && c.verdict == Verdict::reducible) found = k;
            }
            rb.check(found.has_value(), n, found.value_or(0),
                     "no unit k found for m = " + std::to_string(m),
                     "some unit k reducible of size " + std::to_string(target));
        }
    });
    return rb.finish();
}

/// Reducible instances just outside the hypotheses of the special-size statements.
inline constexpr std::pair<std::int64_t, std::int64_t> kSharpnessInstances[] = {
    {77, 3}, {38, 11}, {14, 3}, {35, 4}};

/// Sizes that force irreducibility of nonzero minimal monomial solutions:
///  - p^n != 2 when N is odd or p is odd;
///  - 2^n for N = 2^a * odd when n = 2 or n >= a; and 2^n (n >= 2) when 16 does not divide N;
///  - 6 when 3 does not divide N;
///  - 2p^n for an odd prime p prime to N;
///  - 4p^n for an odd prime p prime to N, N odd.
[[nodiscard]] inline TheoremReport verify_special_sizes(CellTable& table, NRange range) {
    detail::ReportBuilder rb("special-sizes", range.describe());
    range.for_each([&](std::int64_t n) {
        for (std::int64_t k = 1; k < n; ++k) {
            const CellRecord& c = table.cell(n, k);
            const std::int64_t s = c.size;
            const bool irr = c.verdict == Verdict::irreducible;
            auto expect = [&](const char* rule) {
                rb.check(irr, n, k, detail::describe(c), std::string("irreducible (") + rule + ")");
            };
            const auto odd_pp = hyp::odd_prime_power(s);
            const auto two_pow = hyp::two_exponent_if_power(s);
            if (n > 2 && odd_pp) expect("odd prime-power size");
            if (n > 2 && two_pow && *two_pow >= 2) {
                if (n % 2 == 1) expect("power-of-two size, N odd");
                if (n % 2 == 0 && (*two_pow == 2 || *two_pow >= hyp::two_adic(n)))
                    expect("power-of-two size 2^n, n = 2 or n >= v2(N)");
                if (n % 16 != 0) expect("power-of-two size, 16 does not divide N");
            }
            if (n % 3 != 0 && s == 6) expect("size 6, 3 does not divide N");
            if (s % 2 == 0) {
                const auto half = hyp::odd_prime_power(s / 2);
                if (half && n % half->prime != 0) expect("size 2p^n, p prime to N");
            }
            if (n % 2 == 1 && s % 4 == 0) {
                const auto quarter = hyp::odd_prime_power(s / 4);
                if (quarter && n % quarter->prime != 0) expect("size 4p^n, p prime to N, N odd");
            }
        }
        for (auto [sn, sk] : kSharpnessInstances) {
            if (sn != n) continue;
            const CellRecord& c = table.cell(sn, sk);
            rb.check(c.verdict == Verdict::reducible, sn, sk, detail::describe(c),
                     "reducible (outside the hypotheses)");
        }
    });
    return rb.finish();
}

/// N = 3m, m odd and prime to 3: sizes > N other than N + N/3 are reducible.
/// Size N + N/3 is left open and only recorded as a note.
[[nodiscard]] inline TheoremReport verify_three_m_bound(CellTable& table, NRange range) {
    detail::ReportBuilder rb("three-m-bound", range.describe());
    range.for_each([&](std::int64_t n) {
        if (!hyp::is_three_times_coprime_to_six(n)) return;
        const std::int64_t open_size = n + n / 3;
        for (std::int64_t k = 0; k < n; ++k) {
            const CellRecord& c = table.cell(n, k);
            if (c.size <= n) continue;
            if (c.size == open_size) {
                rb.note(n, k, std::string("size N + N/3: ") + to_string(c.verdict));
                continue;
            }
            rb.check(c.verdict == Verdict::reducible, n, k, detail::describe(c), "reducible");
        }
    });
    return rb.finish();
}

/// Identifiers accepted by run_verifier, in report order.
inline constexpr const char* kTheoremIds[] = {
    "size-bound",   "eight-divides",  "unbounded-family",        "odd-sizes",     "3h-criterion",
    "size-n",       "prime-power",    "reducible-constructions", "special-sizes", "three-m-bound"};

[[nodiscard]] inline bool is_theorem_id(std::string_view id) {
    return std::find(std::begin(kTheoremIds), std::end(kTheoremIds), id) != std::end(kTheoremIds);
}

/// Runs one verifier over the range. For unbounded-family the range selects
/// the primes p (odd, != 3) and N = 3p.
[[nodiscard]] inline TheoremReport run_verifier(std::string_view id, CellTable& table, NRange range) {
    if (id == "size-bound") return verify_size_bound(table, range);
    if (id == "eight-divides") return verify_eight_divides(table, range);
    if (id == "unbounded-family") {
        const auto primes = family_primes(range.min, range.max);
        return verify_unbounded_family(primes);
    }
    if (id == "odd-sizes") return verify_odd_sizes(table, range);
    if (id == "3h-criterion") return verify_3h_criterion(table, range);
    if (id == "size-n") return verify_size_n(table, range);
    if (id == "prime-power") return verify_prime_power_classification(table, range);
    if (id == "reducible-constructions") return verify_reducible_constructions(table, range);
    if (id == "special-sizes") return verify_special_sizes(table, range);
    if (id == "three-m-bound") return verify_three_m_bound(table, range);
    throw std::invalid_argument("unknown theorem id: " + std::string(id));
}

[[nodiscard]] inline std::vector<TheoremReport> verify_all(CellTable& table, NRange range) {
    std::vector<TheoremReport> out;
    for (const char* id : kTheoremIds) out.push_back(run_verifier(id, table, range));
    return out;
}

/// One record per (N, k), N ascending then k ascending.
template <typename Sink>
void survey(NRange range, Sink&& sink, const std::function<CellRecord(std::int64_t, std::int64_t)>&
                                           lookup = classify_cell) {
    range.for_each([&](std::int64_t n) {
        for (std::int64_t k = 0; k < n; ++k) sink(lookup(n, k));
    });
}

}  // namespace frieze_mod
