#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "etaq/cphi.hpp"
#include "etaq/eta.hpp"

namespace etaq {

enum class Tier { Smoke, Full };

std::string tier_name(Tier t);
Tier tier_from_name(const std::string& name);

/// coefficient(step * n + offset) == 0 (mod modulus) for 0 <= n <= bound.
struct CongruenceClaim {
    Flavor flavor = Flavor::Cphi3;
    std::uint64_t step = 1;    // T
    std::uint64_t offset = 0;  // gamma, 0 <= gamma < T
    std::uint32_t modulus = 2; // M >= 1 (M = 1 verifies trivially)
    std::uint64_t bound = 0;   // last n scanned (inclusive)

    bool operator==(const CongruenceClaim&) const = default;
};

enum class VerifyStatus { VerifiedToBound, Counterexample };

struct Witness {
    std::uint64_t n = 0;     // progression index
    std::uint64_t index = 0; // series index step * n + offset
    mpz_class value;         // nonzero residue mod the claim modulus

    bool operator==(const Witness&) const = default;
};

struct VerificationReport {
    CongruenceClaim claim;
    VerifyStatus status = VerifyStatus::VerifiedToBound;
    std::optional<Witness> witness; // present iff status = Counterexample
    std::uint64_t checked_count = 0;
    /// Realized Ord_M data along the progression: the witness index when one
    /// exists, otherwise one past the largest index scanned (every smaller
    /// progression index has coefficient 0 mod M).
    std::uint64_t ord_lower_bound = 0;
    std::uint64_t truncation = 0; // truncation of the scanned table
    std::int64_t elapsed_ms = 0;

    bool verified() const { return status == VerifyStatus::VerifiedToBound; }
    /// Equality ignoring elapsed_ms (wall-clock time is not reproducible).
    bool same_outcome(const VerificationReport& other) const;

    bool operator==(const VerificationReport&) const = default;
};

/// Scans n = 0..claim.bound over the table; the needed indices must lie
/// below the table truncation, else TruncationError stating the requirement.
VerificationReport verify_progression(const Series& table,
                                      const CongruenceClaim& claim);
VerificationReport verify_progression(const CphiTable& table,
                                      const CongruenceClaim& claim);

struct CheckResult {
    std::string label;
    bool passed = false;
    std::string detail; // one-line human summary
    std::optional<VerificationReport> report;
};

struct ScriptReport {
    std::string script;
    Tier tier = Tier::Smoke;
    std::vector<CheckResult> checks;
    std::int64_t elapsed_ms = 0;

    bool verified() const;
};

/// Reduced eta-quotient expansion mod 625, the 9n filter scan, the a(n)
/// residue-class scans, and the reduced-vs-full cross-check.
ScriptReport verify_thm31(Tier tier = Tier::Smoke);

/// f mod 25 via the reduced quotient, F = f + twist(f, (.|3)), the U(25)
/// extraction scan, the direct cphi3/cphibar3 scans, and the c(75n),
/// c(75n+25) checks.
ScriptReport verify_thm12(Tier tier = Tier::Smoke);

/// The five base congruences: mod 5 at (45,23) and (45,41), mod 7 at
/// (63,50), mod 11 at (99,95), mod 19 at (171,50).
ScriptReport verify_base_congruences(std::uint64_t bound = 1000);

/// Expands E(q)^{l^s} * invert(E(q^l)^{l^{s-1}}) mod l^s to `trunc` terms
/// and checks it is the constant series 1.
VerificationReport verify_prop25(std::uint32_t l, std::uint32_t s,
                                 std::size_t trunc);

/// Both theorem scripts, the base congruences, and two Euler-power
/// congruence instances, bundled.
ScriptReport verify_all(Tier tier = Tier::Smoke);

struct SearchParams {
    Flavor flavor = Flavor::Cphi3;
    std::vector<std::uint64_t> steps; // progression steps T to try
    std::uint32_t modulus = 5;
    /// Offsets to scan; all gamma < T when absent.
    std::optional<std::vector<std::uint64_t>> offsets;
    std::uint64_t limit = 500; // n scanned 0..limit
};

struct SearchResult {
    SearchParams params;
    /// Progressions with no violation up to the limit. Bounded evidence
    /// only, never proofs.
    std::vector<CongruenceClaim> candidates;
    std::int64_t elapsed_ms = 0;
};

SearchResult search_congruences(const SearchParams& params);

/// Minimal n <= limit with coefficient(step n + offset) nonzero mod
/// `modulus`, as a Counterexample report, or VerifiedToBound when none.
VerificationReport find_counterexample(Flavor flavor, std::uint64_t step,
                                       std::uint64_t offset,
                                       std::uint32_t modulus,
                                       std::uint64_t limit);

} // namespace etaq
