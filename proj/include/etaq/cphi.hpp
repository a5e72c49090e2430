#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "etaq/series.hpp"

namespace etaq {

/// Which coefficient family a table or claim refers to. Raw denotes a bare
/// series (eta-quotient expansion or operator output) rather than a table.
enum class Flavor { Cphi3, Cphibar3, ASeries, Raw };

std::string flavor_name(Flavor f);
Flavor flavor_from_name(const std::string& name);

/// values(n) for n < truncation, in the ring selected at construction.
struct CphiTable {
    Flavor flavor = Flavor::Cphi3;
    Series series;

    std::size_t truncation() const { return series.truncation(); }
};

/// cphibar3(n): coefficients of 9q prod (1-q^{9n})^3 /
/// ((1-q^{3n})(1-q^n)^3).
CphiTable cphibar3_series(std::size_t trunc, Modulus m);

/// cphi3(n) = cphibar3(n) + p(n/3), p(alpha) = 0 for non-integral alpha.
CphiTable cphi3_series(std::size_t trunc, Modulus m);

/// a(n): coefficients of prod 1 / ((1-q^{3n})(1-q^n)^3).
CphiTable a_series(std::size_t trunc, Modulus m);

struct DecompositionReport {
    bool holds = false;
    std::uint64_t checked = 0;
    std::optional<std::uint64_t> failure_index;
};

/// Checks cphibar3(n) = 9 sum_{k>=0} (-1)^k (2k+1) a(n - 1 - 9k(k+1)/2)
/// for all n < bound (the Jacobi cube identity applied at q^9).
DecompositionReport jacobi_decomposition_check(std::size_t bound, Modulus m);

struct ResidueLemma {
    std::set<std::uint64_t> offsets;        // (1 + 9k(k+1)/2) mod 45
    std::set<std::uint64_t> target_classes; // {23, 41} - offsets, mod 45
};

/// The residue bookkeeping behind the class list {13, 22, 31, 40} mod 45:
/// offsets must equal {1, 10, 28}.
ResidueLemma residue_lemma();

} // namespace etaq
