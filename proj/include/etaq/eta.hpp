#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "etaq/ntheory.hpp"
#include "etaq/series.hpp"

namespace etaq {

/// scalar * prod_{delta | N} eta(delta z)^{r_delta}, kept symbolic. The
/// q^{1/24} prefactors are accounted for by the leading exponent.
class EtaQuotient {
public:
    /// Keys must divide `level`; zero exponents are dropped.
    EtaQuotient(std::uint64_t level,
                std::map<std::uint64_t, std::int64_t> exponents,
                std::int64_t scalar = 1);

    std::uint64_t level() const { return level_; }
    const std::map<std::uint64_t, std::int64_t>& exponents() const {
        return exponents_;
    }
    std::int64_t scalar() const { return scalar_; }

    bool operator==(const EtaQuotient&) const = default;

private:
    std::uint64_t level_;
    std::map<std::uint64_t, std::int64_t> exponents_;
    std::int64_t scalar_;
};

/// Parses "N=135; 1:-3, 3:-1, 45:13, 135:3; scalar=1" (whitespace-
/// insensitive; the scalar section is optional and defaults to 1).
EtaQuotient parse_eta_quotient(std::string_view text);

/// Inverse of parse_eta_quotient.
std::string to_text(const EtaQuotient& e);

/// q-expansion of a form together with its modular metadata.
struct FormExpansion {
    Series series;
    mpq_class weight = 0;
    std::uint64_t level = 1;
    CharacterSpec character = CharacterSpec::trivial(1);

    bool operator==(const FormExpansion&) const = default;
};

/// (1/2) sum r_delta, exact (may be half-integral).
mpq_class eq_weight(const EtaQuotient& e);

/// The three admissibility conditions, evaluated exactly.
struct EtaConditionReport {
    mpq_class weight;
    std::int64_t sum_delta_r;       // sum delta * r_delta, must be 0 mod 24
    std::int64_t sum_codelta_r;     // sum (N/delta) * r_delta, must be 0 mod 24
    bool weight_integral = false;
    bool delta_sum_ok = false;
    bool codelta_sum_ok = false;

    bool pass() const { return weight_integral && delta_sum_ok && codelta_sum_ok; }
};

EtaConditionReport eq_check_conditions(const EtaQuotient& e);

/// Nebentypus character d -> ((-1)^k s | d) with s = prod delta^{r_delta},
/// reduced to the squarefree part; trivial when that part is 1.
/// Requires eq_check_conditions to pass.
CharacterSpec eq_character(const EtaQuotient& e);

/// Ligozat order at the cusp 1/d: (N/24) sum_delta gcd(d, delta)^2 r_delta /
/// (gcd(d, N/d) d delta). Requires d | N.
mpq_class eq_cusp_order(const EtaQuotient& e, std::uint64_t d);

struct CuspOrderTable {
    std::vector<std::pair<std::uint64_t, mpq_class>> orders; // (d, order)
    bool all_positive = false;
};

/// Orders at every cusp divisor d | N.
CuspOrderTable eq_cusp_orders(const EtaQuotient& e);

/// True iff every cusp order is strictly positive.
bool eq_is_cusp_form(const EtaQuotient& e);

/// (1/24) sum delta * r_delta; throws FractionalExponentError when the sum
/// is not divisible by 24.
std::int64_t eq_leading_exponent(const EtaQuotient& e);

/// scalar * q^lead * prod dense(euler_series(., delta))^{r_delta} truncated
/// at `trunc`, with (weight, level, character) metadata attached.
FormExpansion eq_expand(const EtaQuotient& e, std::size_t trunc, Modulus m);

struct EtaReduction {
    EtaQuotient quotient;
    bool reduced = false; // false: no matching pattern, input returned as is
};

/// Strips factors (eta^{l^s}(delta z) / eta^{l^{s-1}}(l delta z))^c, which
/// are congruent to 1 mod l^s, from the exponent map.
EtaReduction eq_reduce_mod(const EtaQuotient& e, std::uint32_t l,
                           std::uint32_t s);

} // namespace etaq
