#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "etaq/errors.hpp"

namespace etaq {

/// Kronecker symbol (a|n), full extension: n may be 0, negative, or even.
/// (a|0) = 1 iff a = +-1; (a|2) = 0 for even a, +1 for a = +-1 mod 8,
/// -1 for a = +-3 mod 8; (a|-1) = -1 iff a < 0.
int kronecker_symbol(std::int64_t a, std::int64_t n);

/// a with its largest square divisor removed; sign preserved. a must be
/// nonzero.
std::int64_t squarefree_part(std::int64_t a);

/// A real Dirichlet character: trivial modulo a conductor, a Legendre symbol
/// (n|p), or a Kronecker symbol (a|n) with fixed top entry a.
class CharacterSpec {
public:
    enum class Kind { Trivial, Kronecker, Legendre };

    static CharacterSpec trivial(std::uint64_t conductor);
    /// Character d -> (a|d); a nonzero, recorded with its squarefree part.
    static CharacterSpec kronecker(std::int64_t a);
    /// Character n -> (n|p) for an odd prime p.
    static CharacterSpec legendre(std::uint64_t p);

    Kind kind() const { return kind_; }
    std::int64_t top() const { return top_; }
    std::int64_t squarefree_top() const { return squarefree_top_; }
    std::uint64_t conductor() const { return conductor_; }
    bool is_trivial() const { return kind_ == Kind::Trivial; }

    bool operator==(const CharacterSpec&) const = default;

private:
    CharacterSpec(Kind k, std::int64_t top, std::int64_t sf, std::uint64_t c)
        : kind_(k), top_(top), squarefree_top_(sf), conductor_(c) {}

    Kind kind_;
    std::int64_t top_;
    std::int64_t squarefree_top_;
    std::uint64_t conductor_;
};

/// chi(n): trivial -> [gcd(n, conductor) = 1]; legendre p -> (n|p);
/// kronecker a -> (a|n).
int character_eval(const CharacterSpec& chi, std::int64_t n);

/// [SL2(Z) : Gamma_0(N)] = N * prod_{p | N} (1 + 1/p).
std::uint64_t gamma0_index(std::uint64_t level);

/// 1 + ceil(k * gamma0_index(N) / 12).
std::uint64_t sturm_bound(std::uint64_t weight, std::uint64_t level);

/// p(n) by the pentagonal recurrence; 0 for n < 0.
mpz_class partition_p(std::int64_t n);
/// p(x) with the convention p(alpha) = 0 for non-integral alpha.
mpz_class partition_p(const mpq_class& x);
/// [p(0), ..., p(count-1)].
std::vector<mpz_class> partition_table(std::size_t count);
/// Same table reduced mod m.
std::vector<std::uint32_t> partition_table_mod(std::size_t count,
                                               std::uint32_t m);

/// Brute-force count of three-colored Frobenius partitions of n: pairs (T, B)
/// of equal-size sets of colored nonnegative integers (colors 1..3) with
/// sum(T) + sum(B) + |T| = n. Guarded to n <= 25.
std::uint64_t enumerate_frobenius3(std::uint64_t n);

} // namespace etaq
