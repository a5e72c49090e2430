#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "etaq/errors.hpp"

namespace etaq {

/// Coefficient ring selector: Z/M for a fixed word-size modulus M >= 2, or
/// exact (arbitrary-precision) integers.
class Modulus {
public:
    static Modulus exact() { return Modulus(0); }
    static Modulus mod(std::uint32_t m);

    bool is_exact() const { return m_ == 0; }
    std::uint32_t value() const;

    bool operator==(const Modulus&) const = default;

private:
    explicit Modulus(std::uint32_t m) : m_(m) {}
    std::uint32_t m_;
};

/// One term of a sparse q-expansion.
struct SparseTerm {
    std::uint64_t exponent;
    std::int64_t coefficient;

    bool operator==(const SparseTerm&) const = default;
};

/// Sparse series: strictly increasing exponents, no zero coefficients.
class SparseSeries {
public:
    SparseSeries() = default;
    explicit SparseSeries(std::vector<SparseTerm> terms);

    const std::vector<SparseTerm>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const SparseSeries&) const = default;

private:
    std::vector<SparseTerm> terms_;
};

/// Pentagonal-number expansion of prod_{n>=1} (1 - q^{t n}):
/// sum_{k in Z} (-1)^k q^{t k(3k-1)/2}, truncated below `trunc`.
SparseSeries euler_series(std::uint64_t trunc, std::uint64_t dilation = 1);

/// Cube identity prod_{n>=1} (1 - q^{t n})^3 =
/// sum_{k>=0} (-1)^k (2k+1) q^{t k(k+1)/2}, truncated below `trunc`.
SparseSeries jacobi_cube_series(std::uint64_t trunc, std::uint64_t dilation = 1);

enum class MulAlgorithm { Schoolbook, Fast, Auto };

/// Truncated formal power series in q. Coefficients of q^n for n >= truncation
/// are unknown (not zero). Modular coefficients are stored reduced to [0, M).
/// Immutable after construction.
class Series {
public:
    /// Empty exact series (truncation 0).
    Series() : mod_(Modulus::exact()) {}

    static Series zero(std::size_t trunc, Modulus m);
    static Series one(std::size_t trunc, Modulus m);
    /// c * q^e, truncated at `trunc` (e >= trunc yields the zero series).
    static Series monomial(std::size_t trunc, std::size_t exponent,
                           std::int64_t coefficient, Modulus m);
    static Series from_ints(std::span<const std::int64_t> coeffs, Modulus m);
    static Series from_exact(std::vector<mpz_class> coeffs);
    /// Modular fast path; every value must already lie in [0, M).
    static Series from_residues(std::vector<std::uint32_t> residues, Modulus m);

    Modulus modulus() const { return mod_; }
    std::size_t truncation() const {
        return mod_.is_exact() ? ints_.size() : res_.size();
    }
    bool is_empty() const { return truncation() == 0; }

    std::uint32_t residue_at(std::size_t n) const { return res_[n]; }
    std::span<const std::uint32_t> residues() const { return res_; }
    const mpz_class& integer_at(std::size_t n) const { return ints_[n]; }
    std::span<const mpz_class> integers() const { return ints_; }

    /// Coefficient as an integer in either mode (the reduced representative
    /// when modular).
    mpz_class coefficient(std::size_t n) const;

    /// True when every known coefficient is zero.
    bool is_zero() const;
    /// Number of nonzero stored coefficients.
    std::size_t nonzero_count() const;

    bool operator==(const Series&) const = default;

private:
    Modulus mod_;
    std::vector<std::uint32_t> res_;  // modular storage
    std::vector<mpz_class> ints_;     // exact storage

    friend Series densify(const SparseSeries&, std::size_t, Modulus);
};

// Ring operations. Result truncation = min of input truncations unless noted.

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b,
           MulAlgorithm algorithm = MulAlgorithm::Auto);
/// Binary powering; e = 0 gives the constant series 1 at a's truncation.
Series pow(const Series& a, std::uint64_t e);
/// Multiplicative inverse up to truncation; requires a unit constant term.
Series invert(const Series& a);
/// Substitution q -> q^t; truncation becomes t * truncation.
Series dilate(const Series& a, std::uint64_t t);
/// Multiplication by q^s; truncation becomes truncation + s.
Series shift(const Series& a, std::uint64_t s);
/// Restriction to the first n coefficients (n <= truncation).
Series truncate(const Series& a, std::size_t n);
Series scale(const Series& a, std::int64_t c);
Series scale(const Series& a, const mpz_class& c);

Series densify(const SparseSeries& s, std::size_t trunc, Modulus m);
/// Dense x sparse product, O(trunc * terms).
Series mul_sparse(const Series& a, const SparseSeries& s);
/// Solves s * x = a for x, O(trunc * terms); the sparse constant term must be
/// a unit.
Series div_sparse(const Series& a, const SparseSeries& s);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

} // namespace etaq
