#include "etaq/ntheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "etaq/series.hpp"

namespace etaq {
namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

int kronecker_two(std::int64_t a) {
    // (a|2) for odd a: +1 when a = +-1 mod 8, -1 when a = +-3 mod 8
    std::int64_t r = ((a % 8) + 8) % 8;
    return (r == 1 || r == 7) ? 1 : -1;
}

} // namespace

int kronecker_symbol(std::int64_t a, std::int64_t n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign; // (a|-1)
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        while (n % 2 == 0) {
            n /= 2;
            sign *= kronecker_two(a);
        }
    }
    // Jacobi symbol (a|n) for odd positive n.
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t r = n % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

std::int64_t squarefree_part(std::int64_t a) {
    if (a == 0) throw Error("squarefree part of zero is undefined");
    std::int64_t sign = a < 0 ? -1 : 1;
    std::uint64_t v = static_cast<std::uint64_t>(a < 0 ? -a : a);
    std::int64_t out = 1;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        if (v % p) continue;
        unsigned e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e % 2) out *= static_cast<std::int64_t>(p);
    }
    out *= static_cast<std::int64_t>(v); // leftover prime
    return sign * out;
}

CharacterSpec CharacterSpec::trivial(std::uint64_t conductor) {
    if (conductor == 0) throw Error("conductor must be positive");
    return CharacterSpec(Kind::Trivial, 0, 0, conductor);
}

CharacterSpec CharacterSpec::kronecker(std::int64_t a) {
    if (a == 0) throw Error("kronecker top entry must be nonzero");
    std::int64_t sf = squarefree_part(a);
    std::uint64_t abs_sf = static_cast<std::uint64_t>(sf < 0 ? -sf : sf);
    // conductor of (sf|.): |sf| when sf = 1 mod 4, else 4|sf|
    std::uint64_t cond =
        (((sf % 4) + 4) % 4 == 1) ? abs_sf : 4 * abs_sf;
    return CharacterSpec(Kind::Kronecker, a, sf, cond);
}

CharacterSpec CharacterSpec::legendre(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw Error("legendre character requires an odd prime");
    return CharacterSpec(Kind::Legendre, 0, 0, p);
}

int character_eval(const CharacterSpec& chi, std::int64_t n) {
    switch (chi.kind()) {
    case CharacterSpec::Kind::Trivial: {
        std::uint64_t an = static_cast<std::uint64_t>(n < 0 ? -n : n);
        return std::gcd(an, chi.conductor()) == 1 ? 1 : 0;
    }
    case CharacterSpec::Kind::Legendre:
        return kronecker_symbol(n, static_cast<std::int64_t>(chi.conductor()));
    case CharacterSpec::Kind::Kronecker: {
        // evaluate through the fundamental discriminant so the result is a
        // genuine character mod the stored conductor, whatever top was given
        std::int64_t sf = chi.squarefree_top();
        std::int64_t d = ((sf % 4) + 4) % 4 == 1 ? sf : 4 * sf;
        return kronecker_symbol(d, n);
    }
    }
    return 0; // unreachable
}

std::uint64_t gamma0_index(std::uint64_t level) {
    if (level == 0) throw Error("level must be positive");
    std::uint64_t idx = level;
    std::uint64_t v = level;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        if (v % p) continue;
        while (v % p == 0) v /= p;
        idx = idx / p * (p + 1);
    }
    if (v > 1) idx = idx / v * (v + 1);
    return idx;
}

std::uint64_t sturm_bound(std::uint64_t weight, std::uint64_t level) {
    if (weight == 0) throw Error("weight must be positive");
    std::uint64_t prod = weight * gamma0_index(level);
    return 1 + (prod + 11) / 12; // 1 + ceil(prod / 12)
}

std::vector<mpz_class> partition_table(std::size_t count) {
    std::vector<mpz_class> p(count);
    if (count == 0) return p;
    p[0] = 1;
    auto terms = euler_series(count).terms(); // (exponent, +-1), exponent 0 first
    for (std::size_t n = 1; n < count; ++n) {
        mpz_class acc;
        for (std::size_t i = 1; i < terms.size(); ++i) {
            const auto& t = terms[i];
            if (t.exponent > n) break;
            if (t.coefficient > 0)
                acc -= p[n - t.exponent];
            else
                acc += p[n - t.exponent];
        }
        p[n] = acc;
    }
    return p;
}

std::vector<std::uint32_t> partition_table_mod(std::size_t count,
                                               std::uint32_t m) {
    if (m < 2) throw Error("modulus must be at least 2");
    std::vector<std::uint32_t> p(count);
    if (count == 0) return p;
    p[0] = 1 % m;
    auto terms = euler_series(count).terms();
    for (std::size_t n = 1; n < count; ++n) {
        std::uint64_t acc = 0; // sum of values < m, at most ~sqrt(n) of them
        for (std::size_t i = 1; i < terms.size(); ++i) {
            const auto& t = terms[i];
            if (t.exponent > n) break;
            std::uint32_t v = p[n - t.exponent];
            acc += t.coefficient > 0 ? (v ? m - v : 0) : v;
        }
        p[n] = static_cast<std::uint32_t>(acc % m);
    }
    return p;
}

mpz_class partition_p(std::int64_t n) {
    if (n < 0) return 0;
    return partition_table(static_cast<std::size_t>(n) + 1).back();
}

mpz_class partition_p(const mpq_class& x) {
    mpq_class c = x;
    c.canonicalize();
    if (c.get_den() != 1) return 0;
    mpz_class num = c.get_num();
    if (sgn(num) < 0) return 0;
    if (!num.fits_slong_p()) throw Error("partition argument too large");
    return partition_p(static_cast<std::int64_t>(num.get_si()));
}

std::uint64_t enumerate_frobenius3(std::uint64_t n) {
    if (n > 25) throw Error("enumeration guarded to n <= 25");
    // A[k][s]: k-element sets of colored nonnegative integers with value sum
    // s, colors 1..3, entries pairwise distinct as (value, color) pairs.
    std::size_t kmax = n + 3, smax = n;
    std::vector<std::vector<std::uint64_t>> A(
        kmax + 1, std::vector<std::uint64_t>(smax + 1, 0));
    A[0][0] = 1;
    for (std::uint64_t v = 0; v <= n; ++v) {
        for (int color = 0; color < 3; ++color) {
            for (std::size_t k = kmax; k >= 1; --k)
                for (std::size_t s = smax; s + 1 >= v + 1; --s)
                    A[k][s] += A[k - 1][s - v];
        }
    }
    std::uint64_t total = 0;
    for (std::size_t k = 0; k <= kmax && k <= n; ++k) {
        if (n < k) break;
        std::uint64_t budget = n - k;
        for (std::uint64_t s1 = 0; s1 <= budget; ++s1)
            total += A[k][s1] * A[k][budget - s1];
    }
    return total;
}

} // namespace etaq
