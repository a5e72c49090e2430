#include "etaq/series.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>

#include "bigmul.hpp"
#include "ntt.hpp"

namespace etaq {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Below this size schoolbook beats the transform-based paths.
constexpr std::size_t kSchoolbookCutoff = 32;

u32 reduce_i64(std::int64_t v, u32 m) {
    std::int64_t r = v % static_cast<std::int64_t>(m);
    if (r < 0) r += m;
    return static_cast<u32>(r);
}

u32 reduce_mpz(const mpz_class& v, u32 m) {
    return static_cast<u32>(mpz_fdiv_ui(v.get_mpz_t(), m));
}

// Inverse of a mod m; throws when gcd(a, m) != 1.
u32 mod_inverse(u32 a, u32 m) {
    std::int64_t old_r = a % m, r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw NonInvertibleError("constant term " + std::to_string(a) +
                                 " is not a unit modulo " + std::to_string(m));
    old_s %= static_cast<std::int64_t>(m);
    if (old_s < 0) old_s += m;
    return static_cast<u32>(old_s);
}

// True when a sum of `count` products of residues below m fits in 64 bits.
bool fits_u64(std::size_t count, u32 m) {
    if (count == 0) return true;
    u128 bound = static_cast<u128>(m - 1) * (m - 1) * count;
    return bound <= static_cast<u128>(UINT64_MAX);
}

template <class Acc>
std::vector<u32> schoolbook_mod_acc(std::span<const u32> a,
                                    std::span<const u32> b, std::size_t nc,
                                    u32 m) {
    std::vector<Acc> acc(nc, 0);
    for (std::size_t i = 0; i < a.size() && i < nc; ++i) {
        u64 ai = a[i];
        if (!ai) continue;
        std::size_t jmax = std::min(b.size(), nc - i);
        for (std::size_t j = 0; j < jmax; ++j)
            acc[i + j] += static_cast<Acc>(ai * b[j]);
    }
    std::vector<u32> c(nc);
    for (std::size_t k = 0; k < nc; ++k)
        c[k] = static_cast<u32>(acc[k] % m);
    return c;
}

std::vector<u32> schoolbook_mod(std::span<const u32> a, std::span<const u32> b,
                                std::size_t out_len, u32 m) {
    std::size_t na = std::min(a.size(), out_len);
    std::size_t nb = std::min(b.size(), out_len);
    std::size_t nc = std::min(out_len, na + nb - 1);
    a = a.first(na);
    b = b.first(nb);
    if (fits_u64(std::min(na, nb), m))
        return schoolbook_mod_acc<u64>(a, b, nc, m);
    return schoolbook_mod_acc<u128>(a, b, nc, m);
}

std::vector<u32> conv_mod(std::span<const u32> a, std::span<const u32> b,
                          std::size_t out_len, u32 m, MulAlgorithm alg) {
    std::size_t na = std::min(a.size(), out_len);
    std::size_t nb = std::min(b.size(), out_len);
    a = a.first(na);
    b = b.first(nb);
    if (alg == MulAlgorithm::Auto) {
        bool small = std::min(na, nb) <= kSchoolbookCutoff;
        alg = (!small && detail::convolve_mod_supported(na, nb, m))
                  ? MulAlgorithm::Fast
                  : MulAlgorithm::Schoolbook;
    }
    if (alg == MulAlgorithm::Fast) return detail::convolve_mod(a, b, m, out_len);
    return schoolbook_mod(a, b, out_len, m);
}

std::vector<mpz_class> schoolbook_exact(std::span<const mpz_class> a,
                                        std::span<const mpz_class> b,
                                        std::size_t out_len) {
    std::size_t na = std::min(a.size(), out_len);
    std::size_t nb = std::min(b.size(), out_len);
    std::size_t nc = std::min(out_len, na + nb - 1);
    std::vector<mpz_class> c(nc);
    for (std::size_t i = 0; i < na; ++i) {
        if (sgn(a[i]) == 0) continue;
        std::size_t jmax = std::min(nb, nc - i);
        for (std::size_t j = 0; j < jmax; ++j)
            mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(),
                       b[j].get_mpz_t());
    }
    return c;
}

std::vector<mpz_class> conv_exact(std::span<const mpz_class> a,
                                  std::span<const mpz_class> b,
                                  std::size_t out_len, MulAlgorithm alg) {
    std::size_t na = std::min(a.size(), out_len);
    std::size_t nb = std::min(b.size(), out_len);
    a = a.first(na);
    b = b.first(nb);
    if (alg == MulAlgorithm::Auto)
        alg = std::min(na, nb) <= kSchoolbookCutoff ? MulAlgorithm::Schoolbook
                                                    : MulAlgorithm::Fast;
    if (alg == MulAlgorithm::Fast) return detail::convolve_exact(a, b, out_len);
    return schoolbook_exact(a, b, out_len);
}

void require_same_modulus(const Series& a, const Series& b) {
    if (!(a.modulus() == b.modulus()))
        throw ModulusMismatch("operands use different coefficient rings");
}

} // namespace

Modulus Modulus::mod(u32 m) {
    if (m < 2) throw Error("modulus must be at least 2");
    return Modulus(m);
}

std::uint32_t Modulus::value() const {
    if (is_exact()) throw Error("exact ring has no modulus value");
    return m_;
}

SparseSeries::SparseSeries(std::vector<SparseTerm> terms)
    : terms_(std::move(terms)) {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coefficient == 0)
            throw Error("sparse series may not store zero coefficients");
        if (i > 0 && terms_[i - 1].exponent >= terms_[i].exponent)
            throw Error("sparse series exponents must strictly increase");
    }
}

SparseSeries euler_series(std::uint64_t trunc, std::uint64_t dilation) {
    if (dilation == 0) throw Error("dilation factor must be positive");
    std::vector<SparseTerm> terms;
    if (trunc > 0) terms.push_back({0, 1});
    for (std::uint64_t k = 1;; ++k) {
        std::uint64_t g1 = k * (3 * k - 1) / 2; // k(3k-1)/2
        std::uint64_t g2 = k * (3 * k + 1) / 2; // (-k)(3(-k)-1)/2
        std::int64_t c = (k % 2 == 0) ? 1 : -1;
        if (g1 * dilation >= trunc) break;
        terms.push_back({g1 * dilation, c});
        if (g2 * dilation >= trunc) break;
        terms.push_back({g2 * dilation, c});
    }
    return SparseSeries(std::move(terms));
}

SparseSeries jacobi_cube_series(std::uint64_t trunc, std::uint64_t dilation) {
    if (dilation == 0) throw Error("dilation factor must be positive");
    std::vector<SparseTerm> terms;
    for (std::uint64_t k = 0;; ++k) {
        std::uint64_t t = k * (k + 1) / 2;
        if (t * dilation >= trunc) break;
        std::int64_t c = static_cast<std::int64_t>(2 * k + 1);
        terms.push_back({t * dilation, (k % 2 == 0) ? c : -c});
    }
    return SparseSeries(std::move(terms));
}

Series Series::zero(std::size_t trunc, Modulus m) {
    Series s;
    s.mod_ = m;
    if (m.is_exact())
        s.ints_.assign(trunc, mpz_class(0));
    else
        s.res_.assign(trunc, 0);
    return s;
}

Series Series::one(std::size_t trunc, Modulus m) {
    return monomial(trunc, 0, 1, m);
}

Series Series::monomial(std::size_t trunc, std::size_t exponent,
                        std::int64_t coefficient, Modulus m) {
    Series s = zero(trunc, m);
    if (exponent < trunc) {
        if (m.is_exact())
            s.ints_[exponent] = coefficient;
        else
            s.res_[exponent] = reduce_i64(coefficient, m.value());
    }
    return s;
}

Series Series::from_ints(std::span<const std::int64_t> coeffs, Modulus m) {
    Series s;
    s.mod_ = m;
    if (m.is_exact()) {
        s.ints_.reserve(coeffs.size());
        for (auto v : coeffs) s.ints_.emplace_back(v);
    } else {
        s.res_.reserve(coeffs.size());
        for (auto v : coeffs) s.res_.push_back(reduce_i64(v, m.value()));
    }
    return s;
}

Series Series::from_exact(std::vector<mpz_class> coeffs) {
    Series s;
    s.mod_ = Modulus::exact();
    s.ints_ = std::move(coeffs);
    return s;
}

Series Series::from_residues(std::vector<std::uint32_t> residues, Modulus m) {
    if (m.is_exact())
        throw Error("from_residues requires a modular coefficient ring");
    for (u32 v : residues)
        if (v >= m.value())
            throw Error("residues must be reduced to [0, modulus)");
    Series s;
    s.mod_ = m;
    s.res_ = std::move(residues);
    return s;
}

mpz_class Series::coefficient(std::size_t n) const {
    if (n >= truncation())
        throw TruncationError("coefficient index " + std::to_string(n) +
                              " is at or beyond truncation " +
                              std::to_string(truncation()));
    if (mod_.is_exact()) return ints_[n];
    return mpz_class(res_[n]);
}

bool Series::is_zero() const {
    if (mod_.is_exact())
        return std::all_of(ints_.begin(), ints_.end(),
                           [](const mpz_class& v) { return sgn(v) == 0; });
    return std::all_of(res_.begin(), res_.end(), [](u32 v) { return v == 0; });
}

std::size_t Series::nonzero_count() const {
    if (mod_.is_exact())
        return static_cast<std::size_t>(
            std::count_if(ints_.begin(), ints_.end(),
                          [](const mpz_class& v) { return sgn(v) != 0; }));
    return static_cast<std::size_t>(
        std::count_if(res_.begin(), res_.end(), [](u32 v) { return v != 0; }));
}

Series add(const Series& a, const Series& b) {
    require_same_modulus(a, b);
    std::size_t n = std::min(a.truncation(), b.truncation());
    if (a.modulus().is_exact()) {
        std::vector<mpz_class> c(n);
        for (std::size_t i = 0; i < n; ++i)
            c[i] = a.integer_at(i) + b.integer_at(i);
        return Series::from_exact(std::move(c));
    }
    u32 m = a.modulus().value();
    std::vector<u32> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        u32 s = a.residue_at(i) + b.residue_at(i);
        c[i] = s >= m ? s - m : s;
    }
    return Series::from_residues(std::move(c), a.modulus());
}

Series sub(const Series& a, const Series& b) {
    require_same_modulus(a, b);
    std::size_t n = std::min(a.truncation(), b.truncation());
    if (a.modulus().is_exact()) {
        std::vector<mpz_class> c(n);
        for (std::size_t i = 0; i < n; ++i)
            c[i] = a.integer_at(i) - b.integer_at(i);
        return Series::from_exact(std::move(c));
    }
    u32 m = a.modulus().value();
    std::vector<u32> c(n);
    for (std::size_t i = 0; i < n; ++i) {
        u32 x = a.residue_at(i), y = b.residue_at(i);
        c[i] = x >= y ? x - y : x + m - y;
    }
    return Series::from_residues(std::move(c), a.modulus());
}

Series mul(const Series& a, const Series& b, MulAlgorithm algorithm) {
    require_same_modulus(a, b);
    std::size_t n = std::min(a.truncation(), b.truncation());
    if (n == 0) return Series::zero(0, a.modulus());
    if (a.modulus().is_exact()) {
        auto c = conv_exact(a.integers(), b.integers(), n, algorithm);
        c.resize(n);
        return Series::from_exact(std::move(c));
    }
    u32 m = a.modulus().value();
    auto c = conv_mod(a.residues(), b.residues(), n, m, algorithm);
    c.resize(n, 0);
    return Series::from_residues(std::move(c), a.modulus());
}

Series pow(const Series& a, std::uint64_t e) {
    Series result = Series::one(a.truncation(), a.modulus());
    if (e == 0 || a.is_empty()) return e == 0 ? result : a;
    Series base = a;
    while (true) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e == 0) break;
        base = mul(base, base);
    }
    return result;
}

namespace {

// x[n] = -1/c0 * sum_{e >= 1} c_e x[n-e] style linear recurrences, modular.
struct SparseTermsMod {
    std::vector<std::pair<std::size_t, u32>> tail; // exponent >= 1
    u32 c0 = 0;
};

SparseTermsMod extract_sparse_mod(std::span<const u32> coeffs) {
    SparseTermsMod s;
    if (!coeffs.empty()) s.c0 = coeffs[0];
    for (std::size_t e = 1; e < coeffs.size(); ++e)
        if (coeffs[e]) s.tail.emplace_back(e, coeffs[e]);
    return s;
}

template <class Acc>
std::vector<u32> solve_recurrence_mod(std::span<const u32> rhs,
                                      const SparseTermsMod& s, u32 m,
                                      std::size_t n, u32 c0inv) {
    std::vector<u32> x(n);
    for (std::size_t k = 0; k < n; ++k) {
        Acc acc = 0;
        for (const auto& [e, c] : s.tail) {
            if (e > k) break;
            acc += static_cast<Acc>(static_cast<u64>(c) * x[k - e]);
        }
        u32 t = static_cast<u32>(acc % m);
        u32 r = k < rhs.size() ? rhs[k] : 0;
        u32 num = r >= t ? r - t : r + m - t;
        x[k] = static_cast<u32>(static_cast<u64>(num) * c0inv % m);
    }
    return x;
}

std::vector<u32> divide_sparse_mod(std::span<const u32> rhs,
                                   const SparseTermsMod& s, u32 m,
                                   std::size_t n) {
    u32 c0inv = mod_inverse(s.c0 % m, m);
    if (fits_u64(s.tail.size(), m))
        return solve_recurrence_mod<u64>(rhs, s, m, n, c0inv);
    return solve_recurrence_mod<u128>(rhs, s, m, n, c0inv);
}

struct SparseTermsExact {
    std::vector<std::pair<std::size_t, mpz_class>> tail;
    mpz_class c0;
};

SparseTermsExact extract_sparse_exact(std::span<const mpz_class> coeffs) {
    SparseTermsExact s;
    if (!coeffs.empty()) s.c0 = coeffs[0];
    for (std::size_t e = 1; e < coeffs.size(); ++e)
        if (sgn(coeffs[e]) != 0) s.tail.emplace_back(e, coeffs[e]);
    return s;
}

std::vector<mpz_class> divide_sparse_exact(std::span<const mpz_class> rhs,
                                           const SparseTermsExact& s,
                                           std::size_t n) {
    if (!(s.c0 == 1 || s.c0 == -1))
        throw NonInvertibleError(
            "exact division requires a constant term of 1 or -1");
    bool negate = s.c0 == -1;
    std::vector<mpz_class> x(n);
    mpz_class acc;
    for (std::size_t k = 0; k < n; ++k) {
        acc = k < rhs.size() ? rhs[k] : mpz_class(0);
        for (const auto& [e, c] : s.tail) {
            if (e > k) break;
            mpz_submul(acc.get_mpz_t(), c.get_mpz_t(), x[k - e].get_mpz_t());
        }
        x[k] = negate ? mpz_class(-acc) : acc;
    }
    return x;
}

std::size_t recurrence_threshold(std::size_t n) {
    auto root = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    return std::max<std::size_t>(64, 3 * root);
}

std::vector<u32> newton_invert_mod(std::span<const u32> a, std::size_t n,
                                   u32 m) {
    std::vector<u32> x{mod_inverse(a[0], m)};
    std::size_t len = 1;
    while (len < n) {
        std::size_t next = std::min(2 * len, n);
        // e = a * x - 1 vanishes below len; refine x -= x * e.
        auto t = conv_mod(a.first(std::min(a.size(), next)), x, next, m,
                          MulAlgorithm::Auto);
        t.resize(next, 0);
        t[0] = (t[0] + m - 1) % m; // subtract the 1
        std::span<const u32> e(t.data() + len, next - len);
        auto d = conv_mod(x, e, next - len, m, MulAlgorithm::Auto);
        d.resize(next - len, 0);
        x.resize(next, 0);
        for (std::size_t i = 0; i < next - len; ++i)
            x[len + i] = d[i] ? m - d[i] : 0;
        len = next;
    }
    return x;
}

std::vector<mpz_class> newton_invert_exact(std::span<const mpz_class> a,
                                           std::size_t n) {
    if (!(a[0] == 1 || a[0] == -1))
        throw NonInvertibleError(
            "exact inversion requires a constant term of 1 or -1");
    std::vector<mpz_class> x{a[0]};
    std::size_t len = 1;
    while (len < n) {
        std::size_t next = std::min(2 * len, n);
        auto t = conv_exact(a.first(std::min(a.size(), next)), x, next,
                            MulAlgorithm::Auto);
        t.resize(next);
        t[0] -= 1;
        std::span<const mpz_class> e(t.data() + len, next - len);
        auto d = conv_exact(x, e, next - len, MulAlgorithm::Auto);
        d.resize(next - len);
        x.resize(next);
        for (std::size_t i = 0; i < next - len; ++i) x[len + i] = -d[i];
        len = next;
    }
    return x;
}

} // namespace

Series invert(const Series& a) {
    std::size_t n = a.truncation();
    if (n == 0) return Series::zero(0, a.modulus());
    if (a.modulus().is_exact()) {
        std::span<const mpz_class> coeffs = a.integers();
        if (sgn(coeffs[0]) == 0)
            throw NonInvertibleError("series has zero constant term");
        std::vector<mpz_class> x;
        if (a.nonzero_count() <= recurrence_threshold(n)) {
            auto s = extract_sparse_exact(coeffs);
            std::vector<mpz_class> one_rhs{mpz_class(1)};
            x = divide_sparse_exact(one_rhs, s, n);
        } else {
            x = newton_invert_exact(coeffs, n);
        }
        return Series::from_exact(std::move(x));
    }
    u32 m = a.modulus().value();
    std::span<const u32> coeffs = a.residues();
    if (coeffs[0] == 0)
        throw NonInvertibleError("series has zero constant term");
    std::vector<u32> x;
    if (a.nonzero_count() <= recurrence_threshold(n)) {
        auto s = extract_sparse_mod(coeffs);
        std::vector<u32> one_rhs{1u % m};
        x = divide_sparse_mod(one_rhs, s, m, n);
    } else {
        x = newton_invert_mod(coeffs, n, m);
    }
    return Series::from_residues(std::move(x), a.modulus());
}

Series dilate(const Series& a, std::uint64_t t) {
    if (t == 0) throw Error("dilation factor must be positive");
    std::size_t n = a.truncation() * t;
    if (a.modulus().is_exact()) {
        std::vector<mpz_class> c(n);
        for (std::size_t i = 0; i < a.truncation(); ++i)
            c[i * t] = a.integer_at(i);
        return Series::from_exact(std::move(c));
    }
    std::vector<u32> c(n, 0);
    for (std::size_t i = 0; i < a.truncation(); ++i)
        c[i * t] = a.residue_at(i);
    return Series::from_residues(std::move(c), a.modulus());
}

Series shift(const Series& a, std::uint64_t s) {
    std::size_t n = a.truncation() + s;
    if (a.modulus().is_exact()) {
        std::vector<mpz_class> c(n);
        for (std::size_t i = 0; i < a.truncation(); ++i)
            c[i + s] = a.integer_at(i);
        return Series::from_exact(std::move(c));
    }
    std::vector<u32> c(n, 0);
    for (std::size_t i = 0; i < a.truncation(); ++i) c[i + s] = a.residue_at(i);
    return Series::from_residues(std::move(c), a.modulus());
}

Series truncate(const Series& a, std::size_t n) {
    if (n > a.truncation())
        throw TruncationError("cannot extend truncation from " +
                              std::to_string(a.truncation()) + " to " +
                              std::to_string(n));
    if (a.modulus().is_exact()) {
        std::vector<mpz_class> c(a.integers().begin(),
                                 a.integers().begin() + n);
        return Series::from_exact(std::move(c));
    }
    std::vector<u32> c(a.residues().begin(), a.residues().begin() + n);
    return Series::from_residues(std::move(c), a.modulus());
}

Series scale(const Series& a, std::int64_t c) {
    if (a.modulus().is_exact()) return scale(a, mpz_class(c));
    u32 m = a.modulus().value();
    u64 cr = reduce_i64(c, m);
    std::vector<u32> out(a.truncation());
    for (std::size_t i = 0; i < a.truncation(); ++i)
        out[i] = static_cast<u32>(cr * a.residue_at(i) % m);
    return Series::from_residues(std::move(out), a.modulus());
}

Series scale(const Series& a, const mpz_class& c) {
    if (a.modulus().is_exact()) {
        std::vector<mpz_class> out(a.truncation());
        for (std::size_t i = 0; i < a.truncation(); ++i)
            out[i] = c * a.integer_at(i);
        return Series::from_exact(std::move(out));
    }
    u32 m = a.modulus().value();
    u64 cr = reduce_mpz(c, m);
    std::vector<u32> out(a.truncation());
    for (std::size_t i = 0; i < a.truncation(); ++i)
        out[i] = static_cast<u32>(cr * a.residue_at(i) % m);
    return Series::from_residues(std::move(out), a.modulus());
}

Series densify(const SparseSeries& s, std::size_t trunc, Modulus m) {
    if (m.is_exact()) {
        std::vector<mpz_class> c(trunc);
        for (const auto& t : s.terms()) {
            if (t.exponent >= trunc) break;
            c[t.exponent] = t.coefficient;
        }
        return Series::from_exact(std::move(c));
    }
    std::vector<u32> c(trunc, 0);
    for (const auto& t : s.terms()) {
        if (t.exponent >= trunc) break;
        c[t.exponent] = reduce_i64(t.coefficient, m.value());
    }
    return Series::from_residues(std::move(c), m);
}

namespace {

template <class Acc>
std::vector<u32> mul_sparse_mod_acc(
    std::span<const u32> a,
    const std::vector<std::pair<std::size_t, u32>>& terms, std::size_t n,
    u32 m) {
    std::vector<u32> y(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        Acc acc = 0;
        for (const auto& [e, c] : terms) {
            if (e > k) break;
            acc += static_cast<Acc>(static_cast<u64>(c) * a[k - e]);
        }
        y[k] = static_cast<u32>(acc % m);
    }
    return y;
}

} // namespace

Series mul_sparse(const Series& a, const SparseSeries& s) {
    std::size_t n = a.truncation();
    if (a.modulus().is_exact()) {
        std::vector<std::pair<std::size_t, mpz_class>> terms;
        for (const auto& t : s.terms()) {
            if (t.exponent >= n) break;
            terms.emplace_back(t.exponent, mpz_class(t.coefficient));
        }
        std::vector<mpz_class> y(n);
        for (std::size_t k = 0; k < n; ++k) {
            mpz_class& acc = y[k];
            for (const auto& [e, c] : terms) {
                if (e > k) break;
                mpz_addmul(acc.get_mpz_t(), c.get_mpz_t(),
                           a.integer_at(k - e).get_mpz_t());
            }
        }
        return Series::from_exact(std::move(y));
    }
    u32 m = a.modulus().value();
    std::vector<std::pair<std::size_t, u32>> terms;
    for (const auto& t : s.terms()) {
        if (t.exponent >= n) break;
        u32 c = reduce_i64(t.coefficient, m);
        if (c) terms.emplace_back(t.exponent, c);
    }
    std::vector<u32> y =
        fits_u64(terms.size(), m)
            ? mul_sparse_mod_acc<u64>(a.residues(), terms, n, m)
            : mul_sparse_mod_acc<u128>(a.residues(), terms, n, m);
    return Series::from_residues(std::move(y), a.modulus());
}

Series div_sparse(const Series& a, const SparseSeries& s) {
    std::size_t n = a.truncation();
    const auto& terms = s.terms();
    if (terms.empty() || terms[0].exponent != 0)
        throw NonInvertibleError("sparse divisor has zero constant term");
    if (n == 0) return Series::zero(0, a.modulus());
    if (a.modulus().is_exact()) {
        SparseTermsExact st;
        st.c0 = terms[0].coefficient;
        for (std::size_t i = 1; i < terms.size(); ++i) {
            if (terms[i].exponent >= n) break;
            st.tail.emplace_back(terms[i].exponent,
                                 mpz_class(terms[i].coefficient));
        }
        return Series::from_exact(divide_sparse_exact(a.integers(), st, n));
    }
    u32 m = a.modulus().value();
    SparseTermsMod st;
    st.c0 = reduce_i64(terms[0].coefficient, m);
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (terms[i].exponent >= n) break;
        u32 c = reduce_i64(terms[i].coefficient, m);
        if (c) st.tail.emplace_back(terms[i].exponent, c);
    }
    return Series::from_residues(divide_sparse_mod(a.residues(), st, m, n),
                                 a.modulus());
}

} // namespace etaq
