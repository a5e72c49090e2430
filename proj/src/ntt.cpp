#include "ntt.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <future>
#include <utility>

#include "etaq/errors.hpp"
#include "etaq/runtime.hpp"

namespace etaq::detail {
namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 modpow64(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = static_cast<u64>(static_cast<u128>(r) * b % m);
        b = static_cast<u64>(static_cast<u128>(b) * b % m);
        e >>= 1;
    }
    return r;
}

// Montgomery arithmetic modulo a compile-time NTT-friendly prime.
template <u32 P, u32 G>
struct Mont {
    static_assert(P % 2 == 1 && P < (1u << 30));
    static constexpr u32 mod = P;
    static constexpr u32 ninv = [] {
        u32 x = P;
        for (int i = 0; i < 5; ++i) x *= 2u - P * x; // Newton, x = P^-1 mod 2^32
        return 0u - x;
    }();
    static constexpr u32 r2 =
        static_cast<u32>((static_cast<u128>(1) << 64) % P);
    static constexpr u32 one = static_cast<u32>((u64{1} << 32) % P);

    static constexpr u32 reduce(u64 t) {
        u32 q = static_cast<u32>(t) * ninv;
        u32 r = static_cast<u32>((t + static_cast<u64>(q) * P) >> 32);
        return r >= P ? r - P : r;
    }
    static constexpr u32 mul(u32 a, u32 b) {
        return reduce(static_cast<u64>(a) * b);
    }
    static constexpr u32 add(u32 a, u32 b) {
        u32 r = a + b;
        return r >= P ? r - P : r;
    }
    static constexpr u32 sub(u32 a, u32 b) { return a >= b ? a - b : a + P - b; }
    static constexpr u32 to_mont(u32 x) { return mul(x, r2); }
    static constexpr u32 from_mont(u32 x) { return reduce(x); }
    static constexpr u32 pow(u32 a, u64 e) {
        u32 r = one;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // root_tab[len + i] = w_{2 len}^i in Montgomery form, len = 1, 2, 4, ...
    static std::vector<u32> root_table(std::size_t n, bool inverse) {
        std::vector<u32> tab(n);
        u32 g = to_mont(G);
        if (inverse) g = pow(g, P - 2);
        for (std::size_t len = 1; len < n; len <<= 1) {
            u32 w = pow(g, (P - 1) / (2 * len));
            u32 cur = one;
            for (std::size_t i = 0; i < len; ++i) {
                tab[len + i] = cur;
                cur = mul(cur, w);
            }
        }
        return tab;
    }

    static void bit_reverse(std::vector<u32>& a) {
        std::size_t n = a.size();
        for (std::size_t i = 1, j = 0; i < n; ++i) {
            std::size_t bit = n >> 1;
            for (; j & bit; bit >>= 1) j ^= bit;
            j ^= bit;
            if (i < j) std::swap(a[i], a[j]);
        }
    }

    // In-place radix-2 transform; a.size() must be a power of two.
    static void transform(std::vector<u32>& a, const std::vector<u32>& tab) {
        std::size_t n = a.size();
        bit_reverse(a);
        for (std::size_t len = 1; len < n; len <<= 1) {
            for (std::size_t blk = 0; blk < n; blk += 2 * len) {
                for (std::size_t i = 0; i < len; ++i) {
                    u32 x = a[blk + i];
                    u32 y = mul(a[blk + len + i], tab[len + i]);
                    a[blk + i] = add(x, y);
                    a[blk + len + i] = sub(x, y);
                }
            }
        }
    }

    // Residues mod P of the integer convolution, truncated to out_len.
    static std::vector<u32> convolve(std::span<const u32> a,
                                     std::span<const u32> b,
                                     std::size_t out_len) {
        std::size_t need = a.size() + b.size() - 1;
        std::size_t L = std::bit_ceil(need);
        std::vector<u32> fa(L, 0), fb(L, 0);
        for (std::size_t i = 0; i < a.size(); ++i) fa[i] = to_mont(a[i] % P);
        for (std::size_t i = 0; i < b.size(); ++i) fb[i] = to_mont(b[i] % P);
        auto tab = root_table(L, false);
        transform(fa, tab);
        transform(fb, tab);
        for (std::size_t i = 0; i < L; ++i) fa[i] = mul(fa[i], fb[i]);
        auto itab = root_table(L, true);
        transform(fa, itab);
        u32 ninv_scale = to_mont(static_cast<u32>(modpow64(L % P, P - 2, P)));
        std::size_t keep = std::min(out_len, need);
        std::vector<u32> out(keep);
        for (std::size_t i = 0; i < keep; ++i)
            out[i] = from_mont(mul(fa[i], ninv_scale));
        return out;
    }
};

constexpr u32 P1 = 998244353;  // 119 * 2^23 + 1
constexpr u32 P2 = 469762049;  // 7 * 2^26 + 1
constexpr u32 P3 = 167772161;  // 5 * 2^25 + 1
using M1 = Mont<P1, 3>;
using M2 = Mont<P2, 3>;
using M3 = Mont<P3, 3>;

constexpr std::size_t kMaxTransform = std::size_t{1} << 23;

constexpr u64 inv_p1_mod_p2 = modpow64(P1 % P2, P2 - 2, P2);
constexpr u64 p1p2 = static_cast<u64>(P1) * P2;
constexpr u64 inv_p1p2_mod_p3 = modpow64(p1p2 % P3, P3 - 2, P3);

} // namespace

bool convolve_mod_supported(std::size_t na, std::size_t nb, u32 m) {
    if (na == 0 || nb == 0) return true;
    if (std::bit_ceil(na + nb - 1) > kMaxTransform) return false;
    u128 bound = static_cast<u128>(m - 1) * (m - 1) * std::min(na, nb);
    return bound < static_cast<u128>(P1) * P2 * P3;
}

std::vector<u32> convolve_mod(std::span<const u32> a, std::span<const u32> b,
                              u32 m, std::size_t out_len) {
    if (a.empty() || b.empty() || out_len == 0) return {};
    std::size_t need = a.size() + b.size() - 1;
    if (std::bit_ceil(need) > kMaxTransform)
        throw Error("transform size exceeds supported limit");

    u128 bound = static_cast<u128>(m - 1) * (m - 1) *
                 std::min(a.size(), b.size());
    int primes;
    if (bound < P1)
        primes = 1;
    else if (bound < static_cast<u128>(P1) * P2)
        primes = 2;
    else if (bound < static_cast<u128>(P1) * P2 * P3)
        primes = 3;
    else
        throw Error("convolution bound exceeds prime capacity");

    bool parallel = primes > 1 && out_len >= (std::size_t{1} << 16) &&
                    runtime::thread_count() > 1;

    std::vector<u32> r1, r2, r3;
    if (parallel) {
        auto f2 = std::async(std::launch::async,
                             [&] { return M2::convolve(a, b, out_len); });
        std::future<std::vector<u32>> f3;
        if (primes == 3)
            f3 = std::async(std::launch::async,
                            [&] { return M3::convolve(a, b, out_len); });
        r1 = M1::convolve(a, b, out_len);
        r2 = f2.get();
        if (primes == 3) r3 = f3.get();
    } else {
        r1 = M1::convolve(a, b, out_len);
        if (primes >= 2) r2 = M2::convolve(a, b, out_len);
        if (primes == 3) r3 = M3::convolve(a, b, out_len);
    }

    std::size_t keep = r1.size();
    std::vector<u32> out(keep);
    if (primes == 1) {
        for (std::size_t i = 0; i < keep; ++i) out[i] = r1[i] % m;
    } else if (primes == 2) {
        for (std::size_t i = 0; i < keep; ++i) {
            u64 t = (r2[i] + static_cast<u64>(P2) - r1[i] % P2) % P2;
            t = t * inv_p1_mod_p2 % P2;
            u64 x = r1[i] + static_cast<u64>(P1) * t; // < P1 * P2
            out[i] = static_cast<u32>(x % m);
        }
    } else {
        for (std::size_t i = 0; i < keep; ++i) {
            u64 t = (r2[i] + static_cast<u64>(P2) - r1[i] % P2) % P2;
            t = t * inv_p1_mod_p2 % P2;
            u64 x12 = r1[i] + static_cast<u64>(P1) * t;
            u64 t3 = (r3[i] + static_cast<u64>(P3) - x12 % P3) % P3;
            t3 = t3 * inv_p1p2_mod_p3 % P3;
            u128 x = x12 + static_cast<u128>(p1p2) * t3;
            out[i] = static_cast<u32>(x % m);
        }
    }
    return out;
}

} // namespace etaq::detail
