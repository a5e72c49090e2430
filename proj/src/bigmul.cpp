#include "bigmul.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace etaq::detail {
namespace {

mpz_class import_words(const std::vector<std::uint64_t>& w) {
    mpz_class z;
    if (!w.empty())
        mpz_import(z.get_mpz_t(), w.size(), -1, sizeof(std::uint64_t), 0, 0,
                   w.data());
    return z;
}

} // namespace

std::vector<mpz_class> convolve_exact(std::span<const mpz_class> a,
                                      std::span<const mpz_class> b,
                                      std::size_t out_len) {
    if (a.empty() || b.empty() || out_len == 0) return {};
    std::size_t na = a.size(), nb = b.size();
    std::size_t nc = na + nb - 1;
    std::size_t keep = std::min(out_len, nc);

    std::size_t abits = 1, bbits = 1;
    for (const auto& x : a)
        if (sgn(x) != 0)
            abits = std::max(abits, mpz_sizeinbase(x.get_mpz_t(), 2));
    for (const auto& x : b)
        if (sgn(x) != 0)
            bbits = std::max(bbits, mpz_sizeinbase(x.get_mpz_t(), 2));

    // Digit width: every convolution coefficient fits strictly below
    // 2^(width-1), so the offset trick below leaves each digit carry-free.
    std::size_t width = abits + bbits + std::bit_width(std::min(na, nb)) + 2;
    width = (width + 63) / 64 * 64;
    std::size_t L = width / 64; // 64-bit words per digit

    auto pack = [&](std::span<const mpz_class> v) {
        std::vector<std::uint64_t> pos(v.size() * L, 0), neg(v.size() * L, 0);
        bool has_neg = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            int s = sgn(v[i]);
            if (s == 0) continue;
            auto* dst = s > 0 ? pos.data() : (has_neg = true, neg.data());
            std::size_t count = 0;
            mpz_export(dst + i * L, &count, -1, sizeof(std::uint64_t), 0, 0,
                       v[i].get_mpz_t()); // magnitude only
        }
        mpz_class z = import_words(pos);
        if (has_neg) z -= import_words(neg);
        return z;
    };

    mpz_class P = pack(a) * pack(b);

    // Shift every digit by 2^(width-1): all digits land in [1, 2^width) and
    // the sum becomes nonnegative, so a plain export recovers them.
    std::vector<std::uint64_t> off(nc * L, 0);
    for (std::size_t i = 0; i < nc; ++i)
        off[i * L + (L - 1)] = std::uint64_t{1} << 63;
    mpz_class Q = P + import_words(off);

    std::vector<std::uint64_t> words(nc * L, 0);
    std::size_t count = 0;
    mpz_export(words.data(), &count, -1, sizeof(std::uint64_t), 0, 0,
               Q.get_mpz_t());

    mpz_class half = mpz_class(1) << (width - 1);
    std::vector<mpz_class> out(keep);
    for (std::size_t i = 0; i < keep; ++i) {
        mpz_class d;
        mpz_import(d.get_mpz_t(), L, -1, sizeof(std::uint64_t), 0, 0,
                   words.data() + i * L);
        out[i] = d - half;
    }
    return out;
}

} // namespace etaq::detail
