#pragma once

// Internal: dense modular convolution via number-theoretic transforms over
// word-size primes, recombined by remaindering.

#include <cstdint>
#include <span>
#include <vector>

namespace etaq::detail {

/// c[k] = sum_{i+j=k} a[i] * b[j] mod m, for k < out_len. Inputs must already
/// be reduced to [0, m). Throws etaq::Error if the coefficient bound exceeds
/// what the prime set can recover or the transform size limit (2^23).
std::vector<std::uint32_t> convolve_mod(std::span<const std::uint32_t> a,
                                        std::span<const std::uint32_t> b,
                                        std::uint32_t m, std::size_t out_len);

/// Whether convolve_mod can handle inputs of these lengths at modulus m.
bool convolve_mod_supported(std::size_t na, std::size_t nb, std::uint32_t m);

} // namespace etaq::detail
