#pragma once

// Internal: exact integer convolution by Kronecker substitution, one large
// GMP multiply per product.

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace etaq::detail {

/// c[k] = sum_{i+j=k} a[i] * b[j], exactly, for k < out_len.
std::vector<mpz_class> convolve_exact(std::span<const mpz_class> a,
                                      std::span<const mpz_class> b,
                                      std::size_t out_len);

} // namespace etaq::detail
