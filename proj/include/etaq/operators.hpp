#pragma once

#include <cstdint>

#include "etaq/eta.hpp"

namespace etaq {

/// U(t): coefficient n of output = coefficient t*n of input; truncation
/// becomes floor(input truncation / t). Weight, level, character unchanged.
/// Requires t | fx.level.
FormExpansion op_U(const FormExpansion& fx, std::uint64_t t);

/// V(t): q -> q^t on the series; level multiplied by t.
FormExpansion op_V(const FormExpansion& fx, std::uint64_t t);

/// Twist by a real character chi2 with conductor M: coefficient n scaled by
/// chi2(n); level multiplied by M^2; character unchanged (chi2^2 trivial).
FormExpansion op_twist(const FormExpansion& fx, const CharacterSpec& chi2);

/// Coefficientwise sum; level becomes lcm of the levels. Weights and
/// characters must agree.
FormExpansion form_add(const FormExpansion& a, const FormExpansion& b);

/// fx|U(a) - fx|U(b)|V(t). Requires a | level, b | level, b = a*t.
/// For (9, 45, 5) this keeps exactly the coefficients u(9n) with n not
/// divisible by 5.
FormExpansion build_filter_series(const FormExpansion& fx, std::uint64_t a,
                                  std::uint64_t b, std::uint64_t t);

} // namespace etaq
