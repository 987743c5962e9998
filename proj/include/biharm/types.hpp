#pragma once

#include <complex>
#include <numbers>

namespace biharm {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi_v<double>;
inline constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;

/// Squared modulus |z|^2 (std::norm, named for readability at call sites).
inline double abs2(Complex z) { return std::norm(z); }

}  // namespace biharm
