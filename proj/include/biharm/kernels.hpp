#pragma once

#include "biharm/types.hpp"

namespace biharm::kernels {

/// Biharmonic Green function of the unit disk,
///
///     G(z,w) = |z-w|^2 log|(1 - z conj(w))/(z - w)|^2 - (1-|z|^2)(1-|w|^2),
///
/// defined for z, w strictly inside the disk.  G is symmetric, nonpositive,
/// and extends continuously across the diagonal with G(z,z) = -(1-|z|^2)^2;
/// that limit is returned when z == w.
double green(Complex z, Complex w);

/// Wirtinger derivatives of G in the first argument.
struct KernelGradient {
    Complex d_z;
    Complex d_zbar;
};

/// d/dz and d/d(conj z) of G(.,w):
///
///   G_z = (conj z - conj w) log|(1-z conj w)/(z-w)|^2
///         + (conj z - conj w)(|w|^2 - 1)/(1 - z conj w) + conj(z)(1-|w|^2),
///
/// and G_zbar is the mirror formula (conjugate factors, denominator
/// 1 - w conj z).  The gradient is singular-free but the formula's log blows
/// up in pieces on the diagonal, so z == w is refused.
KernelGradient green_gradient(Complex z, Complex w);

/// G(z, w(zeta)) under the involution w = (z - zeta)/(1 - conj(z) zeta):
///
///   -(1-|z|^2)^2 / |1 - conj(z) zeta|^2 * (2|zeta|^2 log|zeta| + 1 - |zeta|^2).
///
/// The diagonal moves to zeta = 0 where only the continuous rho^2 log rho
/// profile remains; green_pullback(z, 0) = -(1-|z|^2)^2.
double green_pullback(Complex z, Complex zeta);

/// Poisson kernel P(z, e^{i theta}) = (1-|z|^2)/|1 - z e^{-i theta}|^2 with
/// its Wirtinger derivatives in z.
struct PoissonValue {
    double value;
    Complex d_z;
    Complex d_zbar;
};

PoissonValue poisson_eval(Complex z, double theta);

/// Logarithmic factor F(z,w) = log|(1 - z conj w)/(z - w)| of the Green
/// function; positive for distinct interior points.
double f_kernel(Complex z, Complex w);

/// The angular moment (1/2pi) Int_0^{2pi} dtheta / |1 - r e^{i theta}|^{2 alpha}
/// computed two independent ways: an M-node trapezoid rule, and the power
/// series  sum_{n>=0} (Gamma(n+alpha)/(n! Gamma(alpha)))^2 r^{2n}.
struct SeriesIntegralResult {
    double quadrature;
    double series;
    long series_terms;
    /// False when the series tail could not be driven below the truncation
    /// threshold within the term cap (r too close to 1 for the tolerance).
    bool series_converged;
};

SeriesIntegralResult kernel_series_integral(double alpha, double r, int nodes);

}  // namespace biharm::kernels
