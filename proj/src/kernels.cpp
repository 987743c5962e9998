#include "biharm/kernels.hpp"

#include <cmath>
#include <string>

#include "biharm/defaults.hpp"
#include "biharm/errors.hpp"

namespace biharm::kernels {

namespace {

void require_interior(Complex p, const char* name) {
    if (!(abs2(p) < 1.0))
        throw DomainError(std::string(name) + " must lie strictly inside the unit disk");
}

}  // namespace

double green(Complex z, Complex w) {
    require_interior(z, "z");
    require_interior(w, "w");
    if (z == w) {
        const double c = 1.0 - abs2(z);
        return -c * c;  // continuous extension across the diagonal
    }
    const double boundary_part = (1.0 - abs2(z)) * (1.0 - abs2(w));
    const double d2 = abs2(z - w);               // |z-w|^2
    const double m2 = abs2(1.0 - z * std::conj(w));  // |1 - z conj w|^2
    // |z-w|^2 log(|1-z conj w|^2 / |z-w|^2): one log, no cancellation issues;
    // the d2 -> 0 limit is 0 and is handled by the z == w branch above.
    return d2 * std::log(m2 / d2) - boundary_part;
}

KernelGradient green_gradient(Complex z, Complex w) {
    require_interior(z, "z");
    require_interior(w, "w");
    if (z == w)
        throw SingularityError("kernel gradient is not defined on the diagonal z == w");
    const Complex diff = z - w;
    const double log_ratio = std::log(abs2(1.0 - z * std::conj(w)) / abs2(diff));
    const double w_defect = abs2(w) - 1.0;  // |w|^2 - 1
    KernelGradient g;
    g.d_z = std::conj(diff) * log_ratio +
            std::conj(diff) * w_defect / (1.0 - z * std::conj(w)) +
            std::conj(z) * (-w_defect);
    g.d_zbar = diff * log_ratio + diff * w_defect / (1.0 - w * std::conj(z)) + z * (-w_defect);
    return g;
}

double green_pullback(Complex z, Complex zeta) {
    require_interior(z, "z");
    require_interior(zeta, "zeta");
    const double one_minus_z2 = 1.0 - abs2(z);
    const double r2 = abs2(zeta);
    if (r2 == 0.0) return -one_minus_z2 * one_minus_z2;
    const double core = r2 * std::log(r2) + 1.0 - r2;  // 2|zeta|^2 log|zeta| + 1 - |zeta|^2
    return -one_minus_z2 * one_minus_z2 / abs2(1.0 - std::conj(z) * zeta) * core;
}

PoissonValue poisson_eval(Complex z, double theta) {
    require_interior(z, "z");
    const Complex u{std::cos(theta), std::sin(theta)};
    const Complex a = 1.0 - z * std::conj(u);  // 1 - z e^{-i theta}
    const Complex b = 1.0 - std::conj(z) * u;  // conj(a)
    PoissonValue p;
    p.value = (1.0 - abs2(z)) / abs2(a);
    // d/dz of (1-z conj z)/(a b): the numerator collapses to conj(u) - conj(z).
    p.d_z = (std::conj(u) - std::conj(z)) / (a * a * b);
    p.d_zbar = std::conj(p.d_z);
    return p;
}

double f_kernel(Complex z, Complex w) {
    require_interior(z, "z");
    require_interior(w, "w");
    if (z == w) throw SingularityError("log-ratio kernel diverges on the diagonal z == w");
    return 0.5 * std::log(abs2(1.0 - z * std::conj(w)) / abs2(z - w));
}

SeriesIntegralResult kernel_series_integral(double alpha, double r, int nodes) {
    if (!(alpha > 0.0)) throw DomainError("series exponent alpha must be positive");
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("series radius must satisfy 0 <= r < 1");
    if (nodes < 1) throw DomainError("node count must be positive");

    SeriesIntegralResult out{};

    // Trapezoid rule, exact for the tail-free part of the trigonometric
    // expansion once the node count outruns the decay of r^n.  The moments
    // grow like (1-r^2)^{1-2 alpha}, so the sums are compensated to keep the
    // roundoff at a few ulps of the result rather than nodes * eps.
    double quad = 0.0, quad_c = 0.0;
    const double gap = (1.0 - r) * (1.0 - r);
    for (int k = 0; k < nodes; ++k) {
        const double t = two_pi * static_cast<double>(k) / nodes;
        // |1 - r e^{it}|^2 in the half-angle form: both terms are positive,
        // so the value keeps full relative accuracy near the pole at t = 0
        // (the naive 1 - 2 r cos t + r^2 cancels there and the error is then
        // amplified by the -alpha power).
        const double h = std::sin(0.5 * t);
        const double m2 = gap + 4.0 * r * h * h;
        const double y = std::pow(m2, -alpha) - quad_c;
        const double s = quad + y;
        quad_c = (s - quad) - y;
        quad = s;
    }
    out.quadrature = quad / nodes;

    // Power series via the term ratio t_{n+1}/t_n = ((n+alpha)/(n+1))^2 r^2;
    // starts from t_0 = 1 so no Gamma evaluations are needed.
    // The running product picks up a rounding per factor, which matters once
    // hundreds of terms contribute near r = 1, so the recurrence runs in
    // extended precision.
    const long double r2 = static_cast<long double>(r) * r;
    long double term = 1.0L;
    long double sum = 1.0L;
    long n = 0;
    out.series_converged = (r2 == 0.0L);
    while (n < defaults::series_term_cap) {
        const long double ratio = (n + static_cast<long double>(alpha)) / (n + 1.0L);
        term *= ratio * ratio * r2;
        sum += term;
        ++n;
        if (term < static_cast<long double>(defaults::series_tail)) {
            out.series_converged = true;
            break;
        }
    }
    out.series = static_cast<double>(sum);
    out.series_terms = n + 1;
    return out;
}

}  // namespace biharm::kernels
