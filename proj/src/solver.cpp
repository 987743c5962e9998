#include "biharm/solver.hpp"

#include <cmath>

#include "biharm/errors.hpp"

namespace biharm::solver {

namespace {

constexpr double volume_norm = 16.0;  // the 1/(16 pi) prefactor's 16

void require_admissible(const ProblemSpec& spec, Complex z) {
    const double a = std::abs(z);
    if (!(a < 1.0)) throw DomainError("evaluation point must lie strictly inside the unit disk");
    if (!spec.g.is_zero() && a > defaults::solve_radius_limit)
        throw DomainError("evaluation with an active volume term is limited to |z| <= " +
                          std::to_string(defaults::solve_radius_limit) +
                          "; the pulled-back quadrature is unreliable beyond it");
}

// sum_{k>=1} k c_{-k} conj(z)^k and sum_{k>=1} k^2 c_{-k} conj(z)^{k-1}:
// the closed forms of the correction integral and of its extra zbar-derivative
// piece.  Both are Horner evaluations over the negative f* indices.
Complex correction_series(const BoundaryFourier& f_star, Complex zbar) {
    Complex acc{};
    for (int k = f_star.degree(); k >= 1; --k)
        acc = acc * zbar + static_cast<double>(k) * f_star.coeff(-k);
    return acc * zbar;
}

Complex correction_series_dzbar(const BoundaryFourier& f_star, Complex zbar) {
    Complex acc{};
    for (int k = f_star.degree(); k >= 1; --k)
        acc = acc * zbar + static_cast<double>(k) * static_cast<double>(k) * f_star.coeff(-k);
    return acc;
}

}  // namespace

Complex harmonic_extension(const BoundaryFourier& psi, Complex z) {
    return psi.extension(z);
}

Complex boundary_correction_term(const BoundaryFourier& f_star, Complex z) {
    return (1.0 - abs2(z)) * correction_series(f_star, std::conj(z));
}

Complex solve_eval(const ProblemSpec& spec, Complex z, const quad::DiskRule& rule, Exec exec) {
    require_admissible(spec, z);
    const double one_minus_z2 = 1.0 - abs2(z);
    Complex f = spec.f_star.extension(z);
    f += one_minus_z2 * correction_series(spec.f_star, std::conj(z));
    f -= one_minus_z2 * spec.phi1().extension(z);
    if (!spec.g.is_zero()) {
        const Complex vol =
            quad::disk_integrate_green(z, [&](Complex w) { return spec.g.eval(w); }, rule, exec);
        f -= vol / (volume_norm * pi);
    }
    return f;
}

GradResult make_grad_result(Complex f_z, Complex f_zbar) {
    GradResult g;
    g.f_z = f_z;
    g.f_zbar = f_zbar;
    const double az = std::abs(f_z), ab = std::abs(f_zbar);
    g.op_norm = az + ab;
    g.lambda = std::abs(az - ab);
    g.jacobian = az * az - ab * ab;
    return g;
}

GradResult solve_gradient(const ProblemSpec& spec, Complex z, const quad::DiskRule& rule,
                          Exec exec) {
    require_admissible(spec, z);
    const double one_minus_z2 = 1.0 - abs2(z);
    const Complex zbar = std::conj(z);
    const BoundaryFourier phi1 = spec.phi1();
    const Complex p_phi1 = phi1.extension(z);
    const Complex corr = correction_series(spec.f_star, zbar);

    Complex f_z = spec.f_star.extension_dz(z) - zbar * corr + zbar * p_phi1 -
                  one_minus_z2 * phi1.extension_dz(z);
    Complex f_zbar = spec.f_star.extension_dzbar(z) - z * corr + z * p_phi1 -
                     one_minus_z2 * phi1.extension_dzbar(z) +
                     one_minus_z2 * correction_series_dzbar(spec.f_star, zbar);

    if (!spec.g.is_zero()) {
        const quad::GreenGradientIntegrals vol = quad::disk_integrate_green_gradient(
            z, [&](Complex w) { return spec.g.eval(w); }, rule, exec);
        f_z -= vol.d_z / (volume_norm * pi);
        f_zbar -= vol.d_zbar / (volume_norm * pi);
    }
    return make_grad_result(f_z, f_zbar);
}

GradResult fd_gradient(const std::function<Complex(Complex)>& f, Complex z, double step) {
    if (!(step > 0.0)) throw DomainError("finite-difference step must be positive");
    const Complex fx = (f(z + step) - f(z - step)) / (2.0 * step);
    const Complex fy = (f(z + Complex{0.0, step}) - f(z - Complex{0.0, step})) / (2.0 * step);
    const Complex i{0.0, 1.0};
    return make_grad_result(0.5 * (fx - i * fy), 0.5 * (fx + i * fy));
}

Complex biharmonic_residual(const ProblemSpec& spec, Complex z, double step,
                            const quad::DiskRule& rule, Exec exec) {
    if (!(step > 0.0)) throw DomainError("stencil step must be positive");
    if (!(std::abs(z) + 2.0 * step < 1.0))
        throw DomainError("stencil leaves the unit disk; shrink the step or move inward");
    auto f = [&](Complex p) { return solve_eval(spec, p, rule, exec); };
    const double h = step;
    // Nested 5-point Laplacians collapse to the standard 13-point bilaplacian
    // stencil: 20 f0 - 8 (axis) + 2 (diagonal) + 1 (double axis), over h^4.
    Complex acc = 20.0 * f(z);
    const Complex ex{h, 0.0}, ey{0.0, h};
    acc -= 8.0 * (f(z + ex) + f(z - ex) + f(z + ey) + f(z - ey));
    acc += 2.0 * (f(z + ex + ey) + f(z + ex - ey) + f(z - ex + ey) + f(z - ex - ey));
    acc += f(z + 2.0 * ex) + f(z - 2.0 * ex) + f(z + 2.0 * ey) + f(z - 2.0 * ey);
    const Complex bilap = acc / (h * h * h * h);
    return bilap - spec.g.eval(z);
}

double grid_sup_norm(const std::function<double(Complex)>& fn, int radial, int angular,
                     double r_max, Exec exec) {
    if (radial < 1 || angular < 1) throw DomainError("grid dimensions must be positive");
    if (!(r_max >= 0.0)) throw DomainError("grid radius must be nonnegative");
    const std::size_t n = static_cast<std::size_t>(radial) * angular;
    ScoredIndex best = block_max(
        n,
        [&](std::size_t idx) {
            const int i = static_cast<int>(idx) / angular;
            const int k = static_cast<int>(idx) % angular;
            const double r = radial > 1 ? r_max * i / (radial - 1) : r_max;
            const double t = two_pi * static_cast<double>(k) / angular;
            return fn(Complex{r * std::cos(t), r * std::sin(t)});
        },
        exec);
    return best.value;
}

}  // namespace biharm::solver
