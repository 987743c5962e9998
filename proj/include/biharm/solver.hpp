#pragma once

#include <functional>

#include "biharm/problem.hpp"
#include "biharm/quadrature.hpp"

namespace biharm::solver {

/// Poisson integral of a finite Fourier series, in closed form.
Complex harmonic_extension(const BoundaryFourier& psi, Complex z);

/// The boundary-correction summand of the representation formula,
///
///   (1/2pi) Int  conj(z) e^{it} f*(e^{it}) (1-|z|^2)/(1 - conj(z) e^{it})^2 dt
///     = (1-|z|^2) sum_{k>=1} k c_{-k} conj(z)^k,
///
/// where c_{-k} are the negative-index coefficients of f*.
Complex boundary_correction_term(const BoundaryFourier& f_star, Complex z);

/// Solution value
///
///   f(z) = P_{f*}(z) + boundary_correction - (1-|z|^2) P_{phi1}(z)
///          - (1/16pi) Int_D g(w) G(z,w) dA(w).
///
/// Requires |z| < 1; when the volume term is active (g not identically zero)
/// the radius is further limited to defaults::solve_radius_limit because the
/// pulled-back quadrature degrades as z approaches the circle.
Complex solve_eval(const ProblemSpec& spec, Complex z,
                   const quad::DiskRule& rule, Exec exec = Exec::parallel);

/// Wirtinger derivatives of the solution plus the derived pointwise data of
/// the tangent map: operator norm |f_z| + |f_zbar|, its co-norm
/// ||f_z| - |f_zbar||, and the Jacobian |f_z|^2 - |f_zbar|^2.
struct GradResult {
    Complex f_z;
    Complex f_zbar;
    double op_norm;
    double lambda;
    double jacobian;
};

GradResult make_grad_result(Complex f_z, Complex f_zbar);

GradResult solve_gradient(const ProblemSpec& spec, Complex z,
                          const quad::DiskRule& rule, Exec exec = Exec::parallel);

/// Central-difference Wirtinger derivatives of an arbitrary field:
/// f_z = (f_x - i f_y)/2, f_zbar = (f_x + i f_y)/2.
GradResult fd_gradient(const std::function<Complex(Complex)>& f, Complex z,
                       double step = defaults::fd_step);

/// Delta(Delta f) - g(z) with the bilaplacian taken by nesting the 5-point
/// Laplacian stencil of width `step` around z (all 13 evaluations must stay
/// inside the admissible radius, so |z| + 2 step < 1 is required).
Complex biharmonic_residual(const ProblemSpec& spec, Complex z,
                            double step = defaults::residual_step,
                            const quad::DiskRule& rule = quad::DiskRule::make(),
                            Exec exec = Exec::parallel);

/// max of fn over the polar grid {r_j e^{i theta_k}}, r_j = r_max j/(radial-1)
/// (so the center is included), theta_k = 2pi k/angular.  A lower bound of
/// the true sup; deterministic scan order.
double grid_sup_norm(const std::function<double(Complex)>& fn, int radial, int angular,
                     double r_max, Exec exec = Exec::parallel);

}  // namespace biharm::solver
