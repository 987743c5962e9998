#pragma once

// Central home for every tunable default.  Anything a flag or a test pins
// lives here exactly once.

namespace biharm::defaults {

// Disk quadrature: angular trapezoid nodes x composite Gauss-Legendre radial
// panels, with dyadic grading of the innermost panel toward rho = 0.
inline constexpr int angular_nodes = 256;
inline constexpr int radial_panels = 4;
inline constexpr int panel_order = 16;
inline constexpr int grading_levels = 6;

// Adaptive refinement.
inline constexpr int max_doublings = 3;

// Evaluation grids for sup-norms and bound sweeps.
inline constexpr int grid_radial = 20;
inline constexpr int grid_angular = 48;
inline constexpr double grid_r_max = 0.95;

// Representation-formula evaluation degrades as |z| -> 1 when the volume term
// is active; refuse past this radius rather than return noise.
inline constexpr double solve_radius_limit = 0.999;

// Finite differences.
inline constexpr double fd_step = 1e-4;        // first-order Wirtinger stencil
inline constexpr double residual_step = 1e-2;  // 13-point bilaplacian stencil

// Report verdicts: a bound counts as violated only below -report_tol, so
// quadrature-level noise on a genuinely tight bound never trips it.
inline constexpr double report_tol = 1e-7;

// Hypothesis gates ("maps into the closed unit disk" and friends) allow this
// much numerical slack.
inline constexpr double gate_slack = 1e-9;

// The radial liminf estimator compares a finite-r minimum against an
// asymptotic right-hand side, so its verdict uses a looser tolerance.
inline constexpr double schwarz_tol = 1e-4;

// Power-series truncation for the angular kernel series.
inline constexpr double series_tail = 1e-15;
inline constexpr long series_term_cap = 1000000;

// Sampled Lipschitz estimation.
inline constexpr int boundary_pair_count = 4096;
inline constexpr int interior_pair_count = 2000;
inline constexpr double interior_pair_radius = 0.98;
inline constexpr double slope_inflation = 1.05;

// Root bracketing/bisection.
inline constexpr double bisect_tol = 1e-15;
inline constexpr int bisect_max_iter = 200;

}  // namespace biharm::defaults
