#pragma once

#include <cstddef>
#include <vector>

#include "biharm/solver.hpp"

namespace biharm::bounds {

enum class BoundId {
    thm1,             // pointwise solution bound (sharp at the center)
    thm3,             // gradient bound for disk-into-disk solutions
    heinz,            // |h(z)| <= (4/pi) arctan|z| for normalized harmonic maps
    pavlovic,         // center-corrected sharpening of the Heinz bound
    colonna,          // ||D_h|| <= (4/pi)/(1-|z|^2) for harmonic into-maps
    green_mass,       // (1/16pi) Int |G(z,.)| dA == (1-|z|^2)^2/64
    grad_green_mass,  // (1/8pi) Int (|G_z| + |G_zbar|) dA <= 23/24
    boundary_schwarz  // radial lower bound at the boundary (own estimator)
};

const char* bound_name(BoundId id);

struct BoundSample {
    Complex z;
    double lhs;
    double rhs;
    double margin;  // rhs - lhs, except identity-type bounds use -|lhs - rhs|
};

struct BoundReport {
    BoundId bound;
    std::vector<BoundSample> samples;
    double min_margin = 0.0;
    Complex worst_z;
    std::size_t worst_index = 0;  // first minimum in scan order
    bool violated = false;        // min_margin < -defaults::report_tol
};

/// Norms feeding the right-hand sides.  All are lower bounds of the true
/// sups (dense boundary sampling plus an interior sweep), which is the
/// conservative direction for verifying upper bounds.  The three harmonic
/// extensions attain their sup on the circle by the maximum principle, so
/// their entries coincide with boundary sups of the data.
struct NormSet {
    double p_fstar = 0.0;      // sup |P_{f*}|  == sup_T |f*|
    double p_abs_fstar = 0.0;  // sup  P_{|f*|} == sup_T |f*|
    double p_phi1 = 0.0;       // sup |P_{phi1}| == sup_T |phi|
    double phi_sup = 0.0;      // sup_T |phi|
    double g_sup = 0.0;        // sup_D |g|
    double f_sup = 0.0;        // sup_D |f|, interior sweep + boundary row
};

NormSet estimate_norms(const ProblemSpec& spec, int radial, int angular, double r_max,
                       const quad::DiskRule& rule, Exec exec = Exec::parallel);

struct PointCheck {
    double lhs;
    double rhs;
};

/// Pointwise solution bound: with t = |z|,
///   |f(z) - (1-t^2)/(1+t^2) P_{f*}(0) + (1-t^2)^2/(1+t^2) P_{phi1}(0)|
///     <= (4/pi) ||P_{f*}|| arctan t + (4/pi) ||P_{phi1}|| (1-t^2) arctan t
///        + ||P_{|f*|}|| t + ||g|| (1-t^2)^2 / 64.
/// Valid on the closed disk; on the circle f is read off the boundary model.
PointCheck thm1_check(const ProblemSpec& spec, Complex z, const NormSet& norms,
                      const quad::DiskRule& rule, Exec exec = Exec::parallel);

/// Gradient bound, requiring the solution to map into the closed unit disk
/// (gated on norms.f_sup):
///   |f_z| + |f_zbar|
///     <= (4 + pi(1 + 2t + 3t^2)) / (pi (1-t^2)) ||f|| + (2t + 4/pi) ||phi||
///        + (23/24) ||g||.
PointCheck thm3_check(const ProblemSpec& spec, Complex z, const NormSet& norms,
                      const quad::DiskRule& rule, Exec exec = Exec::parallel);

/// Classical comparators for a harmonic self-map h of the disk, given by its
/// boundary series.  h_abs = |h(z)| is the left side for the Heinz and
/// Kra-type bounds; the Kra bound additionally needs analytic data.
struct HarmonicClassics {
    double h_abs;
    double heinz_rhs;
    double pavlovic_lhs;
    double pavlovic_rhs;
    double colonna_lhs;
    double colonna_rhs;
    double kra_rhs;
};

HarmonicClassics harmonic_classics(const BoundaryFourier& h, Complex z);

/// The mass identity of the kernel: numeric (1/16pi) Int_D |G(z,w)| dA(w)
/// against the closed form (1-|z|^2)^2 / 64.
struct MassCheck {
    double numeric;
    double closed_form;
};

MassCheck green_mass_identity(Complex z, const quad::DiskRule& rule, Exec exec = Exec::parallel);

/// (1/8pi) Int_D (|G_z(z,w)| + |G_zbar(z,w)|) dA(w); bounded by 23/24, with
/// value 2/45 at the center.
double grad_green_mass(Complex z, const quad::DiskRule& rule, Exec exec = Exec::parallel);

/// Radial lower bound at a boundary point eta for specs whose Dirichlet data
/// is analytic (nonnegative Fourier indices only), bounded by 1 on the
/// circle, with small normal-derivative data.  Estimates
///   liminf_{r->1} |f(eta) - f(r eta)| / (1 - r)
/// by the minimum of the difference quotients over the tail half of r_list,
/// and compares with (1 - |P(0)|)/(1 + |P(0)|) - 2 ||P_{phi1}||.
struct SchwarzReport {
    std::vector<double> r_list;
    std::vector<double> quotients;
    double liminf_est = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // liminf_est - rhs
    bool violated = false;
};

std::vector<double> default_schwarz_r_list();

SchwarzReport boundary_schwarz_estimate(const ProblemSpec& spec, Complex eta,
                                        const std::vector<double>& r_list,
                                        const quad::DiskRule& rule, Exec exec = Exec::parallel);

/// Sweeps a bound over the polar grid (same layout as grid_sup_norm) and
/// reports every sample plus the first worst point in scan order.  The
/// boundary_schwarz id has its own estimator and is rejected here.  spec may
/// be null for the two kernel-mass bounds.
BoundReport grid_verify(BoundId id, const ProblemSpec* spec, int radial, int angular,
                        double r_max, const quad::DiskRule& rule, Exec exec = Exec::parallel);

}  // namespace biharm::bounds
