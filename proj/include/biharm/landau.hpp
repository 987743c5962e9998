#pragma once

#include <functional>

#include "biharm/fourier.hpp"
#include "biharm/parallel.hpp"
#include "biharm/types.hpp"

namespace biharm::landau {

/// Norm data of a normalized solution family: M1 bounds sup|f|, M2 bounds
/// the normal-derivative data, M3 bounds the inhomogeneity.
struct LandauInput {
    double m1 = 0.0;
    double m2 = 0.0;
    double m3 = 0.0;
};

/// lambda0 = 1 / ((4/pi)(M1+M2) + M1 + (23/24) M3): the distortion floor at
/// the center for f(0) = 0, J_f(0) = 1 normalizations.
double landau_lambda0(const LandauInput& in);

/// The univalence profile
///
///   h(r) = lambda0 - [ (4(M1+M2)/pi) r(2-r)/(1-r)^2 + 2 M2 r
///                      + r^2/(1-r^2) (2 M1 + 4 M2/pi) + (101 M3/120) r
///                      + 2 M1 r (2+2r+r^2)/((1-r)(1-r^2)) ],
///
/// strictly decreasing on [0,1) from lambda0 to -infinity when M1 > 0.
double landau_h(double r, const LandauInput& in);

/// The same subtracted terms, written as the distortion loss
///
///   tau(r) = (4(M1+M2)/pi) r(2-r)/(1-r)^2 + 2 M1 r^2/(1-r^2) + 2 M2 r
///            + 4 M2 r^2/(pi(1-r^2)) + M3 r/8 + 43 M3 r/60
///            + 2 M1 r (2+2r+r^2)/((1-r)(1-r^2));
///
/// algebraically h(r) = lambda0 - tau(r).
double tau_eval(double r, const LandauInput& in);

/// Root and radius data of h: r0 with h(r0) = 0 by bracketing bisection, the
/// covered-disk radius m0, and the center floor lambda0.
struct LandauResult {
    double r0;
    double m0;
    double lambda0;
    double bracket_lo;
    double bracket_hi;
    double residual;  // |h(r0)|
    int iterations;
};

LandauResult landau_solve(const LandauInput& in, double tol = 1e-15);

/// Univalence/covering radii for the two auxiliary normalizations of a
/// harmonic self-map scale M: rho2/R2 solve
///   pi/(4M) - 2 M rho - 4 M rho/(1-rho)^2 = 0,
///   R2 = (pi/4M) rho2 - 2M (rho2^3 + rho2^2)/(1 - rho2),
/// and rho3/R3 solve
///   pi/(4M) = 4 M rho/(1-rho) + 2 M rho (2-rho)/(1-rho)^2,
///   R3 = (pi/4M) rho3^2 - 2M rho3^4/(1 - rho3).
struct AaRadii {
    double rho2;
    double big_r2;
    double resid2;
    double rho3;
    double big_r3;
    double resid3;
};

AaRadii aa_radii(double m);

/// nu(s) = ((1-s^2)/(8 s^2)) ((1+s^2)/(1-s^2)
///          - ((1-s^2)/(2s)) log((1+s)/(1-s))),  0 < s < 1;
/// decreases from 1/3 to 1/4.  Small s switches to the Taylor profile
/// 1/3 - s^2/15 - s^4/105 - s^6/315.
double nu_eval(double s);

/// Coefficient bounds for a harmonic map into the disk of radius M, written
/// h = sum a_n z^n + conj(sum b_n z^n): |a_0| <= M and |a_n| + |b_n| <= 4M/pi.
struct CoeffCheck {
    bool ok;
    double a0_abs;      // |a_0|
    int worst_n;        // index of the largest pair sum relative to 4M/pi
    double worst_sum;   // |a_n| + |b_n| at worst_n
    double pair_bound;  // 4M/pi
};

CoeffCheck harmonic_coeff_check(const BoundaryFourier& h, double m);

/// Scans a polar grid in the closed disk of radius r for a pair of points
/// that land closer than separation_tol while sitting farther apart than the
/// grid spacing — a witness against injectivity.  Deterministic scan order;
/// the first witness is reported.
struct ProbeResult {
    bool injective;
    Complex z1, z2;
    double image_dist;
};

ProbeResult univalence_probe(const std::function<Complex(Complex)>& f, double r, int radial,
                             int angular, double separation_tol, Exec exec = Exec::parallel);

}  // namespace biharm::landau
