#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "biharm/problem.hpp"
#include "biharm/quadrature.hpp"

namespace biharm::lipschitz {

/// Majorant (modulus of continuity): omega(0) = 0, nondecreasing, with
/// omega(t)/t nonincreasing and c = limsup_{t->0} omega(t)/t finite.
class Majorant {
public:
    enum class Kind { linear, arctan, table };

    static Majorant linear(double slope);
    static Majorant arctan();
    /// Piecewise linear through (0,0) and the given knots; constant beyond
    /// the last knot.  Knots must be strictly increasing and positive.
    static Majorant table(std::vector<double> ts, std::vector<double> values);

    double eval(double t) const;
    /// c = limsup_{t->0+} omega(t)/t (slope of the first segment).
    double slope_limit() const;
    Kind kind() const { return kind_; }

private:
    Kind kind_ = Kind::linear;
    double slope_ = 1.0;
    std::vector<double> ts_, values_;
};

struct MajorantCheck {
    bool ok;
    std::vector<std::string> reasons;
};

/// Checks the majorant axioms on a log-spaced grid in (1e-9, 2].
MajorantCheck majorant_validate(const Majorant& omega);

/// The distance-ratio bound for solutions with vanishing boundary values and
/// omega-continuous normal-derivative data of constant L:
///   8 L c + 4 L omega(2) + 2 ||P_phi1|| + (23/48) ||g||.
double thm5_constant(double l, const Majorant& omega, double phi1_sup, double g_sup);

struct LipschitzReport {
    double l_est;      // sampled boundary modulus constant of phi1, inflated
    double bound;      // thm5_constant at l_est
    double sup_ratio;  // max |f(z1)-f(z2)| / omega(|z1-z2|) over the pairs
    double margin;     // bound - sup_ratio
    bool pass;         // sup_ratio <= bound + report_tol-scale slack
    Complex worst_z1, worst_z2;
};

/// Samples the distance-ratio bound: boundary pairs estimate the modulus
/// constant of phi1 (inflated by defaults::slope_inflation), interior pairs
/// inside |z| <= defaults::interior_pair_radius probe the ratio itself.
/// Requires f* == 0; reproducible for a fixed seed, and extending pair_count
/// with the same seed only extends the sampled sequence.
LipschitzReport modulus_estimate(const ProblemSpec& spec, const Majorant& omega, int pair_count,
                                 std::uint64_t seed, const quad::DiskRule& rule,
                                 Exec exec = Exec::parallel);

}  // namespace biharm::lipschitz
