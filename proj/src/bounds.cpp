#include "biharm/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "biharm/errors.hpp"
#include "biharm/kernels.hpp"

namespace biharm::bounds {

namespace {

constexpr double boundary_snap = 1e-12;  // |z| within this of 1 reads the boundary model

double circle_sup(const BoundaryFourier& series) { return series.boundary_sup(); }

// The Fourier-closed-form part of the solution (everything except the volume
// term).  Polynomial in z and conj(z), so stable arbitrarily close to the
// circle; used where the pulled-back volume quadrature is not available.
Complex fourier_part(const ProblemSpec& spec, Complex z) {
    const double one_minus_z2 = 1.0 - abs2(z);
    return spec.f_star.extension(z) + solver::boundary_correction_term(spec.f_star, z) -
           one_minus_z2 * spec.phi1().extension(z);
}

Complex eval_solution(const ProblemSpec& spec, Complex z, const quad::DiskRule& rule, Exec exec) {
    if (std::abs(z) >= 1.0 - boundary_snap) return spec.f_star.eval(std::arg(z));
    return solver::solve_eval(spec, z, rule, exec);
}

struct GridPoint {
    Complex z;
};

std::vector<GridPoint> polar_grid(int radial, int angular, double r_max) {
    if (radial < 1 || angular < 1) throw DomainError("grid dimensions must be positive");
    if (!(r_max >= 0.0 && r_max <= 1.0)) throw DomainError("grid radius must lie in [0, 1]");
    std::vector<GridPoint> pts;
    pts.reserve(static_cast<std::size_t>(radial) * angular);
    for (int i = 0; i < radial; ++i) {
        const double r = radial > 1 ? r_max * i / (radial - 1) : r_max;
        for (int k = 0; k < angular; ++k) {
            const double t = two_pi * static_cast<double>(k) / angular;
            pts.push_back({Complex{r * std::cos(t), r * std::sin(t)}});
        }
    }
    return pts;
}

void finish_report(BoundReport& report) {
    report.min_margin = report.samples.empty() ? 0.0 : report.samples.front().margin;
    report.worst_index = 0;
    for (std::size_t i = 0; i < report.samples.size(); ++i) {
        if (report.samples[i].margin < report.min_margin) {
            report.min_margin = report.samples[i].margin;
            report.worst_index = i;
        }
    }
    if (!report.samples.empty()) report.worst_z = report.samples[report.worst_index].z;
    report.violated = report.min_margin < -defaults::report_tol;
}

template <typename F>
void fill_samples(BoundReport& report, const std::vector<GridPoint>& pts, F&& check, Exec exec) {
    report.samples.resize(pts.size());
    auto fill = [&](std::size_t i) {
        const PointCheck pc = check(pts[i].z);
        report.samples[i] = {pts[i].z, pc.lhs, pc.rhs, pc.rhs - pc.lhs};
    };
    if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
        for (long long i = 0; i < static_cast<long long>(pts.size()); ++i)
            fill(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < pts.size(); ++i) fill(i);
    }
    finish_report(report);
}

}  // namespace

const char* bound_name(BoundId id) {
    switch (id) {
        case BoundId::thm1: return "thm1";
        case BoundId::thm3: return "thm3";
        case BoundId::heinz: return "heinz";
        case BoundId::pavlovic: return "pavlovic";
        case BoundId::colonna: return "colonna";
        case BoundId::green_mass: return "green-mass";
        case BoundId::grad_green_mass: return "grad-green-mass";
        case BoundId::boundary_schwarz: return "boundary-schwarz";
    }
    return "unknown";
}

NormSet estimate_norms(const ProblemSpec& spec, int radial, int angular, double r_max,
                       const quad::DiskRule& rule, Exec exec) {
    NormSet n;
    const double fstar_sup = circle_sup(spec.f_star);
    // |P_psi| is subharmonic and P_{|psi|} is harmonic, so both sups sit on
    // the circle where each equals |psi|.
    n.p_fstar = fstar_sup;
    n.p_abs_fstar = fstar_sup;
    n.phi_sup = circle_sup(spec.phi);
    n.p_phi1 = n.phi_sup;  // |phi1| == |phi| pointwise on the circle
    n.g_sup = spec.g.disk_sup();
    const double interior = solver::grid_sup_norm(
        [&](Complex z) { return std::abs(solver::solve_eval(spec, z, rule, exec)); }, radial,
        angular, r_max, exec);
    n.f_sup = std::max(fstar_sup, interior);
    return n;
}

PointCheck thm1_check(const ProblemSpec& spec, Complex z, const NormSet& norms,
                      const quad::DiskRule& rule, Exec exec) {
    const double t = std::abs(z);
    if (t > 1.0 + boundary_snap)
        throw DomainError("pointwise bound is only defined on the closed disk");
    const Complex fz = eval_solution(spec, z, rule, exec);
    const double one_minus_t2 = std::max(0.0, 1.0 - t * t);
    const double denom = 1.0 + t * t;
    const Complex centered = fz - one_minus_t2 / denom * spec.f_star.coeff(0) +
                             one_minus_t2 * one_minus_t2 / denom * spec.phi1().coeff(0);
    const double at = std::atan(t);
    PointCheck pc;
    pc.lhs = std::abs(centered);
    pc.rhs = (4.0 / pi) * norms.p_fstar * at + (4.0 / pi) * norms.p_phi1 * one_minus_t2 * at +
             norms.p_abs_fstar * t + norms.g_sup * one_minus_t2 * one_minus_t2 / 64.0;
    return pc;
}

PointCheck thm3_check(const ProblemSpec& spec, Complex z, const NormSet& norms,
                      const quad::DiskRule& rule, Exec exec) {
    if (norms.f_sup > 1.0 + defaults::gate_slack)
        throw HypothesisError("into-disk",
                              "gradient bound requires the solution to map into the closed "
                              "unit disk (estimated sup " +
                                  std::to_string(norms.f_sup) + ")");
    const double t = std::abs(z);
    if (!(t < 1.0)) throw DomainError("gradient bound is evaluated at interior points only");
    const solver::GradResult grad = solver::solve_gradient(spec, z, rule, exec);
    PointCheck pc;
    pc.lhs = grad.op_norm;
    pc.rhs = (4.0 + pi * (1.0 + 2.0 * t + 3.0 * t * t)) / (pi * (1.0 - t * t)) * norms.f_sup +
             (2.0 * t + 4.0 / pi) * norms.phi_sup + (23.0 / 24.0) * norms.g_sup;
    return pc;
}

HarmonicClassics harmonic_classics(const BoundaryFourier& h, Complex z) {
    const double t = std::abs(z);
    if (!(t < 1.0)) throw DomainError("comparators are evaluated at interior points only");
    if (circle_sup(h) > 1.0 + defaults::gate_slack)
        throw HypothesisError("into-disk", "comparators require a harmonic map into the "
                                           "closed unit disk");
    HarmonicClassics out;
    const Complex hz = h.extension(z);
    const Complex h0 = h.coeff(0);
    out.h_abs = std::abs(hz);
    out.heinz_rhs = (4.0 / pi) * std::atan(t);
    out.pavlovic_lhs = std::abs(hz - (1.0 - t * t) / (1.0 + t * t) * h0);
    out.pavlovic_rhs = out.heinz_rhs;
    out.colonna_lhs = std::abs(h.extension_dz(z)) + std::abs(h.extension_dzbar(z));
    out.colonna_rhs = (4.0 / pi) / (1.0 - t * t);
    out.kra_rhs = (t + std::abs(h0)) / (1.0 + t * std::abs(h0));
    return out;
}

MassCheck green_mass_identity(Complex z, const quad::DiskRule& rule, Exec exec) {
    // G <= 0, so |G| integrates to minus the plain integral.
    const Complex total =
        quad::disk_integrate_green(z, [](Complex) { return Complex{1.0, 0.0}; }, rule, exec);
    MassCheck mc;
    mc.numeric = -total.real() / (16.0 * pi);
    const double c = 1.0 - abs2(z);
    mc.closed_form = c * c / 64.0;
    return mc;
}

double grad_green_mass(Complex z, const quad::DiskRule& rule, Exec exec) {
    if (!(abs2(z) < 1.0)) throw DomainError("z must lie strictly inside the unit disk");
    const double c1 = 1.0 - abs2(z);
    const double c2 = c1 * c1;
    const Complex zbar = std::conj(z);
    const std::size_t na = rule.cos_theta.size();

    std::vector<double> log_ratio(rule.rho.size());
    for (std::size_t i = 0; i < log_ratio.size(); ++i)
        log_ratio[i] = -std::log(rule.rho[i] * rule.rho[i]);

    const double total = block_sum<double>(
        rule.node_count(),
        [&](std::size_t idx) {
            const std::size_t i = idx / na;
            const std::size_t k = idx % na;
            const double r = rule.rho[i];
            const Complex zeta{r * rule.cos_theta[k], r * rule.sin_theta[k]};
            const Complex den = 1.0 - zbar * zeta;
            const double dn = abs2(den);
            const Complex w = (z - zeta) / den;
            const Complex diff = z - w;
            const double w_defect = abs2(w) - 1.0;
            const Complex gz = std::conj(diff) * log_ratio[i] +
                               std::conj(diff) * w_defect / (1.0 - z * std::conj(w)) -
                               zbar * w_defect;
            const Complex gzbar =
                diff * log_ratio[i] + diff * w_defect / (1.0 - w * zbar) - z * w_defect;
            return rule.rho_weight[i] * r * (std::abs(gz) + std::abs(gzbar)) * (c2 / (dn * dn));
        },
        exec);
    return total * rule.angular_weight / (8.0 * pi);
}

std::vector<double> default_schwarz_r_list() {
    std::vector<double> rs;
    for (int k = 4; k <= 16; ++k) rs.push_back(1.0 - std::ldexp(1.0, -k));
    return rs;
}

SchwarzReport boundary_schwarz_estimate(const ProblemSpec& spec, Complex eta,
                                        const std::vector<double>& r_list,
                                        const quad::DiskRule& rule, Exec exec) {
    if (std::abs(std::abs(eta) - 1.0) > 1e-9)
        throw DomainError("eta must be a unimodular boundary point");
    eta /= std::abs(eta);
    if (r_list.empty()) throw DomainError("r_list must not be empty");
    for (double r : r_list)
        if (!(r >= 0.0 && r < 1.0)) throw DomainError("r_list entries must lie in [0, 1)");

    // Hypothesis gates, in reporting order.
    for (int n = 1; n <= spec.f_star.degree(); ++n)
        if (std::abs(spec.f_star.coeff(-n)) > 1e-13)
            throw HypothesisError("analytic-data",
                                  "boundary lower bound requires analytic Dirichlet data "
                                  "(no negative Fourier indices)");
    if (circle_sup(spec.f_star) > 1.0 + defaults::gate_slack)
        throw HypothesisError("into-disk", "Dirichlet data must be bounded by 1 in modulus");
    const double phi1_sup = circle_sup(spec.phi);
    if (!(phi1_sup < 0.5))
        throw HypothesisError("small-phi",
                              "normal-derivative data must satisfy ||P_phi1|| < 1/2");
    const double p0 = std::abs(spec.f_star.coeff(0));
    const double cap = (1.0 - 2.0 * phi1_sup) / (1.0 + 2.0 * phi1_sup);
    if (!(p0 < cap))
        throw HypothesisError("center-value",
                              "|P(0)| must stay below (1 - 2||P_phi1||)/(1 + 2||P_phi1||)");

    SchwarzReport report;
    report.r_list = r_list;
    const double t_eta = std::arg(eta);
    const Complex f_eta = spec.f_star.eval(t_eta);

    const double r_max = *std::max_element(r_list.begin(), r_list.end());
    {
        // Limit hypothesis |f(r eta)| -> 1, sanity-checked at the largest r.
        const Complex near = fourier_part(spec, r_max * eta);
        if (std::abs(1.0 - std::abs(near)) > 0.01)
            throw HypothesisError("radial-limit",
                                  "|f(r eta)| must approach 1 along the radius");
    }

    report.quotients.resize(r_list.size());
    for (std::size_t i = 0; i < r_list.size(); ++i) {
        const double r = r_list[i];
        const Complex z = r * eta;
        // Past the volume quadrature's validity the Fourier part alone is
        // used; the dropped term is bounded by ||g|| (1-r)(1+r)^2/64 and
        // vanishes in the limit the estimator targets.
        Complex fz;
        if (spec.g.is_zero() || r > defaults::solve_radius_limit)
            fz = fourier_part(spec, z);
        else
            fz = solver::solve_eval(spec, z, rule, exec);
        report.quotients[i] = std::abs(f_eta - fz) / (1.0 - r);
    }

    const std::size_t tail_start = r_list.size() / 2;
    report.liminf_est = report.quotients[tail_start];
    for (std::size_t i = tail_start; i < r_list.size(); ++i)
        report.liminf_est = std::min(report.liminf_est, report.quotients[i]);

    report.rhs = (1.0 - p0) / (1.0 + p0) - 2.0 * phi1_sup;
    report.margin = report.liminf_est - report.rhs;
    report.violated = report.margin < -defaults::schwarz_tol;
    return report;
}

BoundReport grid_verify(BoundId id, const ProblemSpec* spec, int radial, int angular,
                        double r_max, const quad::DiskRule& rule, Exec exec) {
    BoundReport report;
    report.bound = id;
    const std::vector<GridPoint> pts = polar_grid(radial, angular, r_max);

    switch (id) {
        case BoundId::thm1: {
            if (!spec) throw DomainError("this bound needs a problem specification");
            const NormSet norms = estimate_norms(*spec, radial, angular, r_max, rule, exec);
            fill_samples(
                report, pts,
                [&](Complex z) { return thm1_check(*spec, z, norms, rule, exec); }, exec);
            break;
        }
        case BoundId::thm3: {
            if (!spec) throw DomainError("this bound needs a problem specification");
            const NormSet norms = estimate_norms(*spec, radial, angular, r_max, rule, exec);
            if (norms.f_sup > 1.0 + defaults::gate_slack)
                throw HypothesisError("into-disk",
                                      "gradient bound requires the solution to map into the "
                                      "closed unit disk (estimated sup " +
                                          std::to_string(norms.f_sup) + ")");
            fill_samples(
                report, pts,
                [&](Complex z) { return thm3_check(*spec, z, norms, rule, exec); }, exec);
            break;
        }
        case BoundId::heinz:
        case BoundId::pavlovic:
        case BoundId::colonna: {
            if (!spec) throw DomainError("this bound needs a problem specification");
            const BoundaryFourier& h = spec->f_star;
            if (id == BoundId::heinz && std::abs(h.coeff(0)) > boundary_snap)
                throw HypothesisError("centered",
                                      "this comparator requires h(0) = 0 (zero mean "
                                      "boundary data)");
            fill_samples(
                report, pts,
                [&](Complex z) {
                    const HarmonicClassics c = harmonic_classics(h, z);
                    PointCheck pc;
                    if (id == BoundId::heinz) {
                        pc.lhs = c.h_abs;
                        pc.rhs = c.heinz_rhs;
                    } else if (id == BoundId::pavlovic) {
                        pc.lhs = c.pavlovic_lhs;
                        pc.rhs = c.pavlovic_rhs;
                    } else {
                        pc.lhs = c.colonna_lhs;
                        pc.rhs = c.colonna_rhs;
                    }
                    return pc;
                },
                exec);
            break;
        }
        case BoundId::green_mass: {
            fill_samples(
                report, pts,
                [&](Complex z) {
                    const MassCheck mc = green_mass_identity(z, rule, exec);
                    return PointCheck{mc.numeric, mc.closed_form};
                },
                exec);
            // Identity semantics: deviation in either direction is a miss.
            for (BoundSample& s : report.samples) s.margin = -std::abs(s.lhs - s.rhs);
            finish_report(report);
            break;
        }
        case BoundId::grad_green_mass: {
            fill_samples(
                report, pts,
                [&](Complex z) {
                    return PointCheck{grad_green_mass(z, rule, exec), 23.0 / 24.0};
                },
                exec);
            break;
        }
        case BoundId::boundary_schwarz:
            throw DomainError("the boundary lower bound has a dedicated radial estimator; "
                              "grid sweeps do not apply");
    }
    return report;
}

}  // namespace biharm::bounds
