#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "biharm/defaults.hpp"
#include "biharm/errors.hpp"
#include "biharm/kernels.hpp"
#include "biharm/parallel.hpp"
#include "biharm/types.hpp"

namespace biharm::quad {

/// Gauss-Legendre nodes and weights on [-1, 1], computed by Newton iteration
/// on the Legendre recurrence.  Results are cached per order.
struct GaussLegendre {
    std::vector<double> x;
    std::vector<double> w;
};
const GaussLegendre& gauss_legendre(int order);

/// Uniform (periodic trapezoid) rule on [0, 2pi); exact for trigonometric
/// polynomials of degree < nodes/2 up to roundoff.
struct CircleRule {
    int nodes = 0;
    std::vector<double> theta;

    static CircleRule make(int nodes);
    CircleRule doubled() const { return make(2 * nodes); }
};

/// Tensor rule on the unit disk: composite Gauss-Legendre radial panels times
/// an angular trapezoid.  The innermost radial panel is subdivided dyadically
/// toward rho = 0 (grading_levels halvings) so rho^2 log rho profiles
/// integrate cleanly; no node sits at rho = 0 exactly.
struct DiskRuleParams {
    int angular = defaults::angular_nodes;
    int radial_panels = defaults::radial_panels;
    int panel_order = defaults::panel_order;
    int grading_levels = defaults::grading_levels;
};

struct DiskRule {
    DiskRuleParams params;
    std::vector<double> rho;         // radial nodes, ascending, all in (0,1)
    std::vector<double> rho_weight;  // matching panel-scaled GL weights
    std::vector<double> cos_theta;   // angular node cosines
    std::vector<double> sin_theta;   // angular node sines
    double angular_weight = 0.0;     // 2pi / angular

    static DiskRule make(const DiskRuleParams& p = {});
    /// Refinement step: doubled angular nodes and panel order, same panels.
    DiskRule doubled() const;
    std::size_t node_count() const { return rho.size() * cos_theta.size(); }
};

namespace detail {
[[noreturn]] void throw_nonfinite_sample();
}

/// Int_0^{2pi} f(theta) dtheta on the given rule.
template <typename F>
Complex circle_integrate(F&& f, const CircleRule& rule, Exec exec = Exec::parallel) {
    const double w = two_pi / rule.nodes;
    Complex s = block_sum<Complex>(
        static_cast<std::size_t>(rule.nodes),
        [&](std::size_t k) { return f(rule.theta[k]); }, exec);
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) detail::throw_nonfinite_sample();
    return w * s;
}

/// Int_D f(w) dA(w) on the given rule (dA = rho drho dtheta).
template <typename F>
Complex disk_integrate(F&& f, const DiskRule& rule, Exec exec = Exec::parallel) {
    const std::size_t na = rule.cos_theta.size();
    Complex s = block_sum<Complex>(
        rule.node_count(),
        [&](std::size_t idx) {
            const std::size_t i = idx / na;
            const std::size_t k = idx % na;
            const double r = rule.rho[i];
            const Complex w{r * rule.cos_theta[k], r * rule.sin_theta[k]};
            return rule.rho_weight[i] * r * f(w);
        },
        exec);
    s *= rule.angular_weight;
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) detail::throw_nonfinite_sample();
    return s;
}

/// Int_D g(w) G(z,w) dA(w) for an interior point z, computed in the Moebius
/// variable zeta = (z-w)/(1 - conj(z) w).  The substitution concentrates the
/// kernel's nonsmooth profile at zeta = 0 where the graded radial panels
/// live; the area element picks up (1-|z|^2)^2 / |1 - conj(z) zeta|^4.  The
/// per-node cost is log-free: the radial core of the pulled-back kernel
/// depends only on rho and is precomputed.
template <typename G>
Complex disk_integrate_green(Complex z, G&& g, const DiskRule& rule, Exec exec = Exec::parallel) {
    if (!(abs2(z) < 1.0)) throw DomainError("z must lie strictly inside the unit disk");
    const double c1 = 1.0 - abs2(z);
    const double c4 = c1 * c1 * c1 * c1;
    const Complex zbar = std::conj(z);
    const std::size_t na = rule.cos_theta.size();

    std::vector<double> core(rule.rho.size());
    for (std::size_t i = 0; i < core.size(); ++i) {
        const double r2 = rule.rho[i] * rule.rho[i];
        core[i] = r2 * std::log(r2) + 1.0 - r2;
    }

    Complex s = block_sum<Complex>(
        rule.node_count(),
        [&](std::size_t idx) {
            const std::size_t i = idx / na;
            const std::size_t k = idx % na;
            const double r = rule.rho[i];
            const Complex zeta{r * rule.cos_theta[k], r * rule.sin_theta[k]};
            const Complex den = 1.0 - zbar * zeta;
            const double dn = abs2(den);
            const Complex w = (z - zeta) / den;
            // G(z,w(zeta)) * |dw/dzeta|^2 = -c1^4 * core / dn^3
            return rule.rho_weight[i] * r * g(w) * (-c4 * core[i] / (dn * dn * dn));
        },
        exec);
    s *= rule.angular_weight;
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) detail::throw_nonfinite_sample();
    return s;
}

/// Int_D g(w) G_z(z,w) dA(w) and Int_D g(w) G_zbar(z,w) dA(w) in one pass
/// over the same Moebius-pulled-back rule as disk_integrate_green.
struct GreenGradientIntegrals {
    Complex d_z;
    Complex d_zbar;
};

template <typename G>
GreenGradientIntegrals disk_integrate_green_gradient(Complex z, G&& g, const DiskRule& rule,
                                                     Exec exec = Exec::parallel) {
    if (!(abs2(z) < 1.0)) throw DomainError("z must lie strictly inside the unit disk");
    const double c1 = 1.0 - abs2(z);
    const double c2 = c1 * c1;
    const Complex zbar = std::conj(z);
    const std::size_t na = rule.cos_theta.size();

    // log|(1 - z conj w)/(z - w)|^2 pulled back is -log|zeta|^2: radial only.
    std::vector<double> log_ratio(rule.rho.size());
    for (std::size_t i = 0; i < log_ratio.size(); ++i)
        log_ratio[i] = -std::log(rule.rho[i] * rule.rho[i]);

    struct Pair {
        Complex a{}, b{};
        Pair& operator+=(const Pair& o) {
            a += o.a;
            b += o.b;
            return *this;
        }
    };

    Pair s = block_sum<Pair>(
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
            const Complex common = rule.rho_weight[i] * r * g(w) * (c2 / (dn * dn));
            return Pair{common * gz, common * gzbar};
        },
        exec);
    GreenGradientIntegrals out{s.a * rule.angular_weight, s.b * rule.angular_weight};
    if (!std::isfinite(out.d_z.real()) || !std::isfinite(out.d_z.imag()) ||
        !std::isfinite(out.d_zbar.real()) || !std::isfinite(out.d_zbar.imag()))
        detail::throw_nonfinite_sample();
    return out;
}

/// One refinement step (value and the change from the previous level).
struct RefineStep {
    Complex value;
    double est_error;
};

struct RefineResult {
    Complex value;
    double est_error;
    std::vector<RefineStep> history;
};

/// Doubles the rule until two successive evaluations agree within tol.
/// Throws ConvergenceError carrying the best value when the cap is hit.
template <typename Rule, typename F>
RefineResult refine_until(const Rule& base, F&& fn, double tol,
                          int max_doublings = defaults::max_doublings) {
    if (!(tol > 0.0)) throw DomainError("refinement tolerance must be positive");
    if (max_doublings < 1) throw DomainError("max_doublings must be at least 1");
    RefineResult out;
    Rule rule = base;
    Complex prev = fn(rule);
    for (int level = 1; level <= max_doublings; ++level) {
        rule = rule.doubled();
        const Complex cur = fn(rule);
        const double est = std::abs(cur - prev);
        out.history.push_back({cur, est});
        if (est < tol) {
            out.value = cur;
            out.est_error = est;
            return out;
        }
        prev = cur;
    }
    throw ConvergenceError("refinement did not reach the requested tolerance", prev,
                           out.history.empty() ? 0.0 : out.history.back().est_error);
}

}  // namespace biharm::quad
