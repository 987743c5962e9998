#include "biharm/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace biharm::quad {

namespace detail {

void throw_nonfinite_sample() {
    throw DomainError("integrand produced a non-finite sample");
}

}  // namespace detail

const GaussLegendre& gauss_legendre(int order) {
    if (order < 1) throw DomainError("Gauss-Legendre order must be positive");
    static std::map<int, GaussLegendre> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    GaussLegendre gl;
    gl.x.resize(order);
    gl.w.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based starting guess, then Newton on P_n.
        double x = std::cos(pi * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        gl.x[i] = -x;
        gl.x[order - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        gl.w[i] = w;
        gl.w[order - 1 - i] = w;
    }
    return cache.emplace(order, std::move(gl)).first->second;
}

CircleRule CircleRule::make(int nodes) {
    if (nodes < 1) throw DomainError("circle rule needs at least one node");
    CircleRule rule;
    rule.nodes = nodes;
    rule.theta.resize(nodes);
    for (int k = 0; k < nodes; ++k) rule.theta[k] = two_pi * static_cast<double>(k) / nodes;
    return rule;
}

DiskRule DiskRule::make(const DiskRuleParams& p) {
    if (p.angular < 1 || p.radial_panels < 1 || p.panel_order < 1 || p.grading_levels < 0)
        throw DomainError("disk rule parameters must be positive (grading may be zero)");

    DiskRule rule;
    rule.params = p;

    // Panel breakpoints: radial_panels uniform panels of (0,1), with the
    // innermost panel replaced by a dyadic cascade toward 0.
    std::vector<double> edges;
    const double h0 = 1.0 / p.radial_panels;
    edges.push_back(0.0);
    for (int l = p.grading_levels; l >= 1; --l) edges.push_back(h0 * std::ldexp(1.0, -l));
    for (int i = 1; i <= p.radial_panels; ++i) edges.push_back(h0 * i);

    const GaussLegendre& gl = gauss_legendre(p.panel_order);
    for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
        const double a = edges[e], b = edges[e + 1];
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int j = 0; j < p.panel_order; ++j) {
            rule.rho.push_back(mid + half * gl.x[j]);
            rule.rho_weight.push_back(half * gl.w[j]);
        }
    }

    rule.cos_theta.resize(p.angular);
    rule.sin_theta.resize(p.angular);
    for (int k = 0; k < p.angular; ++k) {
        const double t = two_pi * static_cast<double>(k) / p.angular;
        rule.cos_theta[k] = std::cos(t);
        rule.sin_theta[k] = std::sin(t);
    }
    rule.angular_weight = two_pi / p.angular;
    return rule;
}

DiskRule DiskRule::doubled() const {
    DiskRuleParams p = params;
    p.angular *= 2;
    p.panel_order *= 2;
    return make(p);
}

}  // namespace biharm::quad
