#include "biharm/landau.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "biharm/defaults.hpp"
#include "biharm/errors.hpp"

namespace biharm::landau {

namespace {

void require_unit_interval(double r) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("radius must lie in [0, 1)");
}

void require_norms(const LandauInput& in) {
    if (!(in.m1 >= 0.0 && in.m2 >= 0.0 && in.m3 >= 0.0))
        throw DomainError("norm bounds must be nonnegative");
    if (!(in.m1 + in.m2 + in.m3 > 0.0))
        throw DomainError("at least one norm bound must be positive");
}

// Bisection on a decreasing residual: find hi with fn(hi) < 0, then halve.
struct BisectOut {
    double root, lo, hi, residual;
    int iterations;
};

BisectOut bisect_decreasing(const std::function<double(double)>& fn, double tol,
                            const char* what) {
    double lo = 0.0;
    if (!(fn(lo) > 0.0)) throw DomainError(std::string(what) + ": no positive value at 0");
    double hi = 0.5;
    while (hi < 1.0 - 1e-12 && fn(hi) >= 0.0) {
        lo = hi;
        hi = 0.5 * (hi + 1.0);
    }
    if (fn(hi) >= 0.0) throw DomainError(std::string(what) + ": no sign change inside [0, 1)");
    BisectOut out{0.0, lo, hi, 0.0, 0};
    double a = lo, b = hi;
    while (b - a > tol && out.iterations < defaults::bisect_max_iter) {
        const double mid = 0.5 * (a + b);
        const double v = fn(mid);
        ++out.iterations;
        if (v == 0.0) {
            a = b = mid;
            break;
        }
        (v > 0.0 ? a : b) = mid;
    }
    out.root = 0.5 * (a + b);
    out.residual = std::abs(fn(out.root));
    out.lo = lo;
    out.hi = hi;
    return out;
}

}  // namespace

double landau_lambda0(const LandauInput& in) {
    require_norms(in);
    return 1.0 / ((4.0 / pi) * (in.m1 + in.m2) + in.m1 + (23.0 / 24.0) * in.m3);
}

double landau_h(double r, const LandauInput& in) {
    require_unit_interval(r);
    const double lambda0 = landau_lambda0(in);
    const double one_minus_r = 1.0 - r;
    const double one_minus_r2 = 1.0 - r * r;
    const double loss = (4.0 * (in.m1 + in.m2) / pi) * r * (2.0 - r) / (one_minus_r * one_minus_r) +
                        2.0 * in.m2 * r +
                        r * r / one_minus_r2 * (2.0 * in.m1 + 4.0 * in.m2 / pi) +
                        (101.0 * in.m3 / 120.0) * r +
                        2.0 * in.m1 * r * (2.0 + 2.0 * r + r * r) / (one_minus_r * one_minus_r2);
    return lambda0 - loss;
}

double tau_eval(double r, const LandauInput& in) {
    require_unit_interval(r);
    require_norms(in);
    const double one_minus_r = 1.0 - r;
    const double one_minus_r2 = 1.0 - r * r;
    return (4.0 * (in.m1 + in.m2) / pi) * r * (2.0 - r) / (one_minus_r * one_minus_r) +
           2.0 * in.m1 * r * r / one_minus_r2 + 2.0 * in.m2 * r +
           4.0 * in.m2 * r * r / (pi * one_minus_r2) + in.m3 * r / 8.0 +
           43.0 * in.m3 * r / 60.0 +
           2.0 * in.m1 * r * (2.0 + 2.0 * r + r * r) / (one_minus_r * one_minus_r2);
}

LandauResult landau_solve(const LandauInput& in, double tol) {
    require_norms(in);
    if (!(in.m1 > 0.0))
        throw DomainError("the solution-norm bound M1 must be positive for a univalence radius");
    if (!(tol > 0.0)) throw DomainError("bisection tolerance must be positive");
    const BisectOut bis =
        bisect_decreasing([&](double r) { return landau_h(r, in); }, tol, "univalence profile");
    LandauResult res;
    res.r0 = bis.root;
    res.lambda0 = landau_lambda0(in);
    res.bracket_lo = bis.lo;
    res.bracket_hi = bis.hi;
    res.residual = bis.residual;
    res.iterations = bis.iterations;
    const double r0 = res.r0;
    res.m0 = r0 * (1.0 / ((8.0 / pi) * (in.m1 + in.m2) + 2.0 * in.m1 + (23.0 / 12.0) * in.m3) +
                   2.0 * in.m2 * r0 * r0 / (3.0 * pi * (1.0 - r0 * r0)) +
                   in.m1 * r0 * r0 / (3.0 * (1.0 - r0 * r0)));
    return res;
}

AaRadii aa_radii(double m) {
    if (!(m > 0.0)) throw DomainError("the map scale M must be positive");
    AaRadii out;
    const double lead = pi / (4.0 * m);
    {
        auto resid = [&](double r) {
            return lead - 2.0 * m * r - 4.0 * m * r / ((1.0 - r) * (1.0 - r));
        };
        const BisectOut b = bisect_decreasing(resid, defaults::bisect_tol, "first normalization");
        out.rho2 = b.root;
        out.resid2 = b.residual;
        out.big_r2 = lead * out.rho2 -
                     2.0 * m * (out.rho2 * out.rho2 * out.rho2 + out.rho2 * out.rho2) /
                         (1.0 - out.rho2);
    }
    {
        auto resid = [&](double r) {
            return lead - 4.0 * m * r / (1.0 - r) -
                   2.0 * m * r * (2.0 - r) / ((1.0 - r) * (1.0 - r));
        };
        const BisectOut b = bisect_decreasing(resid, defaults::bisect_tol, "second normalization");
        out.rho3 = b.root;
        out.resid3 = b.residual;
        out.big_r3 = lead * out.rho3 * out.rho3 -
                     2.0 * m * out.rho3 * out.rho3 * out.rho3 * out.rho3 / (1.0 - out.rho3);
    }
    return out;
}

double nu_eval(double s) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("nu is defined on 0 < s < 1");
    if (s < 1e-3) {
        const double s2 = s * s;
        return 1.0 / 3.0 - s2 / 15.0 - s2 * s2 / 105.0 - s2 * s2 * s2 / 315.0;
    }
    const double s2 = s * s;
    // log((1+s)/(1-s)) via log1p keeps full accuracy near both endpoints.
    const double l = std::log1p(s) - std::log1p(-s);
    return (1.0 - s2) / (8.0 * s2) * ((1.0 + s2) / (1.0 - s2) - (1.0 - s2) / (2.0 * s) * l);
}

CoeffCheck harmonic_coeff_check(const BoundaryFourier& h, double m) {
    if (!(m > 0.0)) throw DomainError("the map scale M must be positive");
    // Gate: the extension must actually map into the disk of radius M.
    if (h.boundary_sup() > m + defaults::gate_slack)
        throw HypothesisError("into-disk", "boundary data exceeds the map scale M");
    CoeffCheck out;
    out.a0_abs = std::abs(h.coeff(0));
    out.pair_bound = 4.0 * m / pi;
    out.worst_n = 1;
    out.worst_sum = 0.0;
    const double tol = 1e-12 * std::max(1.0, m);
    out.ok = out.a0_abs <= m + tol;
    for (int n = 1; n <= h.degree(); ++n) {
        // a_n = c_n, b_n = conj(c_{-n}) in the h = analytic + conj(analytic)
        // splitting; only the moduli matter here.
        const double pair = std::abs(h.coeff(n)) + std::abs(h.coeff(-n));
        if (pair > out.worst_sum) {
            out.worst_sum = pair;
            out.worst_n = n;
        }
        if (pair > out.pair_bound + tol) out.ok = false;
    }
    return out;
}

ProbeResult univalence_probe(const std::function<Complex(Complex)>& f, double r, int radial,
                             int angular, double separation_tol, Exec exec) {
    if (!(r > 0.0)) throw DomainError("probe radius must be positive");
    if (radial < 1 || angular < 1) throw DomainError("probe grid dimensions must be positive");
    if (!(separation_tol > 0.0)) throw DomainError("separation tolerance must be positive");

    std::vector<Complex> zs;
    zs.reserve(static_cast<std::size_t>(radial) * angular + 1);
    zs.push_back(Complex{0.0, 0.0});
    for (int i = 1; i <= radial; ++i) {
        const double rho = r * static_cast<double>(i) / radial;
        for (int k = 0; k < angular; ++k) {
            const double t = two_pi * static_cast<double>(k) / angular;
            zs.push_back(Complex{rho * std::cos(t), rho * std::sin(t)});
        }
    }
    std::vector<Complex> images(zs.size());
    auto eval_one = [&](std::size_t i) { images[i] = f(zs[i]); };
    if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
        for (long long i = 0; i < static_cast<long long>(zs.size()); ++i)
            eval_one(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < zs.size(); ++i) eval_one(i);
    }

    const double spacing = std::max(r / radial, two_pi * r / angular);
    const std::size_t n = zs.size();
    // First witness in lexicographic (i, j) order; the row scan parallelizes
    // with a lowest-index reduction so the answer is deterministic.
    ScoredIndex hit = block_max(
        n,
        [&](std::size_t i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (std::abs(zs[i] - zs[j]) <= spacing) continue;
                if (std::abs(images[i] - images[j]) < separation_tol)
                    return static_cast<double>(n - j);  // larger = earlier j
            }
            return 0.0;
        },
        exec);

    ProbeResult out;
    if (hit.value == 0.0) {
        out.injective = true;
        out.z1 = out.z2 = Complex{};
        out.image_dist = 0.0;
        return out;
    }
    // Recover the first row with a witness (lowest i with nonzero score wins
    // only if scores tie; rescan serially from the reported row start).
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(zs[i] - zs[j]) <= spacing) continue;
            if (std::abs(images[i] - images[j]) < separation_tol) {
                out.injective = false;
                out.z1 = zs[i];
                out.z2 = zs[j];
                out.image_dist = std::abs(images[i] - images[j]);
                return out;
            }
        }
    }
    out.injective = true;
    out.z1 = out.z2 = Complex{};
    out.image_dist = 0.0;
    return out;
}

}  // namespace biharm::landau
