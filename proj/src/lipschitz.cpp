#include "biharm/lipschitz.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "biharm/errors.hpp"
#include "biharm/solver.hpp"

namespace biharm::lipschitz {

Majorant Majorant::linear(double slope) {
    if (!(slope > 0.0)) throw DomainError("linear majorant needs a positive slope");
    Majorant m;
    m.kind_ = Kind::linear;
    m.slope_ = slope;
    return m;
}

Majorant Majorant::arctan() {
    Majorant m;
    m.kind_ = Kind::arctan;
    return m;
}

Majorant Majorant::table(std::vector<double> ts, std::vector<double> values) {
    if (ts.empty() || ts.size() != values.size())
        throw DomainError("table majorant needs matching, nonempty knot lists");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!(ts[i] > 0.0) || (i > 0 && !(ts[i] > ts[i - 1])))
            throw DomainError("table knots must be positive and strictly increasing");
        if (!(values[i] >= 0.0)) throw DomainError("table values must be nonnegative");
    }
    Majorant m;
    m.kind_ = Kind::table;
    m.ts_ = std::move(ts);
    m.values_ = std::move(values);
    return m;
}

double Majorant::eval(double t) const {
    if (!(t >= 0.0)) throw DomainError("majorant argument must be nonnegative");
    switch (kind_) {
        case Kind::linear: return slope_ * t;
        case Kind::arctan: return std::atan(t);
        case Kind::table: {
            if (t == 0.0) return 0.0;
            if (t <= ts_.front()) return values_.front() * t / ts_.front();
            if (t >= ts_.back()) return values_.back();
            const auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
            const std::size_t i = static_cast<std::size_t>(it - ts_.begin());
            const double w = (t - ts_[i - 1]) / (ts_[i] - ts_[i - 1]);
            return values_[i - 1] + w * (values_[i] - values_[i - 1]);
        }
    }
    return 0.0;
}

double Majorant::slope_limit() const {
    switch (kind_) {
        case Kind::linear: return slope_;
        case Kind::arctan: return 1.0;
        case Kind::table: return values_.front() / ts_.front();
    }
    return 0.0;
}

MajorantCheck majorant_validate(const Majorant& omega) {
    MajorantCheck out{true, {}};
    if (!(omega.slope_limit() < 1e12)) {
        out.ok = false;
        out.reasons.push_back("slope limit at 0 is not finite");
    }
    // Log-spaced grid over nine decades up to t = 2.
    constexpr int samples = 256;
    double prev_t = 0.0, prev_v = 0.0, prev_ratio = 0.0;
    bool have_prev = false;
    for (int i = 0; i < samples; ++i) {
        const double t = 2.0 * std::pow(10.0, -9.0 * (1.0 - static_cast<double>(i) / (samples - 1)));
        const double v = omega.eval(t);
        if (v < 0.0) {
            out.ok = false;
            out.reasons.push_back("negative value at t = " + std::to_string(t));
            break;
        }
        if (have_prev && v < prev_v - 1e-12 * std::max(1.0, prev_v)) {
            out.ok = false;
            out.reasons.push_back("not nondecreasing near t = " + std::to_string(t));
            break;
        }
        const double ratio = v / t;
        if (have_prev && ratio > prev_ratio * (1.0 + 1e-12) + 1e-15) {
            out.ok = false;
            out.reasons.push_back("omega(t)/t increases near t = " + std::to_string(t));
            break;
        }
        prev_t = t;
        prev_v = v;
        prev_ratio = ratio;
        have_prev = true;
    }
    (void)prev_t;
    if (omega.eval(0.0) != 0.0) {
        out.ok = false;
        out.reasons.push_back("omega(0) must be 0");
    }
    return out;
}

double thm5_constant(double l, const Majorant& omega, double phi1_sup, double g_sup) {
    if (!(l >= 0.0)) throw DomainError("modulus constant must be nonnegative");
    return 8.0 * l * omega.slope_limit() + 4.0 * l * omega.eval(2.0) + 2.0 * phi1_sup +
           (23.0 / 48.0) * g_sup;
}

LipschitzReport modulus_estimate(const ProblemSpec& spec, const Majorant& omega, int pair_count,
                                 std::uint64_t seed, const quad::DiskRule& rule, Exec exec) {
    if (pair_count < 1) throw DomainError("pair count must be positive");
    if (!spec.f_star.is_zero())
        throw HypothesisError("zero-boundary",
                              "the distance-ratio bound applies to solutions with vanishing "
                              "boundary values (f* == 0)");
    const MajorantCheck mc = majorant_validate(omega);
    if (!mc.ok)
        throw HypothesisError("majorant", "majorant axioms failed: " +
                                              (mc.reasons.empty() ? "unknown" : mc.reasons[0]));

    std::mt19937_64 engine(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    // Boundary pairs first so interior sampling extends the same stream.
    const BoundaryFourier phi1 = spec.phi1();
    double l_est = 0.0;
    for (int p = 0; p < defaults::boundary_pair_count; ++p) {
        const double t = two_pi * unit(engine);
        const double s = two_pi * unit(engine);
        const double chord = std::abs(Complex{std::cos(t), std::sin(t)} -
                                      Complex{std::cos(s), std::sin(s)});
        if (chord == 0.0) continue;
        l_est = std::max(l_est, std::abs(phi1.eval(t) - phi1.eval(s)) / omega.eval(chord));
    }
    l_est *= defaults::slope_inflation;

    std::vector<Complex> z1(pair_count), z2(pair_count);
    for (int p = 0; p < pair_count; ++p) {
        auto draw = [&]() {
            const double rad = defaults::interior_pair_radius * std::sqrt(unit(engine));
            const double ang = two_pi * unit(engine);
            return Complex{rad * std::cos(ang), rad * std::sin(ang)};
        };
        z1[p] = draw();
        z2[p] = draw();
    }

    std::vector<double> ratio(pair_count, 0.0);
    auto eval_pair = [&](std::size_t p) {
        const double d = std::abs(z1[p] - z2[p]);
        if (d == 0.0) {
            ratio[p] = 0.0;
            return;
        }
        const Complex f1 = solver::solve_eval(spec, z1[p], rule, exec);
        const Complex f2 = solver::solve_eval(spec, z2[p], rule, exec);
        ratio[p] = std::abs(f1 - f2) / omega.eval(d);
    };
    if (exec == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
        for (long long p = 0; p < static_cast<long long>(pair_count); ++p)
            eval_pair(static_cast<std::size_t>(p));
    } else {
        for (int p = 0; p < pair_count; ++p) eval_pair(p);
    }

    LipschitzReport report;
    std::size_t worst = 0;
    for (std::size_t p = 1; p < ratio.size(); ++p)
        if (ratio[p] > ratio[worst]) worst = p;
    report.sup_ratio = ratio.empty() ? 0.0 : ratio[worst];
    report.worst_z1 = z1[worst];
    report.worst_z2 = z2[worst];
    report.l_est = l_est;
    report.bound = thm5_constant(l_est, omega, spec.phi.boundary_sup(), spec.g.disk_sup());
    report.margin = report.bound - report.sup_ratio;
    report.pass = report.sup_ratio <= report.bound + 1e-6;
    return report;
}

}  // namespace biharm::lipschitz
