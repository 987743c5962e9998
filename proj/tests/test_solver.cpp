#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "biharm/errors.hpp"
#include "biharm/solver.hpp"

using namespace biharm;
using namespace biharm::solver;

namespace {

// g == 64: the solution with zero boundary data is (1 - |z|^2)^2.
ProblemSpec sharp_spec() {
    ProblemSpec s;
    s.g = BidegreePoly::constant(Complex{64.0, 0.0});
    return s;
}

// phi(e^{it}) = -e^{it}, so the shifted normal data is the constant -1 and
// the solution is 1 - |z|^2.
ProblemSpec biharmonic_spec() {
    ProblemSpec s;
    s.phi.set(1, Complex{-1.0, 0.0});
    return s;
}

// f* = e^{it}: the solution is the identity map.
ProblemSpec identity_spec() {
    ProblemSpec s;
    s.f_star.set(1, Complex{1.0, 0.0});
    return s;
}

ProblemSpec random_spec(std::mt19937_64& eng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ProblemSpec s;
    for (int n = -3; n <= 3; ++n) s.f_star.set(n, 0.3 * Complex{u(eng), u(eng)});
    for (int n = -2; n <= 2; ++n) s.phi.set(n, 0.3 * Complex{u(eng), u(eng)});
    for (int j = 0; j <= 2; ++j)
        for (int k = 0; k <= 2; ++k) s.g.set(j, k, 2.0 * Complex{u(eng), u(eng)});
    return s;
}

Complex random_interior(std::mt19937_64& eng, double r_max) {
    std::uniform_real_distribution<double> u(-r_max, r_max);
    for (;;) {
        const Complex z{u(eng), u(eng)};
        if (std::abs(z) <= r_max) return z;
    }
}

}  // namespace

TEST_CASE("harmonic extension front end matches the series closed form") {
    BoundaryFourier psi;
    psi.set(1, Complex{1.0, 0.0});
    psi.set(-2, Complex{0.0, 1.0});
    const Complex z{0.4, -0.3};
    const Complex want = z + Complex{0.0, 1.0} * std::conj(z) * std::conj(z);
    CHECK(std::abs(harmonic_extension(psi, z) - want) < 1e-15);
}

TEST_CASE("boundary correction vanishes for analytic data and at the center") {
    BoundaryFourier analytic;
    analytic.set(1, Complex{1.0, 0.0});
    analytic.set(4, Complex{0.5, 0.5});
    CHECK(boundary_correction_term(analytic, Complex{0.3, 0.2}) == Complex{0.0, 0.0});

    BoundaryFourier anti;
    anti.set(-1, Complex{1.0, 0.0});
    CHECK(boundary_correction_term(anti, Complex{0.0, 0.0}) == Complex{0.0, 0.0});
}

TEST_CASE("boundary correction closed form for a single negative mode") {
    BoundaryFourier anti;
    anti.set(-1, Complex{1.0, 0.0});
    for (Complex z : {Complex{0.5, 0.0}, Complex{0.2, -0.6}, Complex{-0.3, 0.1}}) {
        const Complex want = (1.0 - abs2(z)) * std::conj(z);
        CHECK(std::abs(boundary_correction_term(anti, z) - want) < 1e-15);
    }
}

TEST_CASE("boundary correction matches its defining circle integral") {
    std::mt19937_64 eng(301);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    BoundaryFourier f_star;
    for (int n = -5; n <= 3; ++n) f_star.set(n, 0.5 * Complex{u(eng), u(eng)});
    const auto rule = quad::CircleRule::make(512);
    for (Complex z : {Complex{0.3, 0.3}, Complex{-0.7, 0.1}}) {
        const Complex zbar = std::conj(z);
        const Complex integral = quad::circle_integrate(
            [&](double t) {
                const Complex eit = std::polar(1.0, t);
                const Complex den = 1.0 - zbar * eit;
                return zbar * eit * f_star.eval(t) * (1.0 - abs2(z)) / (den * den);
            },
            rule);
        CHECK(std::abs(integral / two_pi - boundary_correction_term(f_star, z)) < 1e-10);
    }
}

TEST_CASE("solution reproduces the quartic radial profile for constant forcing") {
    const ProblemSpec spec = sharp_spec();
    const auto rule = quad::DiskRule::make();
    for (Complex z : {Complex{0.0, 0.0}, Complex{0.5, 0.0}, Complex{0.0, -0.8},
                      Complex{0.35, 0.35}}) {
        const double c = 1.0 - abs2(z);
        const Complex f = solve_eval(spec, z, rule);
        CHECK(std::abs(f - Complex{c * c, 0.0}) < 1e-8);
    }
}

TEST_CASE("solution reproduces the quadratic radial profile for pure normal data") {
    const ProblemSpec spec = biharmonic_spec();
    const auto rule = quad::DiskRule::make();
    for (Complex z : {Complex{0.0, 0.0}, Complex{0.6, 0.0}, Complex{-0.2, 0.7}}) {
        const Complex f = solve_eval(spec, z, rule);
        CHECK(std::abs(f - Complex{1.0 - abs2(z), 0.0}) < 1e-10);
    }
}

TEST_CASE("solution reproduces the harmonic extension when only Dirichlet data is set") {
    const ProblemSpec spec = identity_spec();
    const auto rule = quad::DiskRule::make();
    for (Complex z : {Complex{0.3, 0.4}, Complex{-0.9, 0.05}}) {
        CHECK(std::abs(solve_eval(spec, z, rule) - z) < 1e-14);
    }
}

TEST_CASE("solution map is linear in the problem data") {
    std::mt19937_64 eng(302);
    const ProblemSpec s1 = random_spec(eng);
    const ProblemSpec s2 = random_spec(eng);
    const Complex alpha{0.7, -0.4};
    const Complex beta{-1.1, 0.2};
    const ProblemSpec combo = s1.scaled(alpha).plus(s2.scaled(beta));
    const auto rule = quad::DiskRule::make({64, 2, 8, 4});
    for (int it = 0; it < 10; ++it) {
        const Complex z = random_interior(eng, 0.9);
        const Complex direct = solve_eval(combo, z, rule);
        const Complex split = alpha * solve_eval(s1, z, rule) + beta * solve_eval(s2, z, rule);
        CHECK(std::abs(direct - split) < 1e-9);
    }
}

TEST_CASE("solution attains its boundary data near the circle") {
    const auto rule = quad::DiskRule::make();
    const double r = 0.995;
    for (const ProblemSpec& spec : {sharp_spec(), biharmonic_spec(), identity_spec()}) {
        for (double theta : {0.0, 1.0, 2.5, 4.8}) {
            const Complex z = std::polar(r, theta);
            const Complex f = solve_eval(spec, z, rule);
            CHECK(std::abs(f - spec.f_star.eval(theta)) <= 5e-2);
        }
    }
}

TEST_CASE("evaluation is refused outside the admissible radius") {
    const auto rule = quad::DiskRule::make({32, 1, 4, 2});
    CHECK_THROWS_AS(solve_eval(sharp_spec(), Complex{1.0, 0.0}, rule), DomainError);
    // with an active volume term the radius cap is tighter
    CHECK_THROWS_AS(solve_eval(sharp_spec(), Complex{0.9995, 0.0}, rule), DomainError);
    // without one, anywhere inside the open disk is fine
    CHECK_NOTHROW(solve_eval(identity_spec(), Complex{0.9995, 0.0}, rule));
    CHECK_THROWS_AS(solve_gradient(sharp_spec(), Complex{0.9995, 0.0}, rule), DomainError);
}

TEST_CASE("gradient closed form for the quartic radial profile") {
    const auto rule = quad::DiskRule::make();
    const GradResult g = solve_gradient(sharp_spec(), Complex{0.5, 0.0}, rule);
    // f = (1-|z|^2)^2: f_z = -2 conj(z)(1-|z|^2)
    CHECK(std::abs(g.f_z - Complex{-0.75, 0.0}) < 1e-8);
    CHECK(std::abs(g.f_zbar - Complex{-0.75, 0.0}) < 1e-8);
    CHECK(std::abs(g.op_norm - 1.5) < 1e-8);
    CHECK(std::abs(g.lambda) < 1e-8);
    CHECK(std::abs(g.jacobian) < 1e-8);
}

TEST_CASE("gradient closed form for the identity map") {
    const auto rule = quad::DiskRule::make();
    std::mt19937_64 eng(303);
    for (int it = 0; it < 5; ++it) {
        const Complex z = random_interior(eng, 0.9);
        const GradResult g = solve_gradient(identity_spec(), z, rule);
        CHECK(std::abs(g.f_z - Complex{1.0, 0.0}) < 1e-14);
        CHECK(std::abs(g.f_zbar) < 1e-14);
        CHECK(std::abs(g.jacobian - 1.0) < 1e-14);
        CHECK(std::abs(g.op_norm - 1.0) < 1e-14);
        CHECK(std::abs(g.lambda - 1.0) < 1e-14);
    }
}

TEST_CASE("gradient agrees with central differences of the solved field") {
    std::mt19937_64 eng(304);
    const auto rule = quad::DiskRule::make();
    for (int round = 0; round < 2; ++round) {
        const ProblemSpec spec = random_spec(eng);
        auto field = [&](Complex z) { return solve_eval(spec, z, rule); };
        for (int it = 0; it < 6; ++it) {
            const Complex z = random_interior(eng, 0.8);
            const GradResult direct = solve_gradient(spec, z, rule);
            const GradResult fd = fd_gradient(field, z);
            CHECK(std::abs(direct.f_z - fd.f_z) < 1e-5);
            CHECK(std::abs(direct.f_zbar - fd.f_zbar) < 1e-5);
        }
    }
}

TEST_CASE("finite-difference gradient on analytic fields") {
    const GradResult lin = fd_gradient([](Complex z) { return z; }, Complex{0.3, 0.1});
    CHECK(std::abs(lin.f_z - Complex{1.0, 0.0}) < 1e-8);
    CHECK(std::abs(lin.f_zbar) < 1e-8);

    const GradResult quad_field =
        fd_gradient([](Complex z) { return Complex{1.0 - abs2(z), 0.0}; }, Complex{0.3, 0.0});
    CHECK(std::abs(quad_field.f_z - Complex{-0.3, 0.0}) < 1e-8);
    CHECK(std::abs(quad_field.f_zbar - Complex{-0.3, 0.0}) < 1e-8);
}

TEST_CASE("bilaplacian residual is small for hand-checked forcings") {
    const auto rule = quad::DiskRule::make();
    // constant forcing
    CHECK(std::abs(biharmonic_residual(sharp_spec(), Complex{0.2, 0.0})) <= 1e-2);
    // no forcing
    CHECK(std::abs(biharmonic_residual(biharmonic_spec(), Complex{0.3, -0.2})) <= 1e-2);
    // radial quadratic forcing g = |w|^2
    ProblemSpec radial;
    radial.g.set(1, 1, Complex{1.0, 0.0});
    CHECK(std::abs(biharmonic_residual(radial, Complex{0.1, 0.1}, defaults::residual_step, rule)) <=
          5e-2);
}

TEST_CASE("bilaplacian residual is small for a full bidegree-two forcing") {
    std::mt19937_64 eng(305);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ProblemSpec spec;
    for (int j = 0; j <= 2; ++j)
        for (int k = 0; k <= 2; ++k) spec.g.set(j, k, Complex{u(eng), u(eng)});
    const auto rule = quad::DiskRule::make();
    const Complex z{0.15, -0.1};
    CHECK(std::abs(biharmonic_residual(spec, z, defaults::residual_step, rule)) <= 5e-2);
}

TEST_CASE("bilaplacian residual refuses stencils leaving the disk") {
    CHECK_THROWS_AS(biharmonic_residual(sharp_spec(), Complex{0.985, 0.0}), DomainError);
    CHECK_THROWS_AS(biharmonic_residual(biharmonic_spec(), Complex{0.999, 0.0}), DomainError);
}

TEST_CASE("grid supremum scan covers the center and the outer ring") {
    const double quartic =
        grid_sup_norm([](Complex z) { return 1.0 - abs2(z); }, 20, 48, 0.999);
    CHECK(quartic == 1.0);  // attained at the center row

    const double radius = grid_sup_norm([](Complex z) { return std::abs(z); }, 20, 48, 0.99);
    CHECK(std::abs(radius - 0.99) < 1e-12);
}
