#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "biharm/errors.hpp"
#include "biharm/lipschitz.hpp"
#include "biharm/solver.hpp"

using namespace biharm;
using namespace biharm::lipschitz;

namespace {

ProblemSpec sharp_spec() {
    ProblemSpec s;
    s.g = BidegreePoly::constant(Complex{64.0, 0.0});
    return s;
}

ProblemSpec biharmonic_spec() {
    ProblemSpec s;
    s.phi.set(1, Complex{-1.0, 0.0});
    return s;
}

// Vanishing boundary values, bounded normal data, small polynomial load.
ProblemSpec random_zero_boundary_spec(std::mt19937_64& eng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ProblemSpec s;
    for (int n = -4; n <= 4; ++n) s.phi.set(n, Complex{u(eng), u(eng)});
    s.phi = s.phi.scaled(Complex{1.0, 0.0} * (1.0 / std::max(s.phi.boundary_sup(), 1e-9)));
    for (int j = 0; j <= 2; ++j)
        for (int k = 0; k <= 2; ++k) s.g.set(j, k, 0.5 * Complex{u(eng), u(eng)});
    return s;
}

quad::DiskRule sweep_rule() { return quad::DiskRule::make({48, 2, 8, 4}); }

}  // namespace

TEST_CASE("majorant evaluation for the three kinds") {
    const Majorant lin = Majorant::linear(2.0);
    CHECK(lin.eval(0.0) == 0.0);
    CHECK(std::abs(lin.eval(0.3) - 0.6) < 1e-15);
    CHECK(lin.slope_limit() == 2.0);

    const Majorant at = Majorant::arctan();
    CHECK(at.eval(0.0) == 0.0);
    CHECK(std::abs(at.eval(1.0) - std::atan(1.0)) < 1e-15);
    CHECK(at.slope_limit() == 1.0);

    const Majorant tab = Majorant::table({1.0, 2.0}, {1.0, 1.5});
    CHECK(tab.eval(0.0) == 0.0);
    CHECK(std::abs(tab.eval(0.5) - 0.5) < 1e-15);
    CHECK(std::abs(tab.eval(1.5) - 1.25) < 1e-15);
    CHECK(std::abs(tab.eval(3.0) - 1.5) < 1e-15);
    CHECK(tab.slope_limit() == 1.0);

    CHECK_THROWS_AS(lin.eval(-0.1), DomainError);
}

TEST_CASE("majorant construction rejects malformed data") {
    CHECK_THROWS_AS(Majorant::linear(0.0), DomainError);
    CHECK_THROWS_AS(Majorant::linear(-2.0), DomainError);
    CHECK_THROWS_AS(Majorant::table({}, {}), DomainError);
    CHECK_THROWS_AS(Majorant::table({1.0, 2.0}, {1.0}), DomainError);
    CHECK_THROWS_AS(Majorant::table({2.0, 1.0}, {1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(Majorant::table({-1.0, 2.0}, {1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(Majorant::table({1.0, 2.0}, {-0.5, 1.0}), DomainError);
}

TEST_CASE("majorant axioms validate for admissible shapes") {
    CHECK(majorant_validate(Majorant::linear(1.0)).ok);
    CHECK(majorant_validate(Majorant::arctan()).ok);
    CHECK(majorant_validate(Majorant::table({1.0, 2.0}, {1.0, 1.5})).ok);
}

TEST_CASE("majorant axioms reject concavity and monotonicity violations") {
    // omega(t)/t must not increase: the second knot is too steep here.
    const MajorantCheck steep = majorant_validate(Majorant::table({1.0, 2.0}, {1.0, 3.0}));
    CHECK_FALSE(steep.ok);
    CHECK_FALSE(steep.reasons.empty());

    const MajorantCheck drop = majorant_validate(Majorant::table({1.0, 2.0}, {1.0, 0.5}));
    CHECK_FALSE(drop.ok);
}

TEST_CASE("distance-ratio constant assembles its four contributions") {
    CHECK(std::abs(thm5_constant(0.0, Majorant::linear(1.0), 1.0, 0.0) - 2.0) < 1e-15);
    CHECK(std::abs(thm5_constant(1.0, Majorant::linear(1.0), 0.0, 0.0) - 16.0) < 1e-13);
    CHECK(std::abs(thm5_constant(0.0, Majorant::linear(1.0), 0.0, 48.0) - 23.0) < 1e-13);

    std::mt19937_64 eng(601);
    std::uniform_real_distribution<double> u(0.0, 3.0);
    const Majorant at = Majorant::arctan();
    for (int k = 0; k < 25; ++k) {
        const double l = u(eng), p = u(eng), g = u(eng);
        const double expected = 8.0 * l * at.slope_limit() + 4.0 * l * at.eval(2.0) + 2.0 * p +
                                (23.0 / 48.0) * g;
        CHECK(std::abs(thm5_constant(l, at, p, g) - expected) < 1e-12);
    }
    CHECK_THROWS_AS(thm5_constant(-1.0, at, 0.0, 0.0), DomainError);
}

TEST_CASE("sampled ratio stays under the constant for the pure normal-data solution") {
    const LipschitzReport rep = modulus_estimate(biharmonic_spec(), Majorant::linear(1.0), 2000,
                                                 7001, sweep_rule());
    // The shifted normal data is constant, so its sampled modulus vanishes.
    CHECK(rep.l_est == 0.0);
    CHECK(std::abs(rep.bound - 2.0) < 1e-9);
    CHECK(rep.sup_ratio > 1.0);
    CHECK(rep.sup_ratio <= 2.0 + 1e-6);
    CHECK(rep.pass);
    CHECK(std::abs(rep.margin - (rep.bound - rep.sup_ratio)) < 1e-15);
    CHECK(std::abs(rep.worst_z1) <= defaults::interior_pair_radius + 1e-12);
    CHECK(std::abs(rep.worst_z2) <= defaults::interior_pair_radius + 1e-12);
}

TEST_CASE("sampled ratio stays under the constant for the extremal load") {
    const LipschitzReport rep = modulus_estimate(sharp_spec(), Majorant::linear(1.0), 2000, 7002,
                                                 sweep_rule());
    CHECK(rep.l_est == 0.0);
    CHECK(std::abs(rep.bound - 92.0 / 3.0) < 1e-12);
    CHECK(rep.sup_ratio > 0.5);
    CHECK(rep.pass);
}

TEST_CASE("zero problem reports a zero ratio") {
    const LipschitzReport rep = modulus_estimate(ProblemSpec{}, Majorant::linear(1.0), 50, 7003,
                                                 sweep_rule());
    CHECK(rep.sup_ratio == 0.0);
    CHECK(rep.l_est == 0.0);
    CHECK(rep.bound == 0.0);
    CHECK(rep.pass);
}

TEST_CASE("estimator gates nonvanishing boundary values") {
    ProblemSpec s;
    s.f_star.set(1, Complex{1.0, 0.0});
    try {
        modulus_estimate(s, Majorant::linear(1.0), 10, 7004, sweep_rule());
        CHECK(false);
    } catch (const HypothesisError& e) {
        CHECK(e.gate() == std::string("zero-boundary"));
    }
}

TEST_CASE("estimator gates an invalid majorant") {
    try {
        modulus_estimate(biharmonic_spec(), Majorant::table({1.0, 2.0}, {1.0, 3.0}), 10, 7005,
                         sweep_rule());
        CHECK(false);
    } catch (const HypothesisError& e) {
        CHECK(e.gate() == std::string("majorant"));
    }
    CHECK_THROWS_AS(modulus_estimate(biharmonic_spec(), Majorant::linear(1.0), 0, 7006,
                                     sweep_rule()),
                    DomainError);
}

TEST_CASE("extending the pair budget with the same seed only grows the ratio") {
    const ProblemSpec spec = biharmonic_spec();
    const LipschitzReport small = modulus_estimate(spec, Majorant::linear(1.0), 500, 7007,
                                                   sweep_rule());
    const LipschitzReport large = modulus_estimate(spec, Majorant::linear(1.0), 1000, 7007,
                                                   sweep_rule());
    CHECK(large.sup_ratio >= small.sup_ratio);
    CHECK(large.l_est == small.l_est);
}

TEST_CASE("random vanishing-boundary problems satisfy the sampled bound") {
    std::mt19937_64 eng(602);
    for (int k = 0; k < 16; ++k) {
        const ProblemSpec spec = random_zero_boundary_spec(eng);
        const LipschitzReport rep = modulus_estimate(spec, Majorant::linear(1.0), 1500,
                                                     8000 + static_cast<std::uint64_t>(k),
                                                     sweep_rule());
        CHECK(rep.pass);
        CHECK(rep.sup_ratio <= rep.bound + 1e-6);
        CHECK(std::abs(rep.worst_z1) <= defaults::interior_pair_radius + 1e-12);
    }
}
