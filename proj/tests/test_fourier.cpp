#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "biharm/errors.hpp"
#include "biharm/fourier.hpp"
#include "biharm/kernels.hpp"
#include "biharm/quadrature.hpp"

using namespace biharm;

namespace {

BoundaryFourier random_series(std::mt19937_64& eng, int degree, double scale) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    BoundaryFourier psi;
    for (int n = -degree; n <= degree; ++n) psi.set(n, scale * Complex{u(eng), u(eng)});
    return psi;
}

}  // namespace

TEST_CASE("coefficient storage and degree bookkeeping") {
    BoundaryFourier psi;
    CHECK(psi.is_zero());
    CHECK(psi.degree() == 0);
    CHECK(psi.coeff(7) == Complex{0.0, 0.0});
    psi.set(3, Complex{1.0, 2.0});
    CHECK(psi.degree() == 3);
    CHECK_FALSE(psi.is_zero());
    psi.set(-5, Complex{0.5, 0.0});
    CHECK(psi.degree() == 5);
    CHECK(psi.coeff(3) == Complex{1.0, 2.0});
    CHECK(psi.coeff(-5) == Complex{0.5, 0.0});
    CHECK(psi.coeff(-4) == Complex{0.0, 0.0});
    CHECK_THROWS_AS(psi.set(513, Complex{1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(psi.set(-513, Complex{1.0, 0.0}), DomainError);
}

TEST_CASE("circle evaluation matches the defining sum") {
    BoundaryFourier psi;
    psi.set(1, Complex{1.0, 0.0});
    for (double t : {0.0, 0.7, 2.9, -1.3}) {
        CHECK(std::abs(psi.eval(t) - std::polar(1.0, t)) < 1e-15);
    }
    std::mt19937_64 eng(201);
    const BoundaryFourier series = random_series(eng, 6, 0.8);
    for (int k = 0; k < 20; ++k) {
        const double t = 0.39 * k;
        Complex direct{};
        for (int n = -6; n <= 6; ++n) direct += series.coeff(n) * std::polar(1.0, n * t);
        CHECK(std::abs(series.eval(t) - direct) < 1e-13);
    }
}

TEST_CASE("harmonic extension closed forms for single modes") {
    BoundaryFourier c0, c1, cm2;
    c0.set(0, Complex{2.0, -1.0});
    c1.set(1, Complex{1.0, 0.0});
    cm2.set(-2, Complex{1.0, 0.0});
    const Complex z{0.3, -0.4};
    CHECK(std::abs(c0.extension(z) - Complex{2.0, -1.0}) < 1e-15);
    CHECK(std::abs(c1.extension(z) - z) < 1e-15);
    CHECK(std::abs(cm2.extension(z) - std::conj(z) * std::conj(z)) < 1e-15);
}

TEST_CASE("harmonic extension equals the Poisson integral of the data") {
    std::mt19937_64 eng(202);
    const BoundaryFourier psi = random_series(eng, 8, 0.5);
    const auto rule = quad::CircleRule::make(512);
    for (Complex z : {Complex{0.3, -0.2}, Complex{0.0, 0.0}, Complex{-0.6, 0.55}}) {
        const Complex integral = quad::circle_integrate(
            [&](double t) { return kernels::poisson_eval(z, t).value * psi.eval(t); }, rule);
        CHECK(std::abs(integral / two_pi - psi.extension(z)) < 1e-10);
    }
}

TEST_CASE("extension derivatives agree with central differences") {
    std::mt19937_64 eng(203);
    const BoundaryFourier psi = random_series(eng, 5, 0.7);
    const double h = 1e-6;
    for (Complex z : {Complex{0.25, 0.1}, Complex{-0.4, 0.33}, Complex{0.0, -0.7}}) {
        const Complex fx = (psi.extension(z + Complex{h, 0.0}) - psi.extension(z - Complex{h, 0.0})) /
                           (2.0 * h);
        const Complex fy = (psi.extension(z + Complex{0.0, h}) - psi.extension(z - Complex{0.0, h})) /
                           (2.0 * h);
        const Complex fd_dz = 0.5 * (fx - Complex{0.0, 1.0} * fy);
        const Complex fd_dzbar = 0.5 * (fx + Complex{0.0, 1.0} * fy);
        CHECK(std::abs(psi.extension_dz(z) - fd_dz) < 1e-8);
        CHECK(std::abs(psi.extension_dzbar(z) - fd_dzbar) < 1e-8);
    }
}

TEST_CASE("boundary sup estimates the circle supremum from below but closely") {
    BoundaryFourier rot;
    rot.set(1, Complex{1.0, 0.0});
    CHECK(std::abs(rot.boundary_sup() - 1.0) < 1e-12);

    BoundaryFourier c;
    c.set(0, Complex{1.5, -2.0});
    CHECK(std::abs(c.boundary_sup() - 2.5) < 1e-12);

    std::mt19937_64 eng(204);
    for (int trial = 0; trial < 10; ++trial) {
        const BoundaryFourier psi = random_series(eng, 7, 0.6);
        double dense = 0.0;
        for (int k = 0; k < 10000; ++k) dense = std::max(dense, std::abs(psi.eval(two_pi * k / 10000.0)));
        const double est = psi.boundary_sup();
        CHECK(est <= dense + 1e-12);
        CHECK(dense <= est * 1.01);
    }
}

TEST_CASE("index shift multiplies the data by a circle harmonic") {
    BoundaryFourier phi;
    phi.set(1, Complex{-1.0, 0.0});
    const BoundaryFourier phi1 = phi.shifted(-1);
    CHECK(phi1.degree() == 0);
    CHECK(phi1.coeff(0) == Complex{-1.0, 0.0});

    std::mt19937_64 eng(205);
    const BoundaryFourier psi = random_series(eng, 4, 0.9);
    for (int k : {-2, -1, 1, 3}) {
        const BoundaryFourier sh = psi.shifted(k);
        for (double t : {0.31, 1.7, 4.4}) {
            CHECK(std::abs(sh.eval(t) - psi.eval(t) * std::polar(1.0, k * t)) < 1e-13);
        }
    }
}

TEST_CASE("series scaling and addition act pointwise") {
    std::mt19937_64 eng(206);
    const BoundaryFourier a = random_series(eng, 4, 1.0);
    const BoundaryFourier b = random_series(eng, 6, 0.5);
    const Complex factor{0.3, -1.2};
    const BoundaryFourier sum = a.plus(b);
    const BoundaryFourier sc = a.scaled(factor);
    for (double t : {0.0, 0.9, 2.2, 5.5}) {
        CHECK(std::abs(sum.eval(t) - (a.eval(t) + b.eval(t))) < 1e-13);
        CHECK(std::abs(sc.eval(t) - factor * a.eval(t)) < 1e-13);
    }
}

TEST_CASE("bidegree polynomial evaluation and bookkeeping") {
    BidegreePoly g;
    CHECK(g.is_zero());
    CHECK(g.bidegree() == -1);
    CHECK(g.eval(Complex{0.3, 0.4}) == Complex{0.0, 0.0});

    const BidegreePoly c = BidegreePoly::constant(Complex{3.0, -1.0});
    CHECK(c.bidegree() == 0);
    CHECK(c.eval(Complex{0.9, 0.1}) == Complex{3.0, -1.0});

    BidegreePoly q;
    q.set(1, 1, Complex{1.0, 0.0});  // |w|^2
    const Complex w{0.3, -0.5};
    CHECK(std::abs(q.eval(w) - Complex{abs2(w), 0.0}) < 1e-15);

    CHECK_THROWS_AS(q.set(17, 0, Complex{1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(q.set(0, 17, Complex{1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(q.set(-1, 0, Complex{1.0, 0.0}), DomainError);
}

TEST_CASE("bidegree polynomial derivatives shift indices exactly") {
    BidegreePoly q;
    q.set(1, 1, Complex{1.0, 0.0});
    q.set(2, 0, Complex{0.0, 2.0});
    const BidegreePoly dw = q.d_w();
    CHECK(dw.coeff(0, 1) == Complex{1.0, 0.0});
    CHECK(dw.coeff(1, 0) == Complex{0.0, 4.0});
    const BidegreePoly dwbar = q.d_wbar();
    CHECK(dwbar.coeff(1, 0) == Complex{1.0, 0.0});
    CHECK(dwbar.coeff(2, 0) == Complex{0.0, 0.0});

    // Laplacian of |w|^2 is the constant 4.
    const BidegreePoly lap = q.laplacian();
    CHECK(lap.coeff(0, 0) == Complex{4.0, 0.0});
    CHECK(BidegreePoly::constant(Complex{5.0, 0.0}).laplacian().is_zero());
}

TEST_CASE("bidegree polynomial derivative matches central differences") {
    std::mt19937_64 eng(207);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    BidegreePoly q;
    for (int j = 0; j <= 2; ++j)
        for (int k = 0; k <= 2; ++k) q.set(j, k, Complex{u(eng), u(eng)});
    const double h = 1e-6;
    for (Complex w : {Complex{0.2, 0.6}, Complex{-0.5, -0.1}}) {
        const Complex fx = (q.eval(w + Complex{h, 0.0}) - q.eval(w - Complex{h, 0.0})) / (2.0 * h);
        const Complex fy = (q.eval(w + Complex{0.0, h}) - q.eval(w - Complex{0.0, h})) / (2.0 * h);
        CHECK(std::abs(q.d_w().eval(w) - 0.5 * (fx - Complex{0.0, 1.0} * fy)) < 1e-8);
        CHECK(std::abs(q.d_wbar().eval(w) - 0.5 * (fx + Complex{0.0, 1.0} * fy)) < 1e-8);
    }
}

TEST_CASE("disk supremum sampling reaches the boundary row") {
    BidegreePoly q;
    q.set(1, 1, Complex{1.0, 0.0});  // sup over the closed disk is 1, attained only at |w| = 1
    CHECK(std::abs(q.disk_sup() - 1.0) < 1e-12);

    BidegreePoly lin;
    lin.set(1, 0, Complex{1.0, 0.0});
    CHECK(std::abs(lin.disk_sup() - 1.0) < 1e-12);

    CHECK(std::abs(BidegreePoly::constant(Complex{3.0, 4.0}).disk_sup() - 5.0) < 1e-12);
}

TEST_CASE("bidegree polynomial scaling and addition act pointwise") {
    std::mt19937_64 eng(208);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    BidegreePoly a, b;
    for (int j = 0; j <= 2; ++j)
        for (int k = 0; k <= 1; ++k) {
            a.set(j, k, Complex{u(eng), u(eng)});
            b.set(k, j, Complex{u(eng), u(eng)});
        }
    const Complex factor{-0.4, 0.9};
    for (Complex w : {Complex{0.5, 0.2}, Complex{-0.3, 0.8}}) {
        CHECK(std::abs(a.plus(b).eval(w) - (a.eval(w) + b.eval(w))) < 1e-14);
        CHECK(std::abs(a.scaled(factor).eval(w) - factor * a.eval(w)) < 1e-14);
    }
}
