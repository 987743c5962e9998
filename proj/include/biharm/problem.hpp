#pragma once

#include "biharm/fourier.hpp"

namespace biharm {

/// One Dirichlet problem for the bilaplacian on the unit disk:
///
///     Delta(Delta f) = g      in the disk,
///     f               = f_star on the circle,
///     d f / d conj(z) = phi    on the circle.
///
/// f_star and phi are finite Fourier series; g is a bidegree polynomial.
/// The normal-derivative data enters the representation formula only through
/// phi1(e^{it}) = phi(e^{it}) e^{-it}, exposed here as the index shift.
struct ProblemSpec {
    BoundaryFourier f_star;
    BoundaryFourier phi;
    BidegreePoly g;

    BoundaryFourier phi1() const { return phi.shifted(-1); }

    /// The solution map is linear in (f_star, phi, g) jointly; these helpers
    /// exist so tests and callers can form admissible combinations.
    ProblemSpec scaled(Complex factor) const {
        return {f_star.scaled(factor), phi.scaled(factor), g.scaled(factor)};
    }
    ProblemSpec plus(const ProblemSpec& other) const {
        return {f_star.plus(other.f_star), phi.plus(other.phi), g.plus(other.g)};
    }
};

}  // namespace biharm
