#pragma once

#include <vector>

#include "biharm/types.hpp"

namespace biharm {

/// Finite Fourier series on the unit circle,  psi(e^{it}) = sum c_n e^{int},
/// with indices in [-max_index, max_index].  This is both the boundary-data
/// model and the carrier of the harmonic-extension closed forms
///
///     P_psi(z) = sum_{n>=0} c_n z^n + sum_{n<0} c_n conj(z)^{|n|}.
class BoundaryFourier {
public:
    static constexpr int max_index = 512;

    BoundaryFourier() = default;

    /// Sets c_n (replacing any previous value); throws DomainError for
    /// |n| > max_index.
    void set(int n, Complex value);
    Complex coeff(int n) const;

    /// Largest |n| with a stored (possibly zero) coefficient; 0 when empty.
    int degree() const { return degree_; }
    bool is_zero() const;

    /// psi(e^{it}).
    Complex eval(double t) const;

    /// Harmonic extension P_psi(z) and its Wirtinger derivatives, valid for
    /// |z| <= 1 (polynomial in z and conj z).
    Complex extension(Complex z) const;
    Complex extension_dz(Complex z) const;
    Complex extension_dzbar(Complex z) const;

    /// sup_T |psi| by dense sampling (4 degree + 64 equispaced points, exact
    /// to ~1% for admissible degrees and used only where a lower bound of the
    /// true sup is conservative).
    double boundary_sup() const;

    /// Series of psi(e^{it}) e^{ikt}:  index n picks up the old n - k.
    BoundaryFourier shifted(int k) const;

    BoundaryFourier scaled(Complex factor) const;
    BoundaryFourier plus(const BoundaryFourier& other) const;

private:
    // pos_[n] = c_n for n >= 0, neg_[n] = c_{-n} for n >= 1.
    std::vector<Complex> pos_{Complex{}};
    std::vector<Complex> neg_;
    int degree_ = 0;
};

/// Polynomial in w and conj(w):  g(w) = sum a_{jk} w^j conj(w)^k, bidegree
/// bounded by max_bidegree in each variable.  Used for the inhomogeneity.
class BidegreePoly {
public:
    static constexpr int max_bidegree = 16;

    BidegreePoly() = default;
    static BidegreePoly constant(Complex value);

    void set(int j, int k, Complex value);
    Complex coeff(int j, int k) const;
    int bidegree() const { return degree_; }
    bool is_zero() const;

    Complex eval(Complex w) const;

    /// Exact Wirtinger derivatives by index shift.
    BidegreePoly d_w() const;
    BidegreePoly d_wbar() const;
    /// 4 d_w d_wbar.
    BidegreePoly laplacian() const;

    /// sup over the closed disk by polar sampling (includes the r = 1 row);
    /// a lower bound of the true sup, dense enough for admissible bidegrees.
    double disk_sup(int radial = 24, int angular = 96) const;

    BidegreePoly scaled(Complex factor) const;
    BidegreePoly plus(const BidegreePoly& other) const;

private:
    std::vector<Complex> a_;  // (degree_+1) x (degree_+1), row-major in j
    int degree_ = -1;         // -1: empty (identically zero)

    void ensure_degree(int d);
};

}  // namespace biharm
