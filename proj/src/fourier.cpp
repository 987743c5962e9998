#include "biharm/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "biharm/errors.hpp"

namespace biharm {

void BoundaryFourier::set(int n, Complex value) {
    const int a = std::abs(n);
    if (a > max_index)
        throw DomainError("Fourier index " + std::to_string(n) + " exceeds the limit " +
                          std::to_string(max_index));
    if (n >= 0) {
        if (static_cast<int>(pos_.size()) <= n) pos_.resize(n + 1, Complex{});
        pos_[n] = value;
    } else {
        if (static_cast<int>(neg_.size()) < a) neg_.resize(a, Complex{});
        neg_[a - 1] = value;
    }
    degree_ = std::max(degree_, a);
}

Complex BoundaryFourier::coeff(int n) const {
    if (n >= 0)
        return n < static_cast<int>(pos_.size()) ? pos_[n] : Complex{};
    const int a = -n;
    return a <= static_cast<int>(neg_.size()) ? neg_[a - 1] : Complex{};
}

bool BoundaryFourier::is_zero() const {
    for (const Complex& c : pos_)
        if (c != Complex{}) return false;
    for (const Complex& c : neg_)
        if (c != Complex{}) return false;
    return true;
}

Complex BoundaryFourier::eval(double t) const {
    const Complex u{std::cos(t), std::sin(t)};
    // Horner in u over nonnegative indices, in conj(u) over negative ones.
    Complex acc_pos{};
    for (int n = static_cast<int>(pos_.size()) - 1; n >= 0; --n) acc_pos = acc_pos * u + pos_[n];
    Complex acc_neg{};
    const Complex ubar = std::conj(u);
    for (int n = static_cast<int>(neg_.size()) - 1; n >= 0; --n) acc_neg = acc_neg * ubar + neg_[n];
    return acc_pos + acc_neg * ubar;
}

Complex BoundaryFourier::extension(Complex z) const {
    Complex acc_pos{};
    for (int n = static_cast<int>(pos_.size()) - 1; n >= 0; --n) acc_pos = acc_pos * z + pos_[n];
    Complex acc_neg{};
    const Complex zbar = std::conj(z);
    for (int n = static_cast<int>(neg_.size()) - 1; n >= 0; --n)
        acc_neg = acc_neg * zbar + neg_[n];
    return acc_pos + acc_neg * zbar;
}

Complex BoundaryFourier::extension_dz(Complex z) const {
    // d/dz sum_{n>=0} c_n z^n = sum_{n>=1} n c_n z^{n-1}
    Complex acc{};
    for (int n = static_cast<int>(pos_.size()) - 1; n >= 1; --n)
        acc = acc * z + static_cast<double>(n) * pos_[n];
    return acc;
}

Complex BoundaryFourier::extension_dzbar(Complex z) const {
    const Complex zbar = std::conj(z);
    Complex acc{};
    for (int n = static_cast<int>(neg_.size()); n >= 1; --n)
        acc = acc * zbar + static_cast<double>(n) * neg_[n - 1];
    return acc;
}

double BoundaryFourier::boundary_sup() const {
    const int samples = 4 * std::max(degree_, 1) + 64;
    double sup = 0.0;
    for (int k = 0; k < samples; ++k)
        sup = std::max(sup, std::abs(eval(two_pi * static_cast<double>(k) / samples)));
    return sup;
}

BoundaryFourier BoundaryFourier::shifted(int k) const {
    BoundaryFourier out;
    for (int n = -static_cast<int>(neg_.size()); n < static_cast<int>(pos_.size()); ++n) {
        const Complex c = coeff(n);
        if (c != Complex{}) out.set(n + k, c);
    }
    return out;
}

BoundaryFourier BoundaryFourier::scaled(Complex factor) const {
    BoundaryFourier out = *this;
    for (Complex& c : out.pos_) c *= factor;
    for (Complex& c : out.neg_) c *= factor;
    return out;
}

BoundaryFourier BoundaryFourier::plus(const BoundaryFourier& other) const {
    BoundaryFourier out = *this;
    for (int n = -static_cast<int>(other.neg_.size()); n < static_cast<int>(other.pos_.size());
         ++n) {
        const Complex c = other.coeff(n);
        if (c != Complex{}) out.set(n, out.coeff(n) + c);
    }
    return out;
}

BidegreePoly BidegreePoly::constant(Complex value) {
    BidegreePoly p;
    p.set(0, 0, value);
    return p;
}

void BidegreePoly::ensure_degree(int d) {
    if (d <= degree_) return;
    std::vector<Complex> grown(static_cast<std::size_t>(d + 1) * (d + 1), Complex{});
    for (int j = 0; j <= degree_; ++j)
        for (int k = 0; k <= degree_; ++k)
            grown[static_cast<std::size_t>(j) * (d + 1) + k] =
                a_[static_cast<std::size_t>(j) * (degree_ + 1) + k];
    a_ = std::move(grown);
    degree_ = d;
}

void BidegreePoly::set(int j, int k, Complex value) {
    if (j < 0 || k < 0) throw DomainError("polynomial exponents must be nonnegative");
    if (j > max_bidegree || k > max_bidegree)
        throw DomainError("polynomial bidegree exceeds the limit " +
                          std::to_string(max_bidegree));
    ensure_degree(std::max(j, k));
    a_[static_cast<std::size_t>(j) * (degree_ + 1) + k] = value;
}

Complex BidegreePoly::coeff(int j, int k) const {
    if (j < 0 || k < 0 || j > degree_ || k > degree_) return Complex{};
    return a_[static_cast<std::size_t>(j) * (degree_ + 1) + k];
}

bool BidegreePoly::is_zero() const {
    for (const Complex& c : a_)
        if (c != Complex{}) return false;
    return true;
}

Complex BidegreePoly::eval(Complex w) const {
    if (degree_ < 0) return Complex{};
    // Horner over j with inner Horner over k in conj(w).
    const Complex wbar = std::conj(w);
    Complex acc{};
    for (int j = degree_; j >= 0; --j) {
        Complex row{};
        for (int k = degree_; k >= 0; --k)
            row = row * wbar + a_[static_cast<std::size_t>(j) * (degree_ + 1) + k];
        acc = acc * w + row;
    }
    return acc;
}

BidegreePoly BidegreePoly::d_w() const {
    BidegreePoly out;
    for (int j = 1; j <= degree_; ++j)
        for (int k = 0; k <= degree_; ++k) {
            const Complex c = coeff(j, k);
            if (c != Complex{}) out.set(j - 1, k, static_cast<double>(j) * c);
        }
    return out;
}

BidegreePoly BidegreePoly::d_wbar() const {
    BidegreePoly out;
    for (int j = 0; j <= degree_; ++j)
        for (int k = 1; k <= degree_; ++k) {
            const Complex c = coeff(j, k);
            if (c != Complex{}) out.set(j, k - 1, static_cast<double>(k) * c);
        }
    return out;
}

BidegreePoly BidegreePoly::laplacian() const {
    BidegreePoly out = d_w().d_wbar();
    return out.scaled(4.0);
}

double BidegreePoly::disk_sup(int radial, int angular) const {
    if (degree_ < 0) return 0.0;
    double sup = 0.0;
    for (int i = 0; i < radial; ++i) {
        const double r = radial > 1 ? static_cast<double>(i) / (radial - 1) : 1.0;
        for (int k = 0; k < angular; ++k) {
            const double t = two_pi * static_cast<double>(k) / angular;
            sup = std::max(sup, std::abs(eval(Complex{r * std::cos(t), r * std::sin(t)})));
        }
    }
    return sup;
}

BidegreePoly BidegreePoly::scaled(Complex factor) const {
    BidegreePoly out = *this;
    for (Complex& c : out.a_) c *= factor;
    return out;
}

BidegreePoly BidegreePoly::plus(const BidegreePoly& other) const {
    BidegreePoly out = *this;
    for (int j = 0; j <= other.degree_; ++j)
        for (int k = 0; k <= other.degree_; ++k) {
            const Complex c = other.coeff(j, k);
            if (c != Complex{}) out.set(j, k, out.coeff(j, k) + c);
        }
    return out;
}

}  // namespace biharm
