#include "hydrolim/spectral_field.hpp"

#include <cmath>

namespace hydrolim {

void require_same_grid(const Grid& a, const Grid& b, const char* where) {
    if (a != b) throw GridMismatchError(std::string(where) + ": grids do not match");
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    require_same_grid(grid_, o.grid_, "SpectralField::operator+=");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    if (parity_ != o.parity_) parity_ = Parity::None;
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    require_same_grid(grid_, o.grid_, "SpectralField::operator-=");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    if (parity_ != o.parity_) parity_ = Parity::None;
    return *this;
}

SpectralField& SpectralField::operator*=(double s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

void SpectralField::axpy(double s, const SpectralField& b) {
    require_same_grid(grid_, b.grid_, "SpectralField::axpy");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += s * b.coeffs_[i];
    if (parity_ != b.parity_) parity_ = Parity::None;
}

double SpectralField::l2_norm_sq() const {
    double s = 0.0;
    for (const auto& c : coeffs_) s += std::norm(c);
    return Grid::volume() * s;
}

double SpectralField::l2_norm() const { return std::sqrt(l2_norm_sq()); }

double SpectralField::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

bool SpectralField::has_nan() const {
    for (const auto& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return true;
    return false;
}

double SpectralField2D::l2_norm() const {
    double s = 0.0;
    for (const auto& c : coeffs_) s += std::norm(c);
    return std::sqrt(Grid::area() * s);
}

}  // namespace hydrolim
