#pragma once

#include <complex>
#include <vector>

#include "hydrolim/grid.hpp"

namespace hydrolim {

using Complex = std::complex<double>;

/// Declared symmetry of a field with respect to z -> -z.
enum class Parity { Even, Odd, None };

inline Parity flip(Parity p) {
    switch (p) {
        case Parity::Even: return Parity::Odd;
        case Parity::Odd: return Parity::Even;
        default: return Parity::None;
    }
}

/// One scalar unknown stored as Fourier coefficients.  The expansion is
///   f(x,y,z) = sum f_hat(kx,ky,m) exp(i kx x) exp(i ky y) exp(i pi m (z+1)),
/// so physical-space reality corresponds to the usual conjugate symmetry
/// f_hat(-kx,-ky,-m) = conj(f_hat(kx,ky,m)).
class SpectralField {
  public:
    explicit SpectralField(const Grid& grid, Parity parity = Parity::None)
        : grid_(grid), parity_(parity), coeffs_(grid.size(), Complex{0.0, 0.0}) {}

    const Grid& grid() const { return grid_; }
    Parity parity() const { return parity_; }
    void set_parity(Parity p) { parity_ = p; }

    Complex& operator()(int ix, int iy, int iz) { return coeffs_[grid_.index(ix, iy, iz)]; }
    const Complex& operator()(int ix, int iy, int iz) const {
        return coeffs_[grid_.index(ix, iy, iz)];
    }

    Complex* data() { return coeffs_.data(); }
    const Complex* data() const { return coeffs_.data(); }
    std::size_t size() const { return coeffs_.size(); }

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double s);

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(double s, SpectralField f) { return f *= s; }

    /// a += s*b (grids must match).
    void axpy(double s, const SpectralField& b);

    /// Mean over Omega, i.e. the (0,0,0) coefficient.
    Complex mean() const { return coeffs_[0]; }

    /// L2(Omega) norm via Parseval: |Omega| * sum |f_hat|^2.
    double l2_norm() const;
    double l2_norm_sq() const;

    /// Largest coefficient magnitude.
    double max_abs_coeff() const;

    bool has_nan() const;

  private:
    Grid grid_;
    Parity parity_;
    std::vector<Complex> coeffs_;
};

/// 2D field on the horizontal torus M, same coefficient conventions.
class SpectralField2D {
  public:
    explicit SpectralField2D(const Grid& grid)
        : grid_(grid), coeffs_(grid.size_2d(), Complex{0.0, 0.0}) {}

    const Grid& grid() const { return grid_; }

    Complex& operator()(int ix, int iy) { return coeffs_[grid_.index_2d(ix, iy)]; }
    const Complex& operator()(int ix, int iy) const { return coeffs_[grid_.index_2d(ix, iy)]; }

    Complex* data() { return coeffs_.data(); }
    const Complex* data() const { return coeffs_.data(); }
    std::size_t size() const { return coeffs_.size(); }

    Complex mean() const { return coeffs_[0]; }
    double l2_norm() const;

  private:
    Grid grid_;
    std::vector<Complex> coeffs_;
};

void require_same_grid(const Grid& a, const Grid& b, const char* where);

}  // namespace hydrolim
