#pragma once

#include <cstddef>
#include <numbers>

#include "hydrolim/errors.hpp"

namespace hydrolim {

inline constexpr double kPi = std::numbers::pi;

/// Periodic box [0,2pi)^2 x [-1,1).  Horizontal wavenumbers are integers,
/// vertical wavenumbers are pi*m with integer m.  Coefficients are stored
/// row-major with z fastest: index = (ix*ny + iy)*nz + iz.
class Grid {
  public:
    Grid(int nx, int ny, int nz) : nx_(nx), ny_(ny), nz_(nz) {
        if (nx < 4 || ny < 4 || nz < 4 || nx % 2 || ny % 2 || nz % 2)
            throw ParameterError("grid sizes must be even and >= 4");
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nz() const { return nz_; }
    std::size_t size() const { return static_cast<std::size_t>(nx_) * ny_ * nz_; }
    std::size_t size_2d() const { return static_cast<std::size_t>(nx_) * ny_; }

    /// |Omega| = (2pi)^2 * 2.
    static constexpr double volume() { return 8.0 * kPi * kPi; }
    /// |M| = (2pi)^2.
    static constexpr double area() { return 4.0 * kPi * kPi; }

    std::size_t index(int ix, int iy, int iz) const {
        return (static_cast<std::size_t>(ix) * ny_ + iy) * nz_ + iz;
    }
    std::size_t index_2d(int ix, int iy) const {
        return static_cast<std::size_t>(ix) * ny_ + iy;
    }

    /// Signed wavenumber for array index j in a length-n transform.
    static int wavenumber(int j, int n) { return j < n / 2 ? j : j - n; }

    int kx(int ix) const { return wavenumber(ix, nx_); }
    int ky(int iy) const { return wavenumber(iy, ny_); }
    /// Integer vertical mode m; the physical wavenumber is pi*m.
    int mz(int iz) const { return wavenumber(iz, nz_); }

    /// Array index holding the coefficient of vertical mode -m(iz).
    int reflect_z(int iz) const { return iz == 0 ? 0 : nz_ - iz; }

    /// 2/3-rule cutoffs: modes with |k| > n/3 are discarded.
    int cut_x() const { return nx_ / 3; }
    int cut_y() const { return ny_ / 3; }
    int cut_z() const { return nz_ / 3; }

    bool retained(int ix, int iy, int iz) const {
        return std::abs(kx(ix)) <= cut_x() && std::abs(ky(iy)) <= cut_y() &&
               std::abs(mz(iz)) <= cut_z();
    }

    /// Largest wavenumber magnitude surviving the dealias mask (per axis,
    /// with the pi factor on z); used for the advective CFL estimate.
    double max_wavenumber() const {
        double k = static_cast<double>(cut_x());
        if (cut_y() > k) k = cut_y();
        if (kPi * cut_z() > k) k = kPi * cut_z();
        return k;
    }

    /// Physical coordinates of grid point (ix,iy,iz).
    double x(int ix) const { return 2.0 * kPi * ix / nx_; }
    double y(int iy) const { return 2.0 * kPi * iy / ny_; }
    double z(int iz) const { return -1.0 + 2.0 * iz / static_cast<double>(nz_); }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.nz_ == b.nz_;
    }
    friend bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }

  private:
    int nx_;
    int ny_;
    int nz_;
};

}  // namespace hydrolim
