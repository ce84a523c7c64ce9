#pragma once

#include <memory>
#include <vector>

#include "hydrolim/spectral_field.hpp"

namespace hydrolim {

/// FFT engine for one grid.  Owns FFTW plans plus scratch storage, so each
/// worker thread constructs its own instance; plan creation is serialized
/// internally.  Plans use FFTW_ESTIMATE, which keeps runs deterministic.
class FourierWorkspace {
  public:
    explicit FourierWorkspace(const Grid& grid);
    ~FourierWorkspace();

    FourierWorkspace(const FourierWorkspace&) = delete;
    FourierWorkspace& operator=(const FourierWorkspace&) = delete;

    const Grid& grid() const { return grid_; }

    /// Spectral -> physical grid values (real parts; imaginary parts of a
    /// conjugate-symmetric field are roundoff and dropped).
    void to_physical(const SpectralField& f, std::vector<double>& out);

    /// Physical grid values -> normalized spectral coefficients.
    SpectralField to_spectral(const std::vector<double>& values, Parity parity = Parity::None);

    /// 2D variants on the horizontal torus M.
    void to_physical_2d(const SpectralField2D& f, std::vector<double>& out);
    SpectralField2D to_spectral_2d(const std::vector<double>& values);

  private:
    struct Impl;
    Grid grid_;
    std::unique_ptr<Impl> impl_;
};

}  // namespace hydrolim
