#pragma once

#include "hydrolim/spectral_field.hpp"
#include "hydrolim/spectral_ops.hpp"

namespace hydrolim {

/// The coupled unknowns (v, w, theta) at one time instant.  v is even in z,
/// w and theta odd.  Pressure is diagnostic and never stored.
struct State {
    SpectralField v1;
    SpectralField v2;
    SpectralField w;
    SpectralField theta;
    double time = 0.0;

    explicit State(const Grid& grid)
        : v1(grid, Parity::Even),
          v2(grid, Parity::Even),
          w(grid, Parity::Odd),
          theta(grid, Parity::Odd) {}

    const Grid& grid() const { return v1.grid(); }

    /// ||div_h v + d_z w||_2, the shared constraint of both systems.
    double divergence_residual() const;

    /// ||grad v||_2 (both components), scale for the relative residual.
    double grad_v_norm() const;

    /// Worst parity-projection residual over the four fields.
    double parity_residual_max() const;

    /// ||div_h of the z-mean of v||_2, the barotropic constraint residual.
    double barotropic_residual() const;

    bool has_nan() const {
        return v1.has_nan() || v2.has_nan() || w.has_nan() || theta.has_nan();
    }
};

/// Difference unknowns (V, W, Phi) = (v_bq - v_pe, w_bq - w_pe, th_bq - th_pe).
struct DifferenceState {
    SpectralField V1;
    SpectralField V2;
    SpectralField W;
    SpectralField Phi;
    double time = 0.0;
};

/// Subtracts two states sampled on the same grid at the same time.
DifferenceState difference(const State& bq, const State& pe);

}  // namespace hydrolim
