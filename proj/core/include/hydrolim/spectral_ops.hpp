#pragma once

#include "hydrolim/spectral_field.hpp"

namespace hydrolim {

enum class Axis { X, Y, Z };

/// Lower anchor of a vertical antiderivative: F(from) = 0.
enum class ZAnchor { MinusOne, Zero };

/// Projection onto the even (odd) part (f(z) +- f(-z))/2, computed in
/// coefficient space.  Idempotent, norm non-increasing.
SpectralField enforce_parity(const SpectralField& f, Parity parity);

/// Residual of the parity projection, ||f - P f||_2.
double parity_residual(const SpectralField& f, Parity parity);

/// Exact spectral differentiation.  Flips the declared parity for Axis::Z.
SpectralField derivative(const SpectralField& f, Axis axis);

/// 2/3-rule dealiasing: zeroes coefficients with |kx| > nx/3, |ky| > ny/3,
/// or |m| > nz/3.  In-place variant provided for tendency assembly.
SpectralField dealias(const SpectralField& f);
void dealias_inplace(SpectralField& f);

/// Solves (Lap_h + eps^-2 d_zz) p = rhs with zero-mean gauge.  The rhs must
/// have zero (0,0,0) mode; eps must be positive.
SpectralField poisson_aniso(const SpectralField& rhs, double eps);

/// Solves -Lap_h p = rhs on M with zero-mean gauge.
SpectralField2D poisson_horizontal(const SpectralField2D& rhs);

/// Returns F with dF/dz = f and F(anchor) = 0.  Requires a vanishing z-mean
/// (m = 0 slab) for every horizontal mode, otherwise F would not be periodic;
/// violations raise PeriodicityError naming the offending (kx,ky) modes.
SpectralField vertical_antiderivative(const SpectralField& f, ZAnchor anchor);

/// z-mean of f as a 2D field on M (the m = 0 coefficient slab).
SpectralField2D z_mean(const SpectralField& f);

/// Spectral inner product Re <f,g>_{L2(Omega)}.
double inner_product(const SpectralField& f, const SpectralField& g);

/// ||grad f||_2^2 and ||Lap f||_2^2 via coefficient sums.  For periodic
/// fields ||grad grad f||_2 = ||Lap f||_2, so the latter also serves the H1
/// norm of a gradient.
double grad_norm_sq(const SpectralField& f);
double laplacian_norm_sq(const SpectralField& f);
/// ||d_z f||_2^2.
double dz_norm_sq(const SpectralField& f);
/// ||grad_h f||_2^2 (horizontal gradient only).
double grad_h_norm_sq(const SpectralField& f);

/// ||f - conj-reflected f||_2, residual of physical-space reality.
double conjugate_symmetry_residual(const SpectralField& f);

class FourierWorkspace;

/// Max |f| on the z = -1 plane (== z = +1 by periodicity).  Used for the
/// w(+-1) = 0 monitor.
double boundary_plane_max(const SpectralField& f, FourierWorkspace& fft);

}  // namespace hydrolim
