#pragma once

#include "hydrolim/initial_data.hpp"
#include "hydrolim/stepper_common.hpp"

namespace hydrolim {

/// Total pressure p(x,y,z) = p_nu(x,y) + int_0^z theta dxi.  Requires theta
/// odd in z; the result is even with d_z p = theta and p(0) = p_nu.
SpectralField hydrostatic_pressure(const SpectralField& theta, const SpectralField2D& p_nu);

/// Surface pressure from the 2D elliptic problem (mean-zero gauge):
///   -Lap_h p_nu = (1/2) int_-1^1 div_h [ div_h (v (x) v) + grad_h int_0^z theta dxi ] dz.
/// Fourier-space solve; the products are dealiased like every other
/// quadratic term.
SpectralField2D surface_pressure(FourierWorkspace& fft, const SpectralField& v1,
                                 const SpectralField& v2, const SpectralField& theta);

/// The same quantity obtained by projecting the z-averaged (barotropic)
/// momentum tendency; independent code path used as a cross-check.
SpectralField2D surface_pressure_via_projection(FourierWorkspace& fft, const State& s);

/// Time integrator for the primitive equations with full viscosity and full
/// diffusion in the surface-pressure form:
///   d_t v - Lap v + (v.grad_h)v + w d_z v + grad_h p_nu + grad_h int_0^z theta = 0
///   d_t th - Lap th + u.grad th = 0
///   w diagnosed from v, p hydrostatic.
class PrimitiveStepper {
  public:
    PrimitiveStepper(const Grid& grid, double dt, StepperOptions options = {},
                     Forcing forcing = {});

    const Grid& grid() const { return fft_.grid(); }
    double dt() const { return dt_; }
    Scheme scheme() const { return Scheme::ImexCnRk2; }

    /// Advances one step; w is re-diagnosed, never prognosed.  Blow-up here
    /// indicates a numerical fault: the continuous system is globally
    /// regular, and the error message says so.
    State step(const State& s);

    /// Surface pressure of the current tendency (projection route).
    SpectralField2D surface_pressure_of(const State& s) {
        return surface_pressure_via_projection(fft_, s);
    }

    /// Max |d_z p - theta| coefficient for the hydrostatic-balance monitor.
    double hydrostatic_residual(const State& s);

    const StepDiagnostics& last_diagnostics() const { return diag_; }

  private:
    double dt_;
    StepperOptions options_;
    Forcing forcing_;
    FourierWorkspace fft_;
    detail::NormHistory history_;
    StepDiagnostics diag_;

    struct VTendency {
        SpectralField n_v1;
        SpectralField n_v2;
        SpectralField n_theta;
    };

    VTendency tendency_at(const State& s, double t, double* umax_out);
    void check_health(const State& s, double umax);
};

}  // namespace hydrolim
